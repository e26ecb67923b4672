#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "osc/field.hpp"

namespace osc {

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

enum class SystemKind {
    heisenberg,
    split_oscillator,
    nonsplit_oscillator,
    oscillator,
    extended,
    standard,
    external,
};

std::string to_string(SystemKind k);
SystemKind system_kind_from_string(const std::string& s);

/// Records which construction produced a signal.
struct Provenance {
    enum class Type { external, standard_character, line_character, torus_character, translate };
    Type type = Type::external;
    std::int64_t group_id = -1;    // line id or torus id (or base signal id for translates)
    std::int64_t character = -1;   // character index against the recorded generator
    std::int64_t tau = 0, w = 0;   // translate keys (extended system only)
    std::string label;

    std::string key() const;
};

/// Unit vector in C(F_p) tagged with its provenance.
struct Signal {
    CVec coeffs;
    std::int64_t p = 0;
    Provenance provenance;

    double norm() const { return coeffs.norm(); }
};

/// Rotate v so its first nonzero coordinate (lowest index) is real positive.
void fix_phase(CVec& v, double zero_tol = 1e-8);

struct TorusRecord {
    std::int64_t id = -1;
    std::string kind;                      // "split" | "nonsplit"
    std::int64_t order = 0;
    std::array<std::int64_t, 4> generator{1, 0, 0, 1};
    std::vector<std::int64_t> character_multiplicity;  // indexed by character k
};

struct SignalDictionary {
    std::int64_t p = 0;
    SystemKind kind = SystemKind::external;
    std::vector<Signal> signals;
    std::vector<TorusRecord> tori;   // metadata for torus-derived dictionaries
    cplx nu{1.0, 0.0};               // Weil normalization used during construction
    std::string phase_convention = "first-nonzero-real-positive";

    std::size_t size() const { return signals.size(); }
};

}  // namespace osc
