#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "osc/oscillator.hpp"
#include "osc/signal.hpp"

namespace osc {

struct Witness {
    std::int64_t signal_a = -1;
    std::int64_t signal_b = -1;  // -1 for autocorrelation
    std::int64_t tau = 0, w = 0;
    double value = 0.0;
};

struct AutocorrelationSection {
    double bound = 0.0;          // 2 / sqrt(p)
    double tolerance = 1e-9;
    double global_max = 0.0;     // max over signals of max off-origin |A|
    std::vector<double> per_signal_max;
    Witness witness;
    bool origin_ok = true;       // |A(0,0)| = 1 for every signal
    bool pass = false;
};

struct CrosscorrelationSection {
    double bound = 0.0;          // 4 / sqrt(p)
    double tolerance = 1e-9;
    double global_max = 0.0;
    Witness witness;
    std::uint64_t cells_evaluated = 0;
    std::uint64_t cells_total = 0;
    bool sampled = false;
    std::uint64_t seed = 0;
    bool pass = false;
};

struct SupremumSection {
    double bound = 0.0;          // 2 / sqrt(p)
    double tolerance = 1e-9;
    double global_max_sup = 0.0;
    std::vector<double> per_signal_sup;
    std::vector<double> per_signal_papr;  // p * max|phi(t)|^2
    std::int64_t witness_signal = -1;
    bool pass = false;
    // Heisenberg-style check: every |phi(t)| = 1/sqrt(p) within 1e-10.
    double max_unimodular_deviation = 0.0;
    bool unimodular = false;
};

struct FourierInvarianceSection {
    double min_overlap = 1.0;    // min over signals of max |<u, rho(w) phi>|
    std::int64_t witness_signal = -1;
    bool pass = false;
    // signals of tori containing the Weyl element are rho(w)-eigenvectors
    double min_self_overlap = 1.0;
    std::int64_t weyl_tori_checked = 0;
    bool eigenvector_pass = false;
};

struct HeisenbergSection {
    double max_line_pattern_error = 0.0;  // |A| vs characteristic function of the line
    double cross_bound = 0.0;             // 1 / sqrt(p)
    double max_cross = 0.0;               // over pairs from different lines
    Witness cross_witness;
    double max_unimodular_deviation = 0.0;
    bool pass = false;
};

struct CorrelationReport {
    std::string dictionary_id;
    std::int64_t p = 0;
    SystemKind kind = SystemKind::external;
    std::optional<AutocorrelationSection> autocorrelation;
    std::optional<CrosscorrelationSection> crosscorrelation;
    std::optional<SupremumSection> supremum;
    std::optional<FourierInvarianceSection> fourier;
    std::optional<HeisenbergSection> heisenberg;

    bool all_pass() const;
};

struct VerifyOptions {
    double tolerance = 1e-9;
    std::uint64_t pair_budget = 10'000'000;  // (pair, shift) cells for the cross sweep
    std::uint64_t seed = 0;                  // sampling seed above the budget
    int threads = 1;
};

AutocorrelationSection verify_autocorrelation(const SignalDictionary& dict,
                                              const PrimeModulus& mod,
                                              const VerifyOptions& opt = {});

CrosscorrelationSection verify_crosscorrelation(const SignalDictionary& dict,
                                                const PrimeModulus& mod,
                                                const VerifyOptions& opt = {});

SupremumSection verify_supremum_and_papr(const SignalDictionary& dict, const PrimeModulus& mod,
                                         const VerifyOptions& opt = {});

FourierInvarianceSection verify_fourier_invariance(const SignalDictionary& dict,
                                                   const WeilRepresentation& rho,
                                                   const std::vector<Torus>& tori,
                                                   const VerifyOptions& opt = {});

HeisenbergSection verify_heisenberg_properties(const SignalDictionary& dict,
                                               const PrimeModulus& mod,
                                               const VerifyOptions& opt = {});

/// Max over (tau, w) != (0,0) of |<phi, pi(tau,w,0) phi>|, with witness.
std::pair<double, Witness> ambiguity_max_off_origin(const Signal& phi, const PrimeModulus& mod);

/// Max over all (tau, w) of |<phi, pi(tau,w,0) psi>|, with witness.
std::pair<double, Witness> cross_ambiguity_max(const Signal& phi, const Signal& psi,
                                               const PrimeModulus& mod);

}  // namespace osc
