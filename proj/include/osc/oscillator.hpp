#pragma once

#include <cstdint>
#include <vector>

#include "osc/tori.hpp"
#include "osc/weil.hpp"

namespace osc {

/// The model system B_std: one unit signal chi(t)/sqrt(p-1) (vanishing at 0)
/// per nontrivial multiplicative character chi, indexed 1..p-2 against the
/// smallest primitive root.
SignalDictionary standard_basis_system(const PrimeModulus& mod);

struct TorusEigenbasis {
    const Torus* torus = nullptr;
    std::vector<Signal> signals;                 // one per 1-dimensional character space
    std::vector<std::int64_t> multiplicity;     // per character index k in [0, |T|)
};

/// Eigenbasis B_T: diagonalize rho(g0), snap eigenvalues to |T|-th roots of
/// unity, keep one phase-fixed unit vector per one-dimensional eigenspace.
/// The sigma character space (multiplicity 2 in the split case) drops out by
/// the multiplicity filter.
TorusEigenbasis torus_eigenbasis(const WeilRepresentation& rho, const Torus& torus);

enum class OscillatorKind { split, nonsplit, both };

/// Union of B_T over all enumerated tori of the requested kind(s), in torus id
/// then character order. No cross-torus deduplication is performed.
SignalDictionary build_oscillator_system(const WeilRepresentation& rho,
                                         const std::vector<Torus>& tori, OscillatorKind kind);

/// The extended system S_E = {M_w L_tau phi}: p^2 translates of every base
/// signal, materialized lazily from (tau, w, base index) keys.
class ExtendedSystem {
  public:
    ExtendedSystem(SignalDictionary base, const PrimeModulus& mod);

    std::int64_t p() const { return mod_.p(); }
    std::size_t base_size() const { return base_.size(); }
    std::size_t size() const { return base_.size() * static_cast<std::size_t>(mod_.p()) *
                                      static_cast<std::size_t>(mod_.p()); }

    /// Signal index layout: idx = (tau * p + w) * base_size + base_idx.
    Signal signal(std::size_t idx) const;
    Signal signal(std::int64_t tau, std::int64_t w, std::size_t base_idx) const;

    const SignalDictionary& base() const { return base_; }

  private:
    SignalDictionary base_;
    PrimeModulus mod_;
};

}  // namespace osc
