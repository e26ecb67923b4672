#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "osc/field.hpp"
#include "osc/heisenberg.hpp"
#include "osc/signal.hpp"

namespace osc {

/// 2x2 matrix over F_p with determinant 1, row-major (a b; c d).
struct SL2Element {
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    std::int64_t p = 0;

    SL2Element() = default;
    SL2Element(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_,
               const PrimeModulus& mod);

    std::int64_t det() const { return (((a * d - b * c) % p) + p) % p; }
    std::int64_t trace() const { return (a + d) % p; }

    SL2Element operator*(const SL2Element& o) const;
    SL2Element inverse() const;
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    std::int64_t order() const;

    /// Action on the time-frequency plane: (tau, w) as a column vector.
    std::pair<std::int64_t, std::int64_t> apply(std::int64_t tau, std::int64_t w) const;

    std::array<std::int64_t, 4> entries() const { return {a, b, c, d}; }
    auto operator<=>(const SL2Element& o) const = default;
};

SL2Element sl2_identity(const PrimeModulus& mod);
SL2Element weyl_element(const PrimeModulus& mod);

/// The Weil representation rho : SL_2(F_p) -> U(C(F_p)), built from the three
/// generators (scaling, quadratic modulation, normalized Fourier transform)
/// through the Bruhat decomposition. The Fourier normalization nu is
/// calibrated per modulus from the braid relation
///   w = u(1) l(-1) u(1),  u upper-unipotent, l lower-unipotent,
/// which determines it uniquely; the result is a genuine (not just
/// projective) homomorphism, which the test suite verifies numerically.
class WeilRepresentation {
  public:
    explicit WeilRepresentation(const PrimeModulus& mod);

    const PrimeModulus& modulus() const { return mod_; }
    cplx nu() const { return nu_; }

    /// rho_a phi(t) = sigma(a) phi(a^{-1} t); the image of diag(a, a^{-1}).
    CMat scaling(std::int64_t a) const;
    /// rho_T phi(t) = psi(t^2) phi(t); the image of (1 0; -2 1).
    CMat quadratic_modulation() const;
    /// Family member phi(t) -> psi(beta t^2) phi(t); the image of (1 0; -2 beta 1).
    CMat quadratic_modulation(std::int64_t beta) const;
    /// rho_S phi(t) = (nu / sqrt p) sum_s psi(t s) phi(s); the image of the
    /// Weyl element (0 1; -1 0).
    CMat fourier() const;

    /// rho(g) for arbitrary g, via the Bruhat factorization. Cached per g.
    const CMat& operator()(const SL2Element& g) const;

    /// Uncached variant for bulk sweeps over many distinct g.
    CMat matrix(const SL2Element& g) const;

    /// max over a spanning set of (v, z) of ||rho(g) pi(v,z) - pi(gv,z) rho(g)||.
    double egorov_residual(const SL2Element& g) const;

  private:
    CMat build(const SL2Element& g) const;
    void calibrate();

    PrimeModulus mod_;
    cplx nu_{1.0, 0.0};
    CMat plain_fourier_;  // entries psi(ts)/sqrt(p), before nu
    mutable std::map<std::array<std::int64_t, 4>, CMat> cache_;
};

}  // namespace osc
