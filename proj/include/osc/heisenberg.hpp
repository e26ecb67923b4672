#pragma once

#include <cstdint>
#include <vector>

#include "osc/field.hpp"
#include "osc/signal.hpp"

namespace osc {

/// Element (tau, w, z) of the Heisenberg group H = V x F_p under the twisted
/// product (tau,w,z)(tau',w',z') = (tau+tau', w+w', z+z'+ (tau w' - tau' w)/2).
struct HeisenbergElement {
    std::int64_t tau = 0, w = 0, z = 0;
    std::int64_t p = 0;

    HeisenbergElement() = default;
    HeisenbergElement(std::int64_t tau_, std::int64_t w_, std::int64_t z_, const PrimeModulus& mod)
        : tau(mod.reduce(tau_)), w(mod.reduce(w_)), z(mod.reduce(z_)), p(mod.p()) {}

    HeisenbergElement operator*(const HeisenbergElement& o) const;
    HeisenbergElement inverse() const;
    bool is_identity() const { return tau == 0 && w == 0 && z == 0; }
    bool operator==(const HeisenbergElement& o) const {
        return tau == o.tau && w == o.w && z == o.z && p == o.p;
    }
};

/// Line through the origin of the time-frequency plane V, canonicalized so the
/// first nonzero coordinate is 1. There are exactly p+1 lines.
struct Line {
    std::int64_t alpha = 0, beta = 0;  // canonical direction
    std::int64_t id = -1;              // (1,s) -> s, (0,1) -> p
};

std::vector<Line> all_lines(const PrimeModulus& mod);

/// (L_tau s)(t) = s(t + tau).
Signal time_shift(std::int64_t tau, const Signal& s);
/// (M_w s)(t) = psi(w t) s(t).
Signal phase_shift(std::int64_t w, const Signal& s, const PrimeModulus& mod);

/// The Heisenberg representation pi(tau,w,z) as a dense p x p unitary.
/// Normalized so that pi is a genuine homomorphism for the group law above:
/// pi(tau,w,z) phi(t) = psi(tau w / 2 + z) psi(w t) phi(t + tau).
CMat pi_matrix(const PrimeModulus& mod, const HeisenbergElement& h);

/// Matrix coefficient m_{phi,psi}(h) = <phi, pi(h) psi>.
cplx matrix_coefficient(const Signal& phi, const Signal& psi, const HeisenbergElement& h,
                        const PrimeModulus& mod);

/// Ambiguity value A_phi(h) = m_{phi,phi}(h).
inline cplx ambiguity(const Signal& phi, const HeisenbergElement& h, const PrimeModulus& mod) {
    return matrix_coefficient(phi, phi, h, mod);
}

/// Orthonormal basis B_L of common eigenvectors of {pi(l,0) : l in L}, one per
/// character of the (cyclic, order p) line, ordered by character index.
std::vector<Signal> heisenberg_basis(const PrimeModulus& mod, const Line& line);

/// The chirp system S_H: union of B_L over all p+1 lines, p(p+1) signals.
SignalDictionary heisenberg_system(const PrimeModulus& mod);

}  // namespace osc
