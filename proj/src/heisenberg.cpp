#include "osc/heisenberg.hpp"

#include "osc/spectral.hpp"

namespace osc {

HeisenbergElement HeisenbergElement::operator*(const HeisenbergElement& o) const {
    if (p != o.p) throw ModulusMismatch("Heisenberg elements have different moduli");
    const std::int64_t half = (p + 1) / 2;
    HeisenbergElement r;
    r.p = p;
    r.tau = (tau + o.tau) % p;
    r.w = (w + o.w) % p;
    r.z = (z + o.z + half * ((tau * o.w - o.tau * w) % p + p)) % p;
    return r;
}

HeisenbergElement HeisenbergElement::inverse() const {
    HeisenbergElement r;
    r.p = p;
    r.tau = (p - tau) % p;
    r.w = (p - w) % p;
    r.z = (p - z) % p;
    return r;
}

std::vector<Line> all_lines(const PrimeModulus& mod) {
    std::vector<Line> lines;
    for (std::int64_t s = 0; s < mod.p(); ++s) lines.push_back({1, s, s});
    lines.push_back({0, 1, mod.p()});
    return lines;
}

Signal time_shift(std::int64_t tau, const Signal& s) {
    const std::int64_t p = s.p;
    tau = ((tau % p) + p) % p;
    Signal r = s;
    for (std::int64_t t = 0; t < p; ++t) r.coeffs[t] = s.coeffs[(t + tau) % p];
    return r;
}

Signal phase_shift(std::int64_t w, const Signal& s, const PrimeModulus& mod) {
    Signal r = s;
    for (std::int64_t t = 0; t < s.p; ++t) r.coeffs[t] = mod.psi(w * t) * s.coeffs[t];
    return r;
}

CMat pi_matrix(const PrimeModulus& mod, const HeisenbergElement& h) {
    const std::int64_t p = mod.p();
    const cplx c = mod.psi(mod.half() * h.tau * h.w + h.z);
    CMat m = CMat::Zero(p, p);
    for (std::int64_t t = 0; t < p; ++t) m(t, (t + h.tau) % p) = c * mod.psi(h.w * t);
    return m;
}

cplx matrix_coefficient(const Signal& phi, const Signal& psi, const HeisenbergElement& h,
                        const PrimeModulus& mod) {
    const std::int64_t p = mod.p();
    const cplx c = mod.psi(mod.half() * h.tau * h.w + h.z);
    cplx acc = 0.0;
    for (std::int64_t t = 0; t < p; ++t)
        acc += std::conj(phi.coeffs[t]) * mod.psi(h.w * t) * psi.coeffs[(t + h.tau) % p];
    return c * acc;
}

std::vector<Signal> heisenberg_basis(const PrimeModulus& mod, const Line& line) {
    const std::int64_t p = mod.p();
    // The line is cyclic of order p; a single generator determines the common
    // eigenbasis. All p eigenspaces are one-dimensional.
    CMat gen = pi_matrix(mod, HeisenbergElement(line.alpha, line.beta, 0, mod));
    UnitarySpectrum spec = spectrum_of_unitary(gen, p, 1e-6, 1e-8);
    if (spec.simple.size() != static_cast<std::size_t>(p))
        throw DegenerateEigenspace("line eigenspaces not all one-dimensional for line " +
                                   std::to_string(line.id));
    std::vector<Signal> basis;
    basis.reserve(static_cast<std::size_t>(p));
    for (auto& e : spec.simple) {
        Signal s;
        s.coeffs = std::move(e.vector);
        s.p = p;
        s.provenance.type = Provenance::Type::line_character;
        s.provenance.group_id = line.id;
        s.provenance.character = e.character;
        basis.push_back(std::move(s));
    }
    return basis;
}

SignalDictionary heisenberg_system(const PrimeModulus& mod) {
    SignalDictionary dict;
    dict.p = mod.p();
    dict.kind = SystemKind::heisenberg;
    for (const Line& line : all_lines(mod)) {
        auto basis = heisenberg_basis(mod, line);
        for (auto& s : basis) dict.signals.push_back(std::move(s));
    }
    return dict;
}

}  // namespace osc
