#include "osc/weil.hpp"

#include <cmath>

namespace osc {

SL2Element::SL2Element(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_,
                       const PrimeModulus& mod)
    : a(mod.reduce(a_)), b(mod.reduce(b_)), c(mod.reduce(c_)), d(mod.reduce(d_)), p(mod.p()) {
    if (det() != 1) throw NotUnimodular("matrix determinant is not 1 mod " + std::to_string(p));
}

SL2Element SL2Element::operator*(const SL2Element& o) const {
    if (p != o.p) throw ModulusMismatch("SL2 elements have different moduli");
    SL2Element r;
    r.p = p;
    r.a = (a * o.a + b * o.c) % p;
    r.b = (a * o.b + b * o.d) % p;
    r.c = (c * o.a + d * o.c) % p;
    r.d = (c * o.b + d * o.d) % p;
    return r;
}

SL2Element SL2Element::inverse() const {
    SL2Element r;
    r.p = p;
    r.a = d;
    r.b = (p - b) % p;
    r.c = (p - c) % p;
    r.d = a;
    return r;
}

std::int64_t SL2Element::order() const {
    SL2Element e = *this;
    std::int64_t n = 1;
    while (!e.is_identity()) {
        e = e * *this;
        ++n;
        if (n > p * (p + 1)) throw NotCyclic("order scan exceeded group exponent");
    }
    return n;
}

std::pair<std::int64_t, std::int64_t> SL2Element::apply(std::int64_t tau, std::int64_t w) const {
    tau = ((tau % p) + p) % p;
    w = ((w % p) + p) % p;
    return {(a * tau + b * w) % p, (c * tau + d * w) % p};
}

SL2Element sl2_identity(const PrimeModulus& mod) { return SL2Element(1, 0, 0, 1, mod); }
SL2Element weyl_element(const PrimeModulus& mod) { return SL2Element(0, 1, -1, 0, mod); }

WeilRepresentation::WeilRepresentation(const PrimeModulus& mod) : mod_(mod) {
    const std::int64_t p = mod_.p();
    plain_fourier_.resize(p, p);
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));
    for (std::int64_t t = 0; t < p; ++t)
        for (std::int64_t s = 0; s < p; ++s) plain_fourier_(t, s) = scale * mod_.psi(t * s);
    calibrate();
}

CMat WeilRepresentation::scaling(std::int64_t a) const {
    a = mod_.reduce(a);
    if (a == 0) throw ZeroScaling("scaling by 0 is not unitary");
    const std::int64_t p = mod_.p();
    const std::int64_t ai = mod_.inv(a);
    const double sign = static_cast<double>(mod_.legendre(a));
    CMat m = CMat::Zero(p, p);
    for (std::int64_t t = 0; t < p; ++t) m(t, ai * t % p) = sign;
    return m;
}

CMat WeilRepresentation::quadratic_modulation() const { return quadratic_modulation(1); }

CMat WeilRepresentation::quadratic_modulation(std::int64_t beta) const {
    const std::int64_t p = mod_.p();
    CMat m = CMat::Zero(p, p);
    for (std::int64_t t = 0; t < p; ++t) m(t, t) = mod_.psi(beta % p * t % p * t);
    return m;
}

CMat WeilRepresentation::fourier() const { return nu_ * plain_fourier_; }

CMat WeilRepresentation::build(const SL2Element& g) const {
    const std::int64_t p = mod_.p();
    const std::int64_t half = mod_.half();
    CMat m = CMat::Zero(p, p);
    if (g.b != 0) {
        // g = n(d/b) w a(1/b) n(a/b) with n(x) lower-unipotent; composing the
        // generator kernels gives
        //   rho(g)[t,u] = sigma(1/b) (nu/sqrt p) psi(-x t^2 / 2 + t u / b - y u^2 / 2),
        // x = d/b, y = a/b, all exponents exact integers mod p.
        const std::int64_t bi = mod_.inv(g.b);
        const std::int64_t x = g.d * bi % p;
        const std::int64_t y = g.a * bi % p;
        const cplx coef =
            nu_ * static_cast<double>(mod_.legendre(bi)) / std::sqrt(static_cast<double>(p));
        const std::int64_t hx = (p - half * x % p) % p;  // -x/2
        const std::int64_t hy = (p - half * y % p) % p;  // -y/2
        for (std::int64_t t = 0; t < p; ++t) {
            const std::int64_t et = hx * t % p * t % p;
            for (std::int64_t u = 0; u < p; ++u) {
                const std::int64_t e = (et + bi * t % p * u + hy * u % p * u) % p;
                m(t, u) = coef * mod_.psi(e);
            }
        }
    } else {
        // g = a(a) n(a c): rho(g) phi(t) = sigma(a) psi(-(c/a) t^2 / 2) phi(t/a).
        const std::int64_t ai = mod_.inv(g.a);
        const double sign = static_cast<double>(mod_.legendre(g.a));
        const std::int64_t hca = (p - half * (g.c * ai % p) % p) % p;  // -(c/a)/2
        for (std::int64_t t = 0; t < p; ++t)
            m(t, ai * t % p) = sign * mod_.psi(hca * t % p * t);
    }
    return m;
}

const CMat& WeilRepresentation::operator()(const SL2Element& g) const {
    if (g.p != mod_.p()) throw ModulusMismatch("SL2 element modulus differs from representation");
    if (g.det() != 1) throw NotUnimodular("matrix determinant is not 1");
    auto it = cache_.find(g.entries());
    if (it == cache_.end()) {
        if (cache_.size() > 4096) cache_.clear();
        it = cache_.emplace(g.entries(), build(g)).first;
    }
    return it->second;
}

CMat WeilRepresentation::matrix(const SL2Element& g) const {
    if (g.p != mod_.p()) throw ModulusMismatch("SL2 element modulus differs from representation");
    if (g.det() != 1) throw NotUnimodular("matrix determinant is not 1");
    return build(g);
}

void WeilRepresentation::calibrate() {
    // w = u(1) l(-1) u(1). Both sides carry exactly one Fourier factor less
    // than the number of nu's they contain, so the relation pins nu uniquely:
    // with nu = 1 plugged in, rho1(u(1)) rho1(l(-1)) rho1(u(1)) = (1/nu) F.
    nu_ = cplx(1.0, 0.0);
    cache_.clear();
    SL2Element upper(1, 1, 0, 1, mod_);
    SL2Element lower(1, 0, -1, 1, mod_);
    CMat lhs = build(upper) * build(lower) * build(upper);
    // lhs should be a unit scalar times plain_fourier_; read the scalar off a
    // well-conditioned entry (all entries of F have modulus 1/sqrt p).
    cplx ratio = plain_fourier_(0, 0) / lhs(0, 0);
    ratio /= std::abs(ratio);
    nu_ = ratio;
    cache_.clear();
    double err = (nu_ * lhs - plain_fourier_).cwiseAbs().maxCoeff();
    if (err > 1e-9)
        throw Error("Weil normalization calibration failed: braid residual " +
                    std::to_string(err));
    // Consistency: nu^2 = sigma(-1), forced by w^2 = -I.
    cplx expect = cplx(static_cast<double>(mod_.legendre(-1)), 0.0);
    if (std::abs(nu_ * nu_ - expect) > 1e-9)
        throw Error("Weil normalization inconsistent with nu^2 = sigma(-1)");
}

double WeilRepresentation::egorov_residual(const SL2Element& g) const {
    const CMat r = matrix(g);
    double worst = 0.0;
    const std::array<std::array<std::int64_t, 3>, 4> probes{
        {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {2, 3, 0}}};
    for (const auto& [tau, w, z] : probes) {
        HeisenbergElement h(tau, w, z, mod_);
        auto [gt, gw] = g.apply(tau, w);
        HeisenbergElement gh(gt, gw, z, mod_);
        double res = (r * pi_matrix(mod_, h) - pi_matrix(mod_, gh) * r).norm();
        worst = std::max(worst, res);
    }
    return worst;
}

}  // namespace osc
