#include "osc/oscillator.hpp"

#include <cmath>
#include <numbers>

#include "osc/spectral.hpp"

namespace osc {

SignalDictionary standard_basis_system(const PrimeModulus& mod) {
    const std::int64_t p = mod.p();
    // discrete log table against the smallest primitive root
    std::vector<std::int64_t> dlog(p, 0);
    std::int64_t e = 1;
    for (std::int64_t m = 0; m < p - 1; ++m) {
        dlog[e] = m;
        e = e * mod.primitive_root() % p;
    }
    SignalDictionary dict;
    dict.p = p;
    dict.kind = SystemKind::standard;
    const double scale = 1.0 / std::sqrt(static_cast<double>(p - 1));
    for (std::int64_t j = 1; j < p - 1; ++j) {
        Signal s;
        s.p = p;
        s.coeffs = CVec::Zero(p);
        for (std::int64_t t = 1; t < p; ++t) {
            double arg = 2.0 * std::numbers::pi * static_cast<double>(j * dlog[t]) /
                         static_cast<double>(p - 1);
            s.coeffs[t] = scale * cplx(std::cos(arg), std::sin(arg));
        }
        s.provenance.type = Provenance::Type::standard_character;
        s.provenance.character = j;
        dict.signals.push_back(std::move(s));
    }
    return dict;
}

TorusEigenbasis torus_eigenbasis(const WeilRepresentation& rho, const Torus& torus) {
    UnitarySpectrum spec = spectrum_of_unitary(rho(torus.generator), torus.order, 1e-6, 1e-8);
    TorusEigenbasis out;
    out.torus = &torus;
    out.multiplicity = spec.multiplicity;
    for (auto& e : spec.simple) {
        Signal s;
        s.coeffs = std::move(e.vector);
        s.p = rho.modulus().p();
        s.provenance.type = Provenance::Type::torus_character;
        s.provenance.group_id = torus.id;
        s.provenance.character = e.character;
        out.signals.push_back(std::move(s));
    }
    return out;
}

SignalDictionary build_oscillator_system(const WeilRepresentation& rho,
                                         const std::vector<Torus>& tori, OscillatorKind kind) {
    SignalDictionary dict;
    dict.p = rho.modulus().p();
    dict.kind = kind == OscillatorKind::split      ? SystemKind::split_oscillator
                : kind == OscillatorKind::nonsplit ? SystemKind::nonsplit_oscillator
                                                   : SystemKind::oscillator;
    dict.nu = rho.nu();
    for (const Torus& t : tori) {
        if (kind == OscillatorKind::split && t.kind != TorusKind::split) continue;
        if (kind == OscillatorKind::nonsplit && t.kind != TorusKind::nonsplit) continue;
        TorusEigenbasis basis = torus_eigenbasis(rho, t);
        TorusRecord rec;
        rec.id = t.id;
        rec.kind = to_string(t.kind);
        rec.order = t.order;
        rec.generator = t.generator.entries();
        rec.character_multiplicity = basis.multiplicity;
        dict.tori.push_back(std::move(rec));
        for (auto& s : basis.signals) dict.signals.push_back(std::move(s));
    }
    return dict;
}

ExtendedSystem::ExtendedSystem(SignalDictionary base, const PrimeModulus& mod)
    : base_(std::move(base)), mod_(mod) {
    if (base_.p != mod_.p()) throw ModulusMismatch("dictionary modulus differs");
}

Signal ExtendedSystem::signal(std::size_t idx) const {
    const auto n = base_.size();
    const std::size_t base_idx = idx % n;
    const std::size_t shift = idx / n;
    const std::int64_t p = mod_.p();
    const std::int64_t w = static_cast<std::int64_t>(shift) % p;
    const std::int64_t tau = static_cast<std::int64_t>(shift) / p;
    return signal(tau, w, base_idx);
}

Signal ExtendedSystem::signal(std::int64_t tau, std::int64_t w, std::size_t base_idx) const {
    Signal s = phase_shift(w, time_shift(tau, base_.signals.at(base_idx)), mod_);
    s.provenance.type = Provenance::Type::translate;
    s.provenance.group_id = static_cast<std::int64_t>(base_idx);
    s.provenance.tau = mod_.reduce(tau);
    s.provenance.w = mod_.reduce(w);
    return s;
}

}  // namespace osc
