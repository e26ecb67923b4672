#include "osc/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <thread>

#include "osc/rng.hpp"

namespace osc {

namespace {

CMat character_table(const PrimeModulus& mod) {
    const std::int64_t p = mod.p();
    CMat w(p, p);
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t t = 0; t < p; ++t) w(a, t) = mod.psi(a * t);
    return w;
}

// max over the (tau, w) grid of |sum_t conj(phi_t) psi(w t) psi_coeffs_{t+tau}|,
// optionally skipping the origin cell.
std::pair<double, Witness> grid_max(const CVec& phi, const CVec& psi, const CMat& table,
                                    bool skip_origin) {
    const std::int64_t p = phi.size();
    CVec q(p), vals(p);
    double best = -1.0;
    Witness wit;
    for (std::int64_t tau = 0; tau < p; ++tau) {
        for (std::int64_t t = 0; t < p; ++t) q[t] = std::conj(phi[t]) * psi[(t + tau) % p];
        vals.noalias() = table * q;
        for (std::int64_t w = 0; w < p; ++w) {
            if (skip_origin && tau == 0 && w == 0) continue;
            const double v = std::abs(vals[w]);
            if (v > best) {
                best = v;
                wit.tau = tau;
                wit.w = w;
                wit.value = v;
            }
        }
    }
    return {best, wit};
}

void parallel_for(std::int64_t n, int threads, const std::function<void(std::int64_t)>& fn) {
    if (threads <= 1 || n < 2 * threads) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::int64_t> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::int64_t i = next++; i < n; i = next++) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

std::pair<double, Witness> ambiguity_max_off_origin(const Signal& phi, const PrimeModulus& mod) {
    return grid_max(phi.coeffs, phi.coeffs, character_table(mod), true);
}

std::pair<double, Witness> cross_ambiguity_max(const Signal& phi, const Signal& psi,
                                               const PrimeModulus& mod) {
    return grid_max(phi.coeffs, psi.coeffs, character_table(mod), false);
}

AutocorrelationSection verify_autocorrelation(const SignalDictionary& dict,
                                              const PrimeModulus& mod, const VerifyOptions& opt) {
    const std::int64_t p = mod.p();
    const CMat table = character_table(mod);
    AutocorrelationSection sec;
    sec.bound = 2.0 / std::sqrt(static_cast<double>(p));
    sec.tolerance = opt.tolerance;
    sec.per_signal_max.assign(dict.size(), 0.0);
    std::vector<char> origin(dict.size(), 1);
    parallel_for(static_cast<std::int64_t>(dict.size()), opt.threads, [&](std::int64_t i) {
        const CVec& v = dict.signals[static_cast<std::size_t>(i)].coeffs;
        auto [m, wit] = grid_max(v, v, table, true);
        sec.per_signal_max[static_cast<std::size_t>(i)] = m;
        origin[static_cast<std::size_t>(i)] = std::abs(v.squaredNorm() - 1.0) < 1e-9 ? 1 : 0;
    });
    for (std::size_t i = 0; i < dict.size(); ++i) {
        if (!origin[i]) sec.origin_ok = false;
        if (sec.per_signal_max[i] > sec.global_max) {
            sec.global_max = sec.per_signal_max[i];
            const CVec& v = dict.signals[i].coeffs;
            auto [m, wit] = grid_max(v, v, table, true);
            sec.witness = wit;
            sec.witness.signal_a = static_cast<std::int64_t>(i);
        }
    }
    sec.pass = sec.origin_ok && sec.global_max <= sec.bound + sec.tolerance;
    return sec;
}

CrosscorrelationSection verify_crosscorrelation(const SignalDictionary& dict,
                                                const PrimeModulus& mod,
                                                const VerifyOptions& opt) {
    const std::int64_t p = mod.p();
    const CMat table = character_table(mod);
    const std::uint64_t n = dict.size();
    CrosscorrelationSection sec;
    sec.bound = 4.0 / std::sqrt(static_cast<double>(p));
    sec.tolerance = opt.tolerance;
    sec.seed = opt.seed;
    const std::uint64_t cells_per_pair = static_cast<std::uint64_t>(p) * p;
    sec.cells_total = n * (n - 1) / 2 * cells_per_pair;

    auto eval_pair = [&](std::uint64_t i, std::uint64_t j) {
        auto [m, wit] = grid_max(dict.signals[i].coeffs, dict.signals[j].coeffs, table, false);
        if (m > sec.global_max) {
            sec.global_max = m;
            sec.witness = wit;
            sec.witness.signal_a = static_cast<std::int64_t>(i);
            sec.witness.signal_b = static_cast<std::int64_t>(j);
        }
        sec.cells_evaluated += cells_per_pair;
    };

    if (sec.cells_total <= opt.pair_budget) {
        for (std::uint64_t i = 0; i < n; ++i)
            for (std::uint64_t j = i + 1; j < n; ++j) eval_pair(i, j);
    } else {
        sec.sampled = true;
        Rng rng(opt.seed);
        const std::uint64_t draws = opt.pair_budget / cells_per_pair;
        for (std::uint64_t k = 0; k < draws; ++k) {
            std::uint64_t i = rng.below(n);
            std::uint64_t j = rng.below(n - 1);
            if (j >= i) ++j;
            eval_pair(std::min(i, j), std::max(i, j));
        }
    }
    sec.pass = sec.global_max <= sec.bound + sec.tolerance;
    return sec;
}

SupremumSection verify_supremum_and_papr(const SignalDictionary& dict, const PrimeModulus& mod,
                                         const VerifyOptions& opt) {
    const std::int64_t p = mod.p();
    SupremumSection sec;
    sec.bound = 2.0 / std::sqrt(static_cast<double>(p));
    sec.tolerance = opt.tolerance;
    const double uni = 1.0 / std::sqrt(static_cast<double>(p));
    for (std::size_t i = 0; i < dict.size(); ++i) {
        const CVec& v = dict.signals[i].coeffs;
        double sup = v.cwiseAbs().maxCoeff();
        sec.per_signal_sup.push_back(sup);
        sec.per_signal_papr.push_back(static_cast<double>(p) * sup * sup);
        if (sup > sec.global_max_sup) {
            sec.global_max_sup = sup;
            sec.witness_signal = static_cast<std::int64_t>(i);
        }
        for (std::int64_t t = 0; t < p; ++t)
            sec.max_unimodular_deviation =
                std::max(sec.max_unimodular_deviation, std::abs(std::abs(v[t]) - uni));
    }
    sec.pass = sec.global_max_sup <= sec.bound + sec.tolerance;
    sec.unimodular = sec.max_unimodular_deviation <= 1e-10;
    return sec;
}

FourierInvarianceSection verify_fourier_invariance(const SignalDictionary& dict,
                                                   const WeilRepresentation& rho,
                                                   const std::vector<Torus>& tori,
                                                   const VerifyOptions& opt) {
    (void)opt;  // invariance checks have fixed tolerances
    const SL2Element w = weyl_element(rho.modulus());
    const CMat& rw = rho(w);
    // group dictionary signals by source torus
    std::map<std::int64_t, std::vector<const Signal*>> by_torus;
    for (const auto& s : dict.signals)
        if (s.provenance.type == Provenance::Type::torus_character)
            by_torus[s.provenance.group_id].push_back(&s);

    FourierInvarianceSection sec;
    std::map<std::int64_t, std::int64_t> conjugate_id;  // torus id -> w T w^{-1} id
    std::int64_t idx = -1;
    for (const auto& s : dict.signals) {
        ++idx;
        if (s.provenance.type != Provenance::Type::torus_character) continue;
        const Torus& t = tori.at(static_cast<std::size_t>(s.provenance.group_id));
        auto cit = conjugate_id.find(t.id);
        if (cit == conjugate_id.end())
            cit = conjugate_id.emplace(t.id, conjugate_torus(t, w, tori).id).first;
        const Torus& target = tori.at(static_cast<std::size_t>(cit->second));
        auto it = by_torus.find(target.id);
        if (it == by_torus.end())
            throw Error("dictionary lacks the Fourier-conjugate torus basis (id " +
                        std::to_string(target.id) + ")");
        CVec mapped = rw * s.coeffs;
        double best = 0.0;
        for (const Signal* u : it->second)
            best = std::max(best, std::abs(u->coeffs.dot(mapped)));
        if (best < sec.min_overlap) {
            sec.min_overlap = best;
            sec.witness_signal = idx;
        }
        if (t.contains(w)) {
            sec.min_self_overlap =
                std::min(sec.min_self_overlap, std::abs(s.coeffs.dot(mapped)));
        }
    }
    for (const auto& [tid, sigs] : by_torus)
        if (tori.at(static_cast<std::size_t>(tid)).contains(w)) sec.weyl_tori_checked++;
    sec.pass = sec.min_overlap > 1.0 - 1e-8;
    sec.eigenvector_pass = sec.min_self_overlap > 1.0 - 1e-8;
    return sec;
}

HeisenbergSection verify_heisenberg_properties(const SignalDictionary& dict,
                                               const PrimeModulus& mod,
                                               const VerifyOptions& opt) {
    const std::int64_t p = mod.p();
    const CMat table = character_table(mod);
    HeisenbergSection sec;
    sec.cross_bound = 1.0 / std::sqrt(static_cast<double>(p));
    const double uni = 1.0 / std::sqrt(static_cast<double>(p));

    auto line_of = [&](std::int64_t id) -> std::pair<std::int64_t, std::int64_t> {
        return id < p ? std::make_pair<std::int64_t, std::int64_t>(1, std::int64_t(id))
                      : std::make_pair<std::int64_t, std::int64_t>(0, 1);
    };

    for (const auto& s : dict.signals) {
        auto [alpha, beta] = line_of(s.provenance.group_id);
        // membership grid of the line
        std::vector<std::vector<bool>> on(static_cast<std::size_t>(p),
                                          std::vector<bool>(static_cast<std::size_t>(p), false));
        for (std::int64_t m = 0; m < p; ++m)
            on[static_cast<std::size_t>(m * alpha % p)][static_cast<std::size_t>(m * beta % p)] =
                true;
        CVec q(p), vals(p);
        for (std::int64_t tau = 0; tau < p; ++tau) {
            for (std::int64_t t = 0; t < p; ++t)
                q[t] = std::conj(s.coeffs[t]) * s.coeffs[(t + tau) % p];
            vals.noalias() = table * q;
            for (std::int64_t w = 0; w < p; ++w) {
                const double expect =
                    on[static_cast<std::size_t>(tau)][static_cast<std::size_t>(w)] ? 1.0 : 0.0;
                sec.max_line_pattern_error =
                    std::max(sec.max_line_pattern_error, std::abs(std::abs(vals[w]) - expect));
            }
        }
        // Unimodularity holds for the p chirp lines with nonzero time
        // component; the remaining line (pure phase shifts) is diagonalized by
        // the point-mass basis, the one classical exception.
        if (alpha != 0)
            for (std::int64_t t = 0; t < p; ++t)
                sec.max_unimodular_deviation =
                    std::max(sec.max_unimodular_deviation, std::abs(std::abs(s.coeffs[t]) - uni));
    }

    for (std::size_t i = 0; i < dict.size(); ++i)
        for (std::size_t j = i + 1; j < dict.size(); ++j) {
            if (dict.signals[i].provenance.group_id == dict.signals[j].provenance.group_id)
                continue;
            auto [m, wit] =
                grid_max(dict.signals[i].coeffs, dict.signals[j].coeffs, table, false);
            if (m > sec.max_cross) {
                sec.max_cross = m;
                sec.cross_witness = wit;
                sec.cross_witness.signal_a = static_cast<std::int64_t>(i);
                sec.cross_witness.signal_b = static_cast<std::int64_t>(j);
            }
        }

    sec.pass = sec.max_line_pattern_error <= opt.tolerance &&
               sec.max_cross <= sec.cross_bound + opt.tolerance &&
               sec.max_unimodular_deviation <= 1e-10;
    return sec;
}

bool CorrelationReport::all_pass() const {
    if (autocorrelation && !autocorrelation->pass) return false;
    if (crosscorrelation && !crosscorrelation->pass) return false;
    // The supremum section is report-only for Heisenberg dictionaries: the
    // chirp unimodularity check lives in the heisenberg section (which knows
    // to exempt the point-mass basis of the pure phase-shift line).
    if (supremum && kind != SystemKind::heisenberg && !supremum->pass) return false;
    if (fourier && !(fourier->pass && fourier->eigenvector_pass)) return false;
    if (heisenberg && !heisenberg->pass) return false;
    return true;
}

}  // namespace osc
