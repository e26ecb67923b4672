#include "osc/sims.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace osc {

namespace {

Signal apply_pi(const HeisenbergElement& h, const Signal& s, const PrimeModulus& mod) {
    Signal r = s;
    const cplx c = mod.psi(mod.half() * h.tau * h.w + h.z);
    for (std::int64_t t = 0; t < s.p; ++t)
        r.coeffs[t] = c * mod.psi(h.w * t) * s.coeffs[(t + h.tau) % s.p];
    return r;
}

void add_noise(Signal& s, double level, Rng& rng) {
    if (level <= 0.0) return;
    for (std::int64_t t = 0; t < s.p; ++t)
        s.coeffs[t] += level * cplx(rng.gaussian(), rng.gaussian());
}

cplx nearest_root_of_unity(cplx v, int n) {
    const double step = 2.0 * std::numbers::pi / n;
    const long k = std::lround(std::arg(v) / step);
    return std::polar(1.0, step * static_cast<double>(((k % n) + n) % n));
}

}  // namespace

Signal radar_echo(const RadarScenario& sc, const PrimeModulus& mod) {
    Signal e = apply_pi(sc.true_shift, sc.probe, mod);
    Rng rng(sc.seed);
    add_noise(e, sc.noise_level, rng);
    e.provenance.type = Provenance::Type::external;
    e.provenance.label = "radar-echo";
    return e;
}

RadarEstimate radar_detect(const Signal& probe, const Signal& echo, const PrimeModulus& mod) {
    const std::int64_t p = mod.p();
    // For fixed tau, w -> <probe, pi(tau,w,0) echo> is, up to a unit phase, the
    // finite Fourier transform of t -> conj(probe_t) echo_{t+tau}; sweep via a
    // character-table matvec instead of p^2 separate inner products.
    CMat table(p, p);
    for (std::int64_t w = 0; w < p; ++w)
        for (std::int64_t t = 0; t < p; ++t) table(w, t) = mod.psi(w * t);
    RadarEstimate best;
    double second = 0.0;
    std::int64_t bt = 0, bw = 0;
    CVec q(p);
    for (std::int64_t tau = 0; tau < p; ++tau) {
        for (std::int64_t t = 0; t < p; ++t)
            q[t] = std::conj(probe.coeffs[t]) * echo.coeffs[(t + tau) % p];
        const CVec row = table * q;
        for (std::int64_t w = 0; w < p; ++w) {
            const double v = std::abs(row[w]);
            if (v > best.peak) {
                second = best.peak;
                best.peak = v;
                bt = tau;
                bw = w;
            } else if (v > second) {
                second = v;
            }
        }
    }
    best.runner_up = second;
    if (best.peak - second < 1e-6)
        throw AmbiguousPeak("radar peak not unique: " + std::to_string(best.peak) + " vs " +
                            std::to_string(second) + " (argmax tau=" + std::to_string(bt) +
                            ", w=" + std::to_string(bw) + ")");
    // the sweep peaks at h0^{-1}; invert to estimate h0
    best.tau = (p - bt) % p;
    best.w = (p - bw) % p;
    return best;
}

Signal cdma_transmit(const CdmaScenario& sc, const SignalDictionary& dict,
                     const PrimeModulus& mod) {
    Signal u;
    u.p = mod.p();
    u.coeffs = CVec::Zero(mod.p());
    for (const auto& user : sc.users) {
        Signal m = apply_pi(user.distortion, dict.signals.at(user.signal_id), mod);
        u.coeffs += user.bit * m.coeffs;
    }
    Rng rng(sc.seed);
    add_noise(u, sc.noise_level, rng);
    u.provenance.type = Provenance::Type::external;
    u.provenance.label = "cdma-aggregate";
    return u;
}

CdmaDecodeResult cdma_decode(const Signal& aggregate, const Signal& user_signal,
                             const HeisenbergElement& distortion, int bit_alphabet,
                             const PrimeModulus& mod, CdmaSearch search, bool strict) {
    CdmaDecodeResult res;
    HeisenbergElement at = distortion.inverse();
    if (search == CdmaSearch::full_sweep) {
        RadarEstimate est = radar_detect(user_signal, aggregate, mod);
        at = HeisenbergElement(est.tau, est.w, 0, mod).inverse();
        res.tau = est.tau;
        res.w = est.w;
    } else {
        res.tau = distortion.tau;
        res.w = distortion.w;
    }
    res.raw = matrix_coefficient(user_signal, aggregate, at, mod);
    res.bit = nearest_root_of_unity(res.raw, bit_alphabet);
    res.interference = std::abs(res.raw - res.bit);
    const double threshold = std::sin(std::numbers::pi / bit_alphabet);
    if (strict && res.interference >= threshold)
        throw DecodeMarginBelowThreshold("interference " + std::to_string(res.interference) +
                                         " >= threshold " + std::to_string(threshold));
    return res;
}

std::vector<CdmaSweepRow> cdma_sweep(const SignalDictionary& dict, const PrimeModulus& mod,
                                     const std::vector<int>& user_counts, int trials,
                                     std::uint64_t seed, int bit_alphabet, double noise_level) {
    const std::int64_t p = mod.p();
    std::vector<CdmaSweepRow> rows;
    for (int k : user_counts) {
        CdmaSweepRow row;
        row.users = k;
        row.trials = trials;
        double margin_sum = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            // mix (seed, k, trial) through the generator itself so nearby
            // master seeds produce unrelated trial streams
            Rng key((static_cast<std::uint64_t>(k) << 32) | static_cast<std::uint64_t>(trial));
            Rng rng(Rng(seed).next() ^ key.next());
            CdmaScenario sc;
            sc.bit_alphabet = bit_alphabet;
            sc.noise_level = noise_level;
            sc.seed = rng.next();
            // distinct signals per user
            std::vector<std::size_t> ids;
            while (ids.size() < static_cast<std::size_t>(k)) {
                std::size_t cand = rng.below(dict.size());
                if (std::find(ids.begin(), ids.end(), cand) == ids.end()) ids.push_back(cand);
            }
            std::vector<cplx> true_bits;
            for (std::size_t i = 0; i < ids.size(); ++i) {
                CdmaUser user;
                user.signal_id = ids[i];
                const double step = 2.0 * std::numbers::pi / bit_alphabet;
                user.bit = std::polar(
                    1.0, step * static_cast<double>(rng.below(
                                    static_cast<std::uint64_t>(bit_alphabet))));
                user.distortion = HeisenbergElement(static_cast<std::int64_t>(rng.below(p)),
                                                    static_cast<std::int64_t>(rng.below(p)), 0,
                                                    mod);
                true_bits.push_back(user.bit);
                sc.users.push_back(user);
            }
            Signal u = cdma_transmit(sc, dict, mod);
            for (std::size_t i = 0; i < sc.users.size(); ++i) {
                CdmaDecodeResult d =
                    cdma_decode(u, dict.signals[sc.users[i].signal_id], sc.users[i].distortion,
                                bit_alphabet, mod, CdmaSearch::known_shift, false);
                ++row.bits;
                if (std::abs(d.bit - true_bits[i]) > 1e-9) ++row.errors;
                const double margin = std::abs(d.raw - true_bits[i]);
                margin_sum += margin;
                row.max_margin = std::max(row.max_margin, margin);
            }
        }
        row.ber = row.bits == 0 ? 0.0 : static_cast<double>(row.errors) / row.bits;
        row.mean_margin = row.bits == 0 ? 0.0 : margin_sum / static_cast<double>(row.bits);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace osc
