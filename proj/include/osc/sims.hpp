#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "osc/heisenberg.hpp"
#include "osc/rng.hpp"
#include "osc/signal.hpp"

namespace osc {

struct RadarScenario {
    Signal probe;
    HeisenbergElement true_shift;   // z conventionally 0
    double noise_level = 0.0;       // complex Gaussian std per sample
    std::uint64_t seed = 0;
};

/// e = pi(h0) probe (+ optional noise).
Signal radar_echo(const RadarScenario& sc, const PrimeModulus& mod);

struct RadarEstimate {
    std::int64_t tau = 0, w = 0;   // recovered time/phase shift (z unrecoverable)
    double peak = 0.0;
    double runner_up = 0.0;
};

/// Sweep |m_{probe,echo}| over all (tau, w, 0) and invert the argmax.
/// Throws AmbiguousPeak when the top two magnitudes are within 1e-6.
RadarEstimate radar_detect(const Signal& probe, const Signal& echo, const PrimeModulus& mod);

struct CdmaUser {
    std::size_t signal_id = 0;      // index into the dictionary
    cplx bit{1.0, 0.0};             // N-th root of unity
    HeisenbergElement distortion;   // z = 0 in scenarios
};

struct CdmaScenario {
    std::vector<CdmaUser> users;
    int bit_alphabet = 2;           // N
    double noise_level = 0.0;
    std::uint64_t seed = 0;
};

/// u = sum_i b_i pi(h_i) phi_i (+ optional noise). Not unit-norm.
Signal cdma_transmit(const CdmaScenario& sc, const SignalDictionary& dict,
                     const PrimeModulus& mod);

enum class CdmaSearch { known_shift, full_sweep };

struct CdmaDecodeResult {
    cplx bit{1.0, 0.0};             // nearest N-th root of unity
    cplx raw{0.0, 0.0};             // matrix coefficient before rounding
    double interference = 0.0;      // |raw - bit_clean| margin witness
    std::int64_t tau = 0, w = 0;    // shift used (recovered in full_sweep mode)
};

/// Decode one user's bit from the aggregate. strict = throw
/// DecodeMarginBelowThreshold when interference reaches half the minimal
/// root-of-unity gap.
CdmaDecodeResult cdma_decode(const Signal& aggregate, const Signal& user_signal,
                             const HeisenbergElement& distortion, int bit_alphabet,
                             const PrimeModulus& mod, CdmaSearch search = CdmaSearch::known_shift,
                             bool strict = false);

struct CdmaSweepRow {
    int users = 0;
    int trials = 0;
    std::int64_t bits = 0;
    std::int64_t errors = 0;
    double ber = 0.0;
    double mean_margin = 0.0;       // mean |raw - true bit|
    double max_margin = 0.0;
};

/// Seeded batch: for each user count k, run `trials` scenarios with k users
/// drawing distinct dictionary signals, uniform bits and distortions.
std::vector<CdmaSweepRow> cdma_sweep(const SignalDictionary& dict, const PrimeModulus& mod,
                                     const std::vector<int>& user_counts, int trials,
                                     std::uint64_t seed, int bit_alphabet = 2,
                                     double noise_level = 0.0);

}  // namespace osc
