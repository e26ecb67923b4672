#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "osc/analysis.hpp"
#include "osc/heisenberg.hpp"

using namespace osc;

namespace {

SignalDictionary oscillator_p5() {
    PrimeModulus mod(5);
    WeilRepresentation rho(mod);
    return build_oscillator_system(rho, enumerate_all_tori(mod), OscillatorKind::both);
}

Signal point_mass(std::int64_t p) {
    Signal s;
    s.p = p;
    s.coeffs = CVec::Zero(p);
    s.coeffs[0] = 1.0;
    return s;
}

}  // namespace

TEST_CASE("ambiguity sweep agrees with direct inner products") {
    PrimeModulus mod(5);
    SignalDictionary dict = oscillator_p5();
    for (std::size_t i : {std::size_t{0}, std::size_t{40}, std::size_t{90}}) {
        const Signal& s = dict.signals[i];
        auto [fast, wit] = ambiguity_max_off_origin(s, mod);
        double slow = 0;
        for (std::int64_t tau = 0; tau < 5; ++tau)
            for (std::int64_t w = 0; w < 5; ++w) {
                if (tau == 0 && w == 0) continue;
                slow = std::max(slow,
                                std::abs(ambiguity(s, HeisenbergElement(tau, w, 0, mod), mod)));
            }
        CHECK(std::abs(fast - slow) < 1e-12);
        CHECK(std::abs(std::abs(ambiguity(s, HeisenbergElement(wit.tau, wit.w, 0, mod), mod)) -
                       wit.value) < 1e-12);
    }
    // cross sweep against the direct double loop
    const Signal& a = dict.signals[3];
    const Signal& b = dict.signals[77];
    auto [fast, wit] = cross_ambiguity_max(a, b, mod);
    double slow = 0;
    for (std::int64_t tau = 0; tau < 5; ++tau)
        for (std::int64_t w = 0; w < 5; ++w)
            slow = std::max(slow, std::abs(matrix_coefficient(
                                      a, b, HeisenbergElement(tau, w, 0, mod), mod)));
    CHECK(std::abs(fast - slow) < 1e-12);
}

TEST_CASE("autocorrelation section on the p=5 oscillator system") {
    PrimeModulus mod(5);
    SignalDictionary dict = oscillator_p5();
    AutocorrelationSection sec = verify_autocorrelation(dict, mod);
    CHECK(sec.bound == doctest::Approx(2.0 / std::sqrt(5.0)));
    CHECK(sec.origin_ok);
    CHECK(sec.pass);
    CHECK(sec.per_signal_max.size() == dict.size());
    CHECK(sec.global_max < sec.bound);
    CHECK(sec.global_max > 0.1);  // sanity: strictly positive, not degenerate
    // the witness reproduces the reported value
    const Signal& s = dict.signals[sec.witness.signal_a];
    CHECK(std::abs(std::abs(ambiguity(s, HeisenbergElement(sec.witness.tau, sec.witness.w, 0, mod),
                                      mod)) -
                   sec.global_max) < 1e-12);
}

TEST_CASE("autocorrelation flags the point mass") {
    PrimeModulus mod(5);
    SignalDictionary dict;
    dict.p = 5;
    dict.kind = SystemKind::external;
    dict.signals.push_back(point_mass(5));
    AutocorrelationSection sec = verify_autocorrelation(dict, mod);
    CHECK(sec.origin_ok);
    CHECK(!sec.pass);  // |A| = 1 along the phase-shift line
    CHECK(sec.global_max == doctest::Approx(1.0));
}

TEST_CASE("crosscorrelation: full sweep and budgeted sampling") {
    PrimeModulus mod(5);
    SignalDictionary dict = oscillator_p5();
    VerifyOptions opt;
    CrosscorrelationSection full = verify_crosscorrelation(dict, mod, opt);
    CHECK(full.bound == doctest::Approx(4.0 / std::sqrt(5.0)));
    CHECK(!full.sampled);
    CHECK(full.cells_evaluated == full.cells_total);
    CHECK(full.pass);
    // witness reproduces the max
    CHECK(std::abs(std::abs(matrix_coefficient(
                       dict.signals[full.witness.signal_a], dict.signals[full.witness.signal_b],
                       HeisenbergElement(full.witness.tau, full.witness.w, 0, mod), mod)) -
                   full.global_max) < 1e-12);

    opt.pair_budget = 500;  // force sampling: 95 signals -> 4465 pairs x 25 cells
    opt.seed = 42;
    CrosscorrelationSection sampled = verify_crosscorrelation(dict, mod, opt);
    CHECK(sampled.sampled);
    CHECK(sampled.cells_evaluated <= 500);
    CHECK(sampled.global_max <= full.global_max + 1e-12);
    // deterministic for a fixed seed
    CrosscorrelationSection again = verify_crosscorrelation(dict, mod, opt);
    CHECK(sampled.global_max == again.global_max);
    CHECK(sampled.cells_evaluated == again.cells_evaluated);
}

TEST_CASE("supremum and PAPR") {
    PrimeModulus mod(5);
    SignalDictionary dict = oscillator_p5();
    SupremumSection sec = verify_supremum_and_papr(dict, mod);
    CHECK(sec.pass);
    CHECK(sec.global_max_sup <= 2.0 / std::sqrt(5.0) + 1e-9);
    for (std::size_t i = 0; i < dict.size(); ++i)
        CHECK(sec.per_signal_papr[i] == doctest::Approx(5.0 * sec.per_signal_sup[i] *
                                                        sec.per_signal_sup[i]));

    SignalDictionary deltas;
    deltas.p = 5;
    deltas.signals.push_back(point_mass(5));
    SupremumSection bad = verify_supremum_and_papr(deltas, mod);
    CHECK(!bad.pass);
    CHECK(bad.global_max_sup == doctest::Approx(1.0));
    CHECK(bad.per_signal_papr[0] == doctest::Approx(5.0));
    CHECK(!bad.unimodular);

    SignalDictionary chirps = heisenberg_system(mod);
    SupremumSection h = verify_supremum_and_papr(chirps, mod);
    // every chirp line is unimodular; the point-mass basis pushes max_sup to 1
    CHECK(h.global_max_sup == doctest::Approx(1.0));
}

TEST_CASE("Fourier invariance section") {
    PrimeModulus mod(5);
    WeilRepresentation rho(mod);
    auto tori = enumerate_all_tori(mod);
    SignalDictionary dict = build_oscillator_system(rho, tori, OscillatorKind::both);
    FourierInvarianceSection sec = verify_fourier_invariance(dict, rho, tori);
    CHECK(sec.pass);
    CHECK(sec.min_overlap > 1.0 - 1e-8);
    CHECK(sec.eigenvector_pass);
    CHECK(sec.weyl_tori_checked >= 1);
}

TEST_CASE("Heisenberg section: exact line patterns") {
    for (std::int64_t p : {5, 7}) {
        PrimeModulus mod(p);
        SignalDictionary dict = heisenberg_system(mod);
        HeisenbergSection sec = verify_heisenberg_properties(dict, mod);
        CHECK(sec.pass);
        CHECK(sec.max_line_pattern_error < 1e-9);
        CHECK(sec.max_cross <= 1.0 / std::sqrt(static_cast<double>(p)) + 1e-9);
        CHECK(sec.max_unimodular_deviation <= 1e-10);
    }
}

TEST_CASE("report aggregation") {
    PrimeModulus mod(5);
    SignalDictionary dict = oscillator_p5();
    CorrelationReport report;
    report.p = 5;
    report.kind = dict.kind;
    report.autocorrelation = verify_autocorrelation(dict, mod);
    report.supremum = verify_supremum_and_papr(dict, mod);
    CHECK(report.all_pass());
    report.autocorrelation->pass = false;
    CHECK(!report.all_pass());
}
