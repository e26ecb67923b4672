#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "osc/heisenberg.hpp"
#include "osc/rng.hpp"

using namespace osc;

TEST_CASE("group law and inverses") {
    PrimeModulus mod(7);
    HeisenbergElement a(1, 0, 0, mod), b(0, 1, 0, mod);
    HeisenbergElement ab = a * b;
    CHECK(ab.tau == 1);
    CHECK(ab.w == 1);
    CHECK(ab.z == 4);  // (1*1 - 0*0)/2 = 4 mod 7
    HeisenbergElement ba = b * a;
    CHECK(ba.z == 3);  // noncommutative: central parts differ
    HeisenbergElement e(0, 0, 0, mod);
    CHECK((a * a.inverse()).is_identity());
    CHECK((e * a) == a);
    // exhaustive associativity at p=3
    PrimeModulus m3(3);
    std::vector<HeisenbergElement> all;
    for (int t = 0; t < 3; ++t)
        for (int w = 0; w < 3; ++w)
            for (int z = 0; z < 3; ++z) all.emplace_back(t, w, z, m3);
    for (const auto& x : all)
        for (const auto& y : all)
            for (const auto& u : all) CHECK(((x * y) * u) == (x * (y * u)));
}

TEST_CASE("lines of the time-frequency plane") {
    PrimeModulus mod(5);
    auto lines = all_lines(mod);
    REQUIRE(lines.size() == 6);  // p + 1
    for (std::int64_t s = 0; s < 5; ++s) {
        CHECK(lines[s].alpha == 1);
        CHECK(lines[s].beta == s);
        CHECK(lines[s].id == s);
    }
    CHECK(lines[5].alpha == 0);
    CHECK(lines[5].beta == 1);
    CHECK(lines[5].id == 5);
}

TEST_CASE("time and phase shifts") {
    PrimeModulus mod(5);
    Signal delta0;
    delta0.p = 5;
    delta0.coeffs = CVec::Zero(5);
    delta0.coeffs[0] = 1.0;
    Signal shifted = time_shift(2, delta0);
    // (L_2 delta_0)(t) = delta_0(t + 2), supported at t = 3
    for (int t = 0; t < 5; ++t)
        CHECK(std::abs(shifted.coeffs[t] - (t == 3 ? 1.0 : 0.0)) < 1e-15);
    Signal zero_shift = time_shift(0, delta0);
    CHECK((zero_shift.coeffs - delta0.coeffs).norm() == 0.0);

    Signal delta3 = shifted;
    Signal mod3 = phase_shift(2, delta3, mod);
    CHECK(std::abs(mod3.coeffs[3] - mod.psi(6)) < 1e-15);  // psi(w a) delta_a
}

TEST_CASE("pi is a unitary homomorphism") {
    for (std::int64_t p : {5, 7}) {
        PrimeModulus mod(p);
        CHECK((pi_matrix(mod, HeisenbergElement(0, 0, 0, mod)) - CMat::Identity(p, p)).norm() <
              1e-15);
        // central elements act by the scalar psi(z)
        CMat center = pi_matrix(mod, HeisenbergElement(0, 0, 2, mod));
        CHECK((center - mod.psi(2) * CMat::Identity(p, p)).norm() < 1e-14);
        std::vector<HeisenbergElement> all;
        for (std::int64_t t = 0; t < p; ++t)
            for (std::int64_t w = 0; w < p; ++w)
                for (std::int64_t z = 0; z < p; ++z) all.emplace_back(t, w, z, mod);
        double worst = 0;
        for (const auto& x : all) {
            CMat px = pi_matrix(mod, x);
            CHECK((px * px.adjoint() - CMat::Identity(p, p)).norm() < 1e-13);
            for (const auto& y : all)
                worst = std::max(worst,
                                 (pi_matrix(mod, x * y) - px * pi_matrix(mod, y)).norm());
        }
        CHECK(worst < 1e-10);
    }
    // sampled pairs at p = 13
    PrimeModulus mod(13);
    Rng rng(5);
    double worst = 0;
    for (int n = 0; n < 500; ++n) {
        HeisenbergElement x(rng.below(13), rng.below(13), rng.below(13), mod);
        HeisenbergElement y(rng.below(13), rng.below(13), rng.below(13), mod);
        worst = std::max(worst, (pi_matrix(mod, x * y) -
                                 pi_matrix(mod, x) * pi_matrix(mod, y)).norm());
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("matrix coefficients and the ambiguity function") {
    PrimeModulus mod(5);
    Signal delta0;
    delta0.p = 5;
    delta0.coeffs = CVec::Zero(5);
    delta0.coeffs[0] = 1.0;
    CHECK(std::abs(ambiguity(delta0, HeisenbergElement(0, 0, 0, mod), mod) - 1.0) < 1e-15);
    // |A_{delta}| is 1 on the phase-shift line, 0 elsewhere
    for (std::int64_t tau = 0; tau < 5; ++tau)
        for (std::int64_t w = 0; w < 5; ++w) {
            double a = std::abs(ambiguity(delta0, HeisenbergElement(tau, w, 0, mod), mod));
            CHECK(std::abs(a - (tau == 0 ? 1.0 : 0.0)) < 1e-15);
        }
    // |m| is independent of the central coordinate
    Signal u;
    u.p = 5;
    u.coeffs = CVec::Zero(5);
    for (int t = 0; t < 5; ++t) u.coeffs[t] = cplx(0.1 * (t + 1), -0.2 * t);
    u.coeffs.normalize();
    for (std::int64_t z = 0; z < 5; ++z)
        CHECK(std::abs(std::abs(matrix_coefficient(delta0, u, HeisenbergElement(1, 2, z, mod), mod)) -
                       std::abs(matrix_coefficient(delta0, u, HeisenbergElement(1, 2, 0, mod), mod))) <
              1e-15);
}

TEST_CASE("line eigenbases") {
    PrimeModulus mod(7);
    auto lines = all_lines(mod);
    REQUIRE(lines.size() == 8);
    // time-shift line: eigenvectors are the unimodular exponentials
    auto basis_t = heisenberg_basis(mod, lines[0]);
    REQUIRE(basis_t.size() == 7);
    for (const auto& s : basis_t)
        for (int t = 0; t < 7; ++t)
            CHECK(std::abs(std::abs(s.coeffs[t]) - 1.0 / std::sqrt(7.0)) < 1e-12);
    // phase-shift line: eigenvectors are the point masses
    auto basis_w = heisenberg_basis(mod, lines[7]);
    REQUIRE(basis_w.size() == 7);
    for (const auto& s : basis_w) CHECK(std::abs(s.coeffs.cwiseAbs().maxCoeff() - 1.0) < 1e-12);
    // every basis is orthonormal and consists of genuine common eigenvectors
    for (const auto& line : lines) {
        auto basis = heisenberg_basis(mod, line);
        REQUIRE(basis.size() == 7);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK(std::abs(basis[i].norm() - 1.0) < 1e-12);
            for (std::size_t j = i + 1; j < basis.size(); ++j)
                CHECK(std::abs(basis[i].coeffs.dot(basis[j].coeffs)) < 1e-10);
        }
        // pi(l, 0) phi = chi(l) phi for every l on the line
        for (std::int64_t m = 1; m < 7; ++m) {
            HeisenbergElement l(m * line.alpha % 7, m * line.beta % 7, 0, mod);
            CMat pl = pi_matrix(mod, l);
            for (const auto& s : basis) {
                CVec image = pl * s.coeffs;
                cplx lambda = s.coeffs.dot(image);
                CHECK(std::abs(std::abs(lambda) - 1.0) < 1e-10);
                CHECK((image - lambda * s.coeffs).norm() < 1e-10);
            }
        }
    }
}

TEST_CASE("chirp system size and provenance") {
    for (std::int64_t p : {5, 7}) {
        PrimeModulus mod(p);
        SignalDictionary dict = heisenberg_system(mod);
        CHECK(dict.kind == SystemKind::heisenberg);
        CHECK(dict.p == p);
        CHECK(dict.size() == static_cast<std::size_t>(p * (p + 1)));
        for (const auto& s : dict.signals) {
            CHECK(s.provenance.type == Provenance::Type::line_character);
            CHECK(s.provenance.group_id >= 0);
            CHECK(s.provenance.group_id <= p);
        }
    }
}
