#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "hankelbound/schwarz.hpp"
#include "test_util.hpp"

using namespace hankelbound;

TEST_CASE("Schur parameter examples", "[schwarz]") {
    auto wz = schur_to_coeffs<Rational>({Rational(1)}, 4);
    CHECK(wz.c == std::vector<Rational>{1, 0, 0, 0});
    CHECK(wz.certified);

    auto wz2 = schur_to_coeffs<Rational>({Rational(0), Rational(1)}, 4);
    CHECK(wz2.c == std::vector<Rational>{0, 1, 0, 0});

    // gamma = (1/2, 1/2): sigma = (1/2)(1+z)/(1+z/4)
    auto half = schur_to_coeffs<Rational>({Rational(1, 2), Rational(1, 2)}, 4);
    CHECK(half.c == std::vector<Rational>{Rational(1, 2), Rational(3, 8), Rational(-3, 32),
                                          Rational(3, 128)});

    CHECK_THROWS_AS(schur_to_coeffs<double>({1.1}, 4), ParamOutOfDisk);
    CHECK_THROWS_AS(schur_to_coeffs<Rational>({Rational(101, 100)}, 4), ParamOutOfDisk);
}

TEST_CASE("m=0 gives a linear Schwarz function", "[schwarz]") {
    auto sc = schur_to_coeffs<double>({0.37}, 4);
    CHECK(sc.c[0] == Catch::Approx(0.37));
    for (int k = 1; k < 4; ++k) CHECK(sc.c[static_cast<std::size_t>(k)] == 0.0);
}

TEST_CASE("Carlson inequality predicate", "[schwarz]") {
    SchwarzCoeffs boundary{{0.0, 1.0, 0.0, 0.0}, false};
    CHECK(carlson_satisfied(boundary));
    SchwarzCoeffs bad{{0.9, 0.5, 0.0, 0.0}, false};
    CHECK_FALSE(carlson_satisfied(bad));
    SchwarzCoeffs two_only{{0.5, 0.5}, false};
    CHECK(carlson_satisfied(two_only));
    SchwarzCoeffs short_vec{{0.5}, false};
    CHECK_THROWS_AS(carlson_satisfied(short_vec), ArityMismatch);
}

TEST_CASE("admissible (mu, nu) region", "[schwarz]") {
    CHECK(ps_admissible({0.1, 0.0}));
    CHECK(ps_admissible({-0.1, 0.0}));
    CHECK(ps_admissible({1.1, 0.0}));
    CHECK(ps_admissible({0.5, 0.0}));
    CHECK(ps_admissible({2.0, 1.0}));
    CHECK_FALSE(ps_admissible({2.5, 0.0}));
    CHECK_FALSE(ps_admissible({0.3, -1.5}));
    CHECK_FALSE(ps_admissible({1.5, -0.9}));
    CHECK_FALSE(ps_admissible({2.0, 0.5}));  // D2 lower bound at |mu|=2 is 1
}

TEST_CASE("coefficient functional values", "[schwarz]") {
    SchwarzCoeffs only_c3{{0.0, 0.0, 1.0, 0.0}, false};
    CHECK(ps_functional(only_c3, {0.7, -0.3}) == Catch::Approx(1.0));

    SchwarzCoeffsQ half = schur_to_coeffs<Rational>({Rational(1, 2), Rational(1, 2)}, 4);
    CHECK(ps_functional_exact(half, Rational(1, 2), Rational(0)) == 0);

    SchwarzCoeffsQ z2 = schur_to_coeffs<Rational>({Rational(0), Rational(1)}, 4);
    CHECK(ps_functional_exact(z2, Rational(11, 10), Rational(0)) == 0);
}

TEST_CASE("sampler is deterministic and certified", "[schwarz]") {
    auto a = sample_body(7, 3, 50);
    auto b = sample_body(7, 3, 50);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].c == b[i].c);

    auto c = sample_body(1, 0, 5);
    for (const auto& sc : c) {
        CHECK(sc.c[1] == 0.0);
        CHECK(sc.c[2] == 0.0);
        CHECK(sc.c[3] == 0.0);
    }
}

TEST_CASE("certified samples satisfy both Carlson inequalities", "[schwarz][property]") {
    for (auto m : {1, 3, 5}) {
        auto samples = sample_body(42 + static_cast<std::uint64_t>(m), m, 20000);
        for (const auto& sc : samples) {
            REQUIRE(sc.certified);
            CHECK(carlson_satisfied(sc));
        }
    }
    auto zsamples = sample_body_complex(91, 3, 5000);
    for (const auto& sc : zsamples) CHECK(carlson_satisfied(sc));
}

TEST_CASE("coefficient functional stays within 1 on an admissible grid", "[schwarz][property]") {
    auto samples = sample_body(2024, 4, 2000);
    std::vector<PSParams> grid;
    for (int i = -8; i <= 8; ++i)
        for (int j = -4; j <= 4; ++j) {
            PSParams p{i * 0.25, j * 0.25};
            if (ps_admissible(p)) grid.push_back(p);
        }
    REQUIRE(grid.size() > 20);
    for (const auto& sc : samples)
        for (const auto& p : grid) CHECK(ps_functional(sc, p) <= 1.0 + kLemmaTol);
}

TEST_CASE("rational Schur parameters give exact rational coefficients", "[schwarz]") {
    hbtest::Rng rng(5150);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> gamma;
        const int m = rng.range(0, 4);
        for (int k = 0; k <= m; ++k) gamma.push_back(Rational(rng.range(-8, 8), 8));
        auto sc = schur_to_coeffs<Rational>(gamma, 4);
        CHECK(carlson_satisfied_exact(sc));
        // cross-check against the double path
        std::vector<double> gd;
        for (const auto& g : gamma) gd.push_back(to_double(g));
        auto sd = schur_to_coeffs<double>(gd, 4);
        for (int k = 0; k < 4; ++k)
            CHECK(std::abs(to_double(sc.c[static_cast<std::size_t>(k)]) -
                           sd.c[static_cast<std::size_t>(k)]) < 1e-13);
    }
}
