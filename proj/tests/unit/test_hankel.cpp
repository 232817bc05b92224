#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "hankelbound/hankel.hpp"
#include "test_util.hpp"

using namespace hankelbound;

namespace {
const char* kF320 =
    "4*c1^4*c2 + 8*c1^3*c3 + 4*c1*c2*c3 - 23*c1^2*c2^2 - 12*c1^2*c4 + 20*c2^3 - 20*c3^2 + "
    "24*c2*c4";
const char* kG8640 =
    "-60*c3^2 - 132*c1*c2*c3 + 72*c1^3*c3 + 72*c2*c4 + 108*c1^2*c4 + 36*c1^4*c2 + 76*c2^3 + "
    "3*c1^2*c2^2";
}  // namespace

TEST_CASE("320*H3(1) for F equals the eight-term expansion", "[hankel]") {
    CoeffTable t = derive_coefficients(ClassSpec::F(), 5);
    HankelPoly hp = hankel_poly(t, 3, 1, Rational(320));
    CHECK(hp.poly == MultiPoly::parse(kF320));
    CHECK(hp.poly.term_count() == 8);
}

TEST_CASE("8640*H3(1) for G equals its expansion", "[hankel]") {
    CoeffTable t = derive_coefficients(ClassSpec::G(), 5);
    HankelPoly hp = hankel_poly(t, 3, 1, Rational(8640));
    CHECK(hp.poly == MultiPoly::parse(kG8640));
}

TEST_CASE("H3(1) values at rational Schwarz points", "[hankel]") {
    CoeffTable f = derive_coefficients(ClassSpec::F(), 5);
    CoeffTable g = derive_coefficients(ClassSpec::G(), 5);
    std::vector<Rational> w_z2{Rational(0), Rational(1), Rational(0), Rational(0)};
    std::vector<Rational> w_z{Rational(1), Rational(0), Rational(0), Rational(0)};
    CHECK(hankel_eval(f, 3, 1, w_z2) == Rational(1, 16));
    CHECK(hankel_eval(g, 3, 1, w_z2) == Rational(19, 2160));
    CHECK(hankel_eval(f, 3, 1, w_z) == 0);
}

TEST_CASE("H3(1) monomials all have weight 6", "[hankel]") {
    for (const auto& spec : {ClassSpec::F(), ClassSpec::G()}) {
        CoeffTable t = derive_coefficients(spec, 5);
        HankelPoly hp = hankel_poly(t, 3, 1);
        CHECK(hp.poly.weighted_degree() == 6);
    }
}

TEST_CASE("every F monomial carries c2, c3 or c4; H3 vanishes on (t,0,0,0)", "[hankel]") {
    CoeffTable t = derive_coefficients(ClassSpec::F(), 5);
    HankelPoly hp = hankel_poly(t, 3, 1, Rational(320));
    for (const auto& [e, c] : hp.poly.terms()) {
        CHECK(e[static_cast<int>(Var::c2)] + e[static_cast<int>(Var::c3)] +
                  e[static_cast<int>(Var::c4)] >
              0);
    }
    for (double tv : {0.1, 0.5, 0.99}) {
        std::vector<double> ray{tv, 0.0, 0.0, 0.0};
        CHECK(hankel_eval(t, 3, 1, ray) == 0.0);
    }
}

TEST_CASE("|H3| is invariant under the coefficient rotation c_k -> e^{ik t} c_k", "[hankel]") {
    CoeffTable t = derive_coefficients(ClassSpec::F(), 5);
    hbtest::Rng rng(1331);
    std::vector<std::complex<double>> base{{0.4, 0.0}, {-0.2, 0.0}, {0.3, 0.0}, {0.1, 0.0}};
    const double v0 = std::abs(hankel_eval(t, 3, 1, base));
    for (int trial = 0; trial < 10; ++trial) {
        const double theta = rng.unit() * 6.283185307179586;
        std::vector<std::complex<double>> rotated;
        for (int k = 0; k < 4; ++k)
            rotated.push_back(base[static_cast<std::size_t>(k)] *
                              std::polar(1.0, theta * (k + 1)));
        CHECK(std::abs(std::abs(hankel_eval(t, 3, 1, rotated)) - v0) < 1e-12);
    }
}

TEST_CASE("H2(2) functional is available through the same machinery", "[hankel]") {
    CoeffTable t = derive_coefficients(ClassSpec::F(), 5);
    std::vector<Rational> w_z{Rational(1), Rational(0), Rational(0), Rational(0)};
    // w=z: (a2,a3,a4) = (3/2, 2, 5/2), so a2*a4 - a3^2 = -1/4
    CHECK(hankel_eval(t, 2, 2, w_z) == Rational(-1, 4));
}

TEST_CASE("order and arity guards", "[hankel]") {
    CoeffTable low = derive_coefficients(ClassSpec::F(), 4);
    CHECK_THROWS_AS(hankel_poly(low, 3, 1), OrderTooLow);
    CoeffTable t = derive_coefficients(ClassSpec::F(), 5);
    std::vector<Rational> short_point{Rational(0), Rational(1)};
    CHECK_THROWS_AS(hankel_eval(t, 3, 1, short_point), ArityMismatch);
}
