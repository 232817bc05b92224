#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "hankelbound/classmodel.hpp"
#include "hankelbound/multipoly.hpp"

using namespace hankelbound;

namespace {

// RK4 for u'(z) = rhs(z,u) on [0, z1], fixed step.
template <class F>
double rk4(F rhs, double u0, double z1, int steps) {
    double u = u0, z = 0.0;
    const double h = z1 / steps;
    for (int i = 0; i < steps; ++i) {
        const double k1 = rhs(z, u);
        const double k2 = rhs(z + h / 2, u + h / 2 * k1);
        const double k3 = rhs(z + h / 2, u + h / 2 * k2);
        const double k4 = rhs(z + h, u + h * k3);
        u += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
        z += h;
    }
    return u;
}

}  // namespace

TEST_CASE("F coefficient table matches the verified closed forms", "[classmodel]") {
    CoeffTable t = derive_coefficients(ClassSpec::F(), 5);
    CHECK(t.coeff(2) == MultiPoly::parse("3/2*c1"));
    CHECK(t.coeff(3) == MultiPoly::parse("2*c1^2 + 1/2*c2"));
    // a4 = (1/8)(2 c3 + 13 c1 c2 + 20 c1^3); the 1/2 prefactor sometimes
    // quoted for this line fails the w=z oracle below.
    CHECK(t.coeff(4) == MultiPoly::parse("1/4*c3 + 13/8*c1*c2 + 5/2*c1^3"));
    CHECK(t.coeff(5) ==
          MultiPoly::parse("3/20*c4 + 9/10*c1*c3 + 69/20*c1^2*c2 + 3*c1^4 + 3/8*c2^2"));
}

TEST_CASE("G coefficient table matches the closed forms", "[classmodel]") {
    CoeffTable t = derive_coefficients(ClassSpec::G(), 5);
    CHECK(t.coeff(2) == MultiPoly::parse("-1/2*c1"));
    CHECK(t.coeff(3) == MultiPoly::parse("-1/6*c2"));
    CHECK(t.coeff(4) == MultiPoly::parse("-1/12*c3 - 1/24*c1*c2"));
    CHECK(t.coeff(5) ==
          MultiPoly::parse("-1/20*c4 - 1/30*c1*c3 - 1/40*c2^2 - 1/60*c1^2*c2"));
}

TEST_CASE("defining relation residual vanishes identically", "[classmodel]") {
    for (const auto& spec :
         {ClassSpec::F(), ClassSpec::G(), ClassSpec::custom(Rational(3, 5)), ClassSpec::custom(Rational(0))}) {
        CoeffTable t = derive_coefficients(spec, 5);
        auto residual = class_relation_residual(t);
        for (int k = 0; k <= residual.order(); ++k) {
            INFO(spec.name << " residual at z^" << k);
            CHECK(residual[k].is_zero());
        }
    }
}

TEST_CASE("a_n is weighted-homogeneous of weight n-1 and vanishes at c=0", "[classmodel]") {
    CoeffTable t = derive_coefficients(ClassSpec::F(), 5);
    for (int n = 2; n <= 5; ++n) {
        CHECK(t.coeff(n).weighted_degree() == n - 1);
        CHECK(t.coeff(n).constant_term() == 0);
    }
    auto zeros = eval_coefficients<Rational>(t, {Rational(0), Rational(0), Rational(0), Rational(0)});
    for (const auto& v : zeros) CHECK(v == 0);
}

TEST_CASE("w=z oracle: the ODE forces (3/2, 2, 5/2, 3) for F", "[classmodel][oracle]") {
    // With w(z)=z and lambda=2 the defining relation reduces to
    // u' = 3u/(1-z) for u=f', whose solution is u=(1-z)^-3. RK4 confirms the
    // closed form; its binomial expansion freezes a_n = (n+1)/2.
    const double u_end = rk4([](double z, double u) { return 3.0 * u / (1.0 - z); }, 1.0, 0.5, 4096);
    CHECK(std::abs(u_end - 8.0) < 1e-9);  // (1-0.5)^-3 = 8

    CoeffTable t = derive_coefficients(ClassSpec::F(), 5);
    auto vals = eval_coefficients<Rational>(t, {Rational(1), Rational(0), Rational(0), Rational(0)});
    REQUIRE(vals.size() == 4);
    CHECK(vals[0] == Rational(3, 2));
    CHECK(vals[1] == Rational(2));
    CHECK(vals[2] == Rational(5, 2));
    CHECK(vals[3] == Rational(3));

    // The alternatively printed a4 = (1/2)(2c3+13c1c2+20c1^3) gives 10 here,
    // violating the oracle.
    MultiPoly printed_a4 = MultiPoly::parse("c3 + 13/2*c1*c2 + 10*c1^3");
    std::map<Var, Rational> wz{{Var::c1, Rational(1)}, {Var::c2, Rational(0)},
                               {Var::c3, Rational(0)}};
    CHECK(printed_a4.eval(wz) == 10);
    CHECK(printed_a4 != t.coeff(4));
}

TEST_CASE("w=z oracle for G: f' = 1-z", "[classmodel][oracle]") {
    const double u_end = rk4([](double z, double u) { return -u / (1.0 - z); }, 1.0, 0.5, 4096);
    CHECK(std::abs(u_end - 0.5) < 1e-10);
    CoeffTable t = derive_coefficients(ClassSpec::G(), 5);
    auto vals = eval_coefficients<Rational>(t, {Rational(1), Rational(0), Rational(0), Rational(0)});
    CHECK(vals[0] == Rational(-1, 2));
    CHECK(vals[1] == 0);
    CHECK(vals[2] == 0);
    CHECK(vals[3] == 0);
}

TEST_CASE("coefficient evaluation at w=z^2", "[classmodel]") {
    CoeffTable f = derive_coefficients(ClassSpec::F(), 5);
    auto fv = eval_coefficients<Rational>(f, {Rational(0), Rational(1), Rational(0), Rational(0)});
    CHECK(fv == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(0), Rational(3, 8)});

    CoeffTable g = derive_coefficients(ClassSpec::G(), 5);
    auto gv = eval_coefficients<Rational>(g, {Rational(0), Rational(1), Rational(0), Rational(0)});
    CHECK(gv == std::vector<Rational>{Rational(0), Rational(-1, 6), Rational(0), Rational(-1, 40)});
}

TEST_CASE("derivation preconditions", "[classmodel]") {
    CHECK_THROWS_AS(derive_coefficients(ClassSpec::F(), 1), std::invalid_argument);
    CHECK_THROWS_AS(derive_coefficients(ClassSpec::F(), 6), std::invalid_argument);
    CoeffTable t = derive_coefficients(ClassSpec::F(), 5);
    CHECK_THROWS_AS(eval_coefficients<Rational>(t, {Rational(1), Rational(0)}), ArityMismatch);
    CHECK_THROWS_AS(t.coeff(6), OrderTooLow);
}
