#include <catch2/catch_amalgamated.hpp>

#include "hankelbound/decomp.hpp"

using namespace hankelbound;

namespace {

HankelPoly scaled_h3(const ClassSpec& cls, const Rational& scale) {
    return hankel_poly(derive_coefficients(cls, 5), 3, 1, scale);
}

bool check_passed(const VerificationReport& r, const std::string& prefix) {
    for (const auto& c : r.checks)
        if (c.name.rfind(prefix, 0) == 0) return c.passed;
    return false;
}

}  // namespace

TEST_CASE("built-in decompositions verify end to end", "[decomp]") {
    for (const auto& cls : {ClassSpec::F(), ClassSpec::G()}) {
        BoundDecomposition d = builtin_decomposition(cls);
        VerificationReport r = verify_decomposition(d, scaled_h3(cls, d.scale));
        INFO(cls.name);
        for (const auto& c : r.checks) {
            INFO(c.name << ": " << c.detail);
            CHECK(c.passed);
        }
        CHECK(r.all_passed());
    }
    CHECK_THROWS_AS(builtin_decomposition(ClassSpec::custom(Rational(1))), UnsupportedClass);
}

TEST_CASE("identity fails when the determinant does not match", "[decomp]") {
    BoundDecomposition d = builtin_decomposition(ClassSpec::F());
    VerificationReport r = verify_decomposition(d, scaled_h3(ClassSpec::G(), d.scale));
    CHECK_FALSE(check_passed(r, "identity"));
}

TEST_CASE("tampering a PS parameter flips admissibility", "[decomp]") {
    BoundDecomposition d = builtin_decomposition(ClassSpec::F());
    d.groups[0].mu = Rational(3);
    VerificationReport r = verify_decomposition(d, scaled_h3(ClassSpec::F(), d.scale));
    CHECK_FALSE(check_passed(r, "admissible[-20*(c3 - 1/10*c1*c2)^2"));
}

TEST_CASE("tampering a multiplier flips the identity check", "[decomp]") {
    BoundDecomposition d = builtin_decomposition(ClassSpec::F());
    d.groups[0].multiplier = pconst(-19);
    VerificationReport r = verify_decomposition(d, scaled_h3(ClassSpec::F(), d.scale));
    CHECK_FALSE(check_passed(r, "identity"));
}

TEST_CASE("tampering a relaxation flips its certificate", "[decomp]") {
    BoundDecomposition d = builtin_decomposition(ClassSpec::G());
    MultiPoly x = pvar(Var::x), y = pvar(Var::y);
    d.relaxations[0].to_expr = pconst(2) + x.pow(2) - y * Rational(3);
    VerificationReport r = verify_decomposition(d, scaled_h3(ClassSpec::G(), d.scale));
    CHECK_FALSE(check_passed(r, "relaxation"));
}

TEST_CASE("tampering the majorant flips the majorization check", "[decomp]") {
    BoundDecomposition d = builtin_decomposition(ClassSpec::F());
    d.majorant += pvar(Var::x);
    VerificationReport r = verify_decomposition(d, scaled_h3(ClassSpec::F(), d.scale));
    CHECK_FALSE(check_passed(r, "majorization"));
}

TEST_CASE("bound assembly from certified maxima", "[decomp][slow]") {
    BoundDecomposition f = builtin_decomposition(ClassSpec::F());
    CertifiedBound fmax = certify_max(f.majorant, Region::omega(), 1e-9);
    BoundInterval fb = bound_from_decomposition(f, fmax);
    CHECK(fb.lo == Rational(1, 8));
    CHECK(fb.hi >= Rational(1, 8));
    CHECK(fb.hi <= Rational(1, 8) + rational_from_double(3.2e-12));

    BoundDecomposition g = builtin_decomposition(ClassSpec::G());
    CertifiedBound gmax = certify_max(g.majorant, Region::omega(), 1e-9);
    BoundInterval gb = bound_from_decomposition(g, gmax);
    CHECK(gb.lo == Rational(17, 1080));
    CHECK(gb.hi >= Rational(17, 1080));
    CHECK(gb.hi <= Rational(17, 1080) + rational_from_double(1.2e-13));
}

TEST_CASE("zero majorant, zero constant gives the zero bound", "[decomp]") {
    BoundDecomposition d;
    d.scale = 5;
    d.K = 0;
    CertifiedBound none;
    none.lb = 0;
    none.ub = 0.0;
    BoundInterval b = bound_from_decomposition(d, none);
    CHECK(b.lo == 0);
    CHECK(b.hi == 0);
    d.scale = 0;
    CHECK_THROWS_AS(bound_from_decomposition(d, none), ScaleZero);
}

TEST_CASE("F edge profiles replay the stated analysis", "[decomp][edges]") {
    auto edges = edge_profiles(ClassSpec::F());
    REQUIRE(edges.size() == 4);

    const auto& x0 = edges[0];  // h(0,y) = 24y - 4y^3, max 20 at y=1
    CHECK(x0.restricted == MultiPoly::parse("24*y - 4*y^3"));
    CHECK(x0.max.lb == 20);
    CHECK(x0.max.witness.second == 1);

    const auto& x1 = edges[1];  // single point (1,0): value 8
    CHECK(x1.max.lb == 8);

    const auto& y0 = edges[2];  // h(x,0) = x^2(-12x^2+8x+12), max 8 at x=1
    CHECK(y0.restricted == MultiPoly::parse("-12*x^4 + 8*x^3 + 12*x^2"));
    CHECK(y0.has_factorization_check);
    CHECK(y0.factorization_ok);
    CHECK(y0.max.lb == 8);
    CHECK(y0.max.witness.first == 1);

    const auto& curve = edges[3];  // g(x) = h(x,1-x^2)
    CHECK(curve.restricted ==
          MultiPoly::parse("74/5*x^6 - 108/5*x^4 + 8*x^3 - 66/5*x^2 + 20"));
    CHECK(curve.has_factorization_check);
    CHECK(curve.factorization_ok);
    CHECK(curve.max.lb == 20);
    CHECK(curve.max.witness.first == 0);
}

TEST_CASE("G edge profiles replay the stated analysis", "[decomp][edges]") {
    auto edges = edge_profiles(ClassSpec::G());
    REQUIRE(edges.size() == 4);

    const auto& x0 = edges[0];  // h(0,y) = 76y^3 - 72y^2 + 72, max 76 at y=1
    CHECK(x0.restricted == MultiPoly::parse("76*y^3 - 72*y^2 + 72"));
    CHECK(x0.max.lb == 76);
    CHECK(x0.max.witness.second == 1);

    const auto& x1 = edges[1];  // corner (1,0): value 72
    CHECK(x1.max.lb == 72);

    const auto& y0 = edges[2];  // h(x,0) = -36x^4 + 72x^3 - 36x^2 + 72
    CHECK(y0.restricted == MultiPoly::parse("-36*x^4 + 72*x^3 - 36*x^2 + 72"));
    CHECK(y0.max.lb == 72);

    const auto& curve = edges[3];
    CHECK(curve.restricted ==
          MultiPoly::parse("-182/5*x^6 + 204/5*x^4 + 72*x^3 - 402/5*x^2 + 76"));
    CHECK(curve.max.lb == 76);
    CHECK(curve.max.witness.first == 0);
}
