#pragma once

#include <string>
#include <vector>

#include "hankelbound/classmodel.hpp"
#include "hankelbound/errors.hpp"
#include "hankelbound/hankel.hpp"
#include "hankelbound/multipoly.hpp"
#include "hankelbound/optimize.hpp"
#include "hankelbound/schwarz.hpp"

namespace hankelbound {

// How a grouped expression is majorized after taking absolute values:
//   PSLemma:    |c3 + mu c1 c2 + nu c1^3|^power <= 1  (admissible (mu,nu))
//   Carlson2:   powers of |c2| become powers of y (its range on the region)
//   Carlson4:   |c4| becomes 1 - x^2 - y^2, the cofactor in c1,c2 becomes
//               its modulus majorant
//   ModulusSub: plain |c1| -> x, |c2| -> y renaming
enum class BoundRuleKind { PSLemma, Carlson2, Carlson4, ModulusSub };

inline const char* to_string(BoundRuleKind k) {
    switch (k) {
        case BoundRuleKind::PSLemma: return "ps-lemma";
        case BoundRuleKind::Carlson2: return "carlson-c2";
        case BoundRuleKind::Carlson4: return "carlson-c4";
        case BoundRuleKind::ModulusSub: return "modulus-sub";
    }
    return "?";
}

// One summand of the regrouped scaled determinant: multiplier * expr, with
// the rule that bounds |multiplier * expr| by a bivariate polynomial in
// (x, y) = (|c1|, |c2|).
struct Group {
    std::string label;
    BoundRuleKind rule = BoundRuleKind::ModulusSub;
    MultiPoly multiplier;  // polynomial in c1, c2 (often a constant)
    MultiPoly expr;
    Rational mu{0}, nu{0};  // PSLemma only
    int power = 1;          // PSLemma only: expr == base^power
};

// An on-region inequality step replacing `cofactor*from_expr` by
// `cofactor*to_expr` in the majorant sum. Obligations: to-from >= 0 and
// cofactor >= 0 on the region.
struct Relaxation {
    std::string label;
    MultiPoly cofactor;
    MultiPoly from_expr;
    MultiPoly to_expr;
};

// The full bound pipeline for one class as data: exact regrouping of the
// scaled H3 polynomial, per-group lemma bookkeeping, optional relaxations,
// and the resulting constant + majorant pair.
struct BoundDecomposition {
    ClassSpec cls;
    Rational scale{1};
    std::vector<Group> groups;
    std::vector<Relaxation> relaxations;
    Rational K{0};
    MultiPoly majorant;  // h(x, y)
};

inline MultiPoly ps_base(const Rational& mu, const Rational& nu) {
    return pvar(Var::c3) + pvar(Var::c1) * pvar(Var::c2) * mu + pvar(Var::c1, 3) * nu;
}

inline bool ps_admissible_exact(const Rational& mu, const Rational& nu) {
    const Rational am = rational_abs(mu);
    const bool d1 = am <= Rational(1, 2) && rational_abs(nu) <= 1;
    const Rational t = am + 1;
    const bool d2 = am >= Rational(1, 2) && am <= 2 &&
                    nu >= Rational(4, 27) * t * t * t - t && nu <= 1;
    return d1 || d2;
}

// Structural validity of a group plus its majorant contribution in (x,y).
// Throws std::invalid_argument when the group is malformed; rule violations
// (e.g. inadmissible PS parameters) are reported by verify_decomposition,
// not here.
inline MultiPoly group_majorant(const Group& g, bool* structure_ok = nullptr) {
    auto set_ok = [&](bool v) {
        if (structure_ok) *structure_ok = v;
    };
    set_ok(true);
    const MultiPoly mm = g.multiplier.modulus_majorant();
    switch (g.rule) {
        case BoundRuleKind::PSLemma: {
            if (g.expr != ps_base(g.mu, g.nu).pow(g.power)) set_ok(false);
            return mm;  // the lemma bounds |base|^power by 1
        }
        case BoundRuleKind::Carlson2:
        case BoundRuleKind::ModulusSub: {
            return mm * g.expr.modulus_majorant();
        }
        case BoundRuleKind::Carlson4: {
            // expr must be c4 times a polynomial in c1, c2
            MultiPoly cof;
            for (const auto& [e, c] : g.expr.terms()) {
                if (e[static_cast<int>(Var::c4)] != 1 || e[static_cast<int>(Var::c3)] != 0 ||
                    e[static_cast<int>(Var::x)] != 0 || e[static_cast<int>(Var::y)] != 0) {
                    set_ok(false);
                    return MultiPoly{};
                }
                Expo r = e;
                r[static_cast<int>(Var::c4)] = 0;
                cof += MultiPoly::monomial(c, r);
            }
            MultiPoly c4_range =
                pconst(1) - pvar(Var::x).pow(2) - pvar(Var::y).pow(2);  // |c4| bound
            return mm * cof.modulus_majorant() * c4_range;
        }
    }
    return MultiPoly{};
}

inline MultiPoly group_identity_part(const Group& g) { return g.multiplier * g.expr; }

// The two built-in decompositions.
inline BoundDecomposition builtin_decomposition(const ClassSpec& cls) {
    MultiPoly c1 = pvar(Var::c1), c2 = pvar(Var::c2), c3 = pvar(Var::c3), c4 = pvar(Var::c4);
    MultiPoly x = pvar(Var::x), y = pvar(Var::y);

    if (cls.is_F()) {
        BoundDecomposition d;
        d.cls = cls;
        d.scale = 320;
        d.K = 20;
        d.groups = {
            {"-20*(c3 - 1/10*c1*c2)^2", BoundRuleKind::PSLemma, pconst(-20),
             ps_base(Rational(-1, 10), Rational(0)).pow(2), Rational(-1, 10), Rational(0), 2},
            {"-114/5*c1^2*c2^2", BoundRuleKind::ModulusSub, pconst(Rational(-114, 5)),
             c1.pow(2) * c2.pow(2)},
            {"8*c1^3*(c3 + 1/2*c1*c2)", BoundRuleKind::PSLemma, c1.pow(3) * Rational(8),
             ps_base(Rational(1, 2), Rational(0)), Rational(1, 2), Rational(0), 1},
            {"20*c2^3", BoundRuleKind::Carlson2, pconst(20), c2.pow(3)},
            {"12*c4*(2*c2 - c1^2)", BoundRuleKind::Carlson4, pconst(12),
             c4 * (c2 * Rational(2) - c1.pow(2))},
        };
        d.majorant = x.pow(2) * y.pow(2) * Rational(54, 5) + x.pow(3) * Rational(8) -
                     y.pow(3) * Rational(4) + y * Rational(24) - x.pow(2) * y * Rational(24) +
                     x.pow(2) * Rational(12) - x.pow(4) * Rational(12);
        return d;
    }
    if (cls.is_G()) {
        BoundDecomposition d;
        d.cls = cls;
        d.scale = 8640;
        d.K = 60;
        d.groups = {
            {"-60*(c3 + 11/10*c1*c2)^2", BoundRuleKind::PSLemma, pconst(-60),
             ps_base(Rational(11, 10), Rational(0)).pow(2), Rational(11, 10), Rational(0), 2},
            {"756/10*c1^2*c2^2", BoundRuleKind::ModulusSub, pconst(Rational(756, 10)),
             c1.pow(2) * c2.pow(2)},
            {"72*c1^3*(c3 + 1/2*c1*c2)", BoundRuleKind::PSLemma, c1.pow(3) * Rational(72),
             ps_base(Rational(1, 2), Rational(0)), Rational(1, 2), Rational(0), 1},
            {"76*c2^3", BoundRuleKind::Carlson2, pconst(76), c2.pow(3)},
            {"36*c4*(2*c2 + 3*c1^2)", BoundRuleKind::Carlson4, pconst(36),
             c4 * (c2 * Rational(2) + c1.pow(2) * Rational(3))},
        };
        d.relaxations = {{"2*y + 3*x^2 <= 2 + x^2 on the region",
                          (pconst(1) - x.pow(2) - y.pow(2)) * Rational(36),
                          y * Rational(2) + x.pow(2) * Rational(3), pconst(2) + x.pow(2)}};
        d.majorant = x.pow(2) * y.pow(2) * Rational(756, 10) + x.pow(3) * Rational(72) +
                     y.pow(3) * Rational(76) +
                     (pconst(2) + x.pow(2)) * (pconst(1) - x.pow(2) - y.pow(2)) * Rational(36);
        return d;
    }
    throw UnsupportedClass("no built-in decomposition for " + cls.name);
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::vector<NonnegCertificate> relaxation_certificates;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Three independent layers of checking:
//  - identity: sum of groups reproduces the scaled determinant exactly;
//  - admissibility: every PS group has exact-rational admissible (mu,nu) and
//    well-formed structure;
//  - majorization: rule bounds assemble to exactly K + h after relaxations,
//    each relaxation discharged by a nonnegativity certificate on the region.
inline VerificationReport verify_decomposition(const BoundDecomposition& d, const HankelPoly& hp) {
    VerificationReport report;
    const Region omega = Region::omega();

    MultiPoly identity_sum;
    for (const auto& g : d.groups) identity_sum += group_identity_part(g);
    const MultiPoly residual = identity_sum - hp.poly;
    report.checks.push_back({"identity", residual.is_zero() && d.scale == hp.scale,
                             residual.is_zero() ? "regrouped sum equals the scaled determinant"
                                                : "residual: " + residual.to_string()});

    // Sum of rule bounds; the PS groups contribute the constant part, so the
    // total must equal K + h exactly.
    MultiPoly majorant_total;
    bool all_structure = true;
    for (const auto& g : d.groups) {
        bool structure_ok = true;
        const MultiPoly contrib = group_majorant(g, &structure_ok);
        all_structure = all_structure && structure_ok;
        majorant_total += contrib;
        if (g.rule == BoundRuleKind::PSLemma) {
            const bool admissible = ps_admissible_exact(g.mu, g.nu);
            report.checks.push_back(
                {"admissible[" + g.label + "]", admissible && structure_ok,
                 "(mu,nu)=(" + rational_to_string(g.mu) + "," + rational_to_string(g.nu) + ")" +
                     (structure_ok ? "" : "; malformed group expression")});
        } else if (!structure_ok) {
            report.checks.push_back({"structure[" + g.label + "]", false, "malformed group"});
        }
    }

    for (const auto& r : d.relaxations) {
        majorant_total += r.cofactor * (r.to_expr - r.from_expr);
        NonnegCertificate step = certify_nonneg(r.to_expr - r.from_expr, omega);
        NonnegCertificate cof = certify_nonneg(r.cofactor, omega);
        const bool ok =
            step.status == NonnegStatus::Certified && cof.status == NonnegStatus::Certified;
        report.checks.push_back(
            {"relaxation[" + r.label + "]", ok,
             ok ? "both obligations certified (" + step.method + ")"
                : "obligation not certified"});
        report.relaxation_certificates.push_back(std::move(step));
        report.relaxation_certificates.push_back(std::move(cof));
    }

    const MultiPoly majorant_residual = majorant_total - (MultiPoly{d.K} + d.majorant);
    report.checks.push_back(
        {"majorization", majorant_residual.is_zero() && all_structure,
         majorant_residual.is_zero() ? "rule bounds assemble to K + h exactly"
                                     : "residual: " + majorant_residual.to_string()});
    return report;
}

struct BoundInterval {
    Rational lo{0};
    Rational hi{0};
};

// Certified |H3(1)| enclosure from the decomposition and a certified maximum
// of its majorant: [(K + hmax.lb)/scale, (K + hmax.ub)/scale].
inline BoundInterval bound_from_decomposition(const BoundDecomposition& d,
                                              const CertifiedBound& hmax) {
    if (d.scale == 0) throw ScaleZero("decomposition scale is zero");
    return {(d.K + hmax.lb) / d.scale, (d.K + rational_from_double(hmax.ub)) / d.scale};
}

// One edge of the region with the majorant restricted to it.
struct EdgeProfile {
    std::string label;
    MultiPoly restricted;  // univariate (in x, or in y for the x=0 edge)
    Var param = Var::x;
    CertifiedBound max;
    bool has_factorization_check = false;
    bool factorization_ok = false;
    std::string factorization;
};

// Restrictions of the class majorant to the four edges of the region, each
// with a certified maximum; stated derivative factorizations are checked as
// exact identities.
inline std::vector<EdgeProfile> edge_profiles(const ClassSpec& cls, double eps = 1e-9) {
    const BoundDecomposition d = builtin_decomposition(cls);
    const MultiPoly& h = d.majorant;
    MultiPoly x = pvar(Var::x);

    std::vector<EdgeProfile> out;

    EdgeProfile e0;  // x = 0
    e0.label = "x=0";
    e0.restricted = h.substitute(Var::x, MultiPoly{});
    e0.param = Var::y;
    e0.max = certify_max(e0.restricted, Region::box_only(0, 0, 0, 1), eps);
    out.push_back(std::move(e0));

    EdgeProfile e1;  // x = 1 (the region pinches to the single point y = 0)
    e1.label = "x=1";
    e1.restricted = h.substitute(Var::x, pconst(1));
    e1.param = Var::y;
    e1.max = certify_max(e1.restricted, Region::box_only(0, 0, 0, 0), eps);
    out.push_back(std::move(e1));

    EdgeProfile e2;  // y = 0
    e2.label = "y=0";
    e2.restricted = h.substitute(Var::y, MultiPoly{});
    e2.max = certify_max(e2.restricted, Region::box_only(0, 1, 0, 0), eps);
    if (cls.is_F()) {
        e2.factorization = "x^2*(-12*x^2 + 8*x + 12)";
        e2.has_factorization_check = true;
        e2.factorization_ok =
            e2.restricted == x.pow(2) * MultiPoly::parse("-12*x^2 + 8*x + 12");
    }
    out.push_back(std::move(e2));

    EdgeProfile e3;  // y = 1 - x^2
    e3.label = "y=1-x^2";
    e3.restricted = h.substitute(Var::y, pconst(1) - x.pow(2));
    e3.max = certify_max(e3.restricted, Region::box_only(0, 1, 0, 0), eps);
    if (cls.is_F()) {
        // g'(x) = -(12/5) x (1-x) (11 + x + 37 x^2 + 37 x^3)
        MultiPoly gprime = e3.restricted.derivative(Var::x);
        MultiPoly factored = x * (pconst(1) - x) * MultiPoly::parse("11 + x + 37*x^2 + 37*x^3") *
                             Rational(-12, 5);
        e3.factorization = "-(12/5)*x*(1-x)*(11 + x + 37*x^2 + 37*x^3)";
        e3.has_factorization_check = true;
        e3.factorization_ok = gprime == factored;
    }
    out.push_back(std::move(e3));
    return out;
}

}  // namespace hankelbound
