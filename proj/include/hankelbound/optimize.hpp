#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "hankelbound/bernstein.hpp"
#include "hankelbound/interval.hpp"
#include "hankelbound/multipoly.hpp"
#include "hankelbound/rational.hpp"

namespace hankelbound {

// Feasible set {(x,y) in box : g_i(x,y) >= 0 for all i}. The flag marks the
// standard region {0<=x<=1, 0<=y<=1-x^2}, for which certify_nonneg has an
// exact substitution route.
struct Region {
    Box box;
    std::vector<MultiPoly> constraints;
    bool omega_curve = false;

    static Region omega() {
        Region r;
        r.box = {Interval{0.0, 1.0}, Interval{0.0, 1.0}};
        MultiPoly x = pvar(Var::x), y = pvar(Var::y);
        r.constraints = {x, pconst(1) - x, y, pconst(1) - x.pow(2) - y};
        r.omega_curve = true;
        return r;
    }

    static Region box_only(double x0, double x1, double y0, double y1) {
        Region r;
        r.box = {Interval{x0, x1}, Interval{y0, y1}};
        return r;
    }
};

// Rigorous enclosure of a global maximum: lb is the exact value at a feasible
// witness, ub an outward-rounded upper bound over the whole region.
struct CertifiedBound {
    Rational lb{0};
    double ub = std::numeric_limits<double>::infinity();
    std::pair<Rational, Rational> witness{Rational(0), Rational(0)};
    bool has_witness = false;
    std::uint64_t nodes = 0;
    double eps = 0.0;
    bool converged = false;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

namespace detail {

struct BnbItem {
    Box box;
    double ub;
};

struct BnbOrder {
    bool operator()(const BnbItem& a, const BnbItem& b) const {
        if (a.ub != b.ub) return a.ub < b.ub;  // max-heap on ub
        if (a.box.x.lo != b.box.x.lo) return a.box.x.lo > b.box.x.lo;
        if (a.box.y.lo != b.box.y.lo) return a.box.y.lo > b.box.y.lo;
        if (a.box.x.hi != b.box.x.hi) return a.box.x.hi > b.box.x.hi;
        return a.box.y.hi > b.box.y.hi;
    }
};

// Compiled constraint set with exact originals for point feasibility.
// Constraints affine in one variable double as contractors: g = A(x) + B*y
// with constant B gives a rigorous y-range over each box, which stops boxes
// straddling a curved boundary from dragging in far-infeasible values.
struct CompiledRegion {
    std::vector<CompiledBivariate> gs;
    struct Contractor {
        CompiledBivariate bound;  // bound polynomial in the other variable
        bool on_y;                // contracts y (else x)
        bool is_upper;            // y <= bound (else y >= bound)
    };
    std::vector<Contractor> contractors;
    const Region* region;

    explicit CompiledRegion(const Region& r) : region(&r) {
        gs.reserve(r.constraints.size());
        for (const auto& g : r.constraints) gs.emplace_back(g);
        for (const auto& g : r.constraints) {
            for (Var v : {Var::y, Var::x}) {
                if (g.degree_in(v) != 1) continue;
                MultiPoly coeff_poly, rest;
                for (const auto& [e, c] : g.terms()) {
                    Expo er = e;
                    if (e[static_cast<int>(v)] == 1) {
                        er[static_cast<int>(v)] = 0;
                        coeff_poly += MultiPoly::monomial(c, er);
                    } else {
                        rest += MultiPoly::monomial(c, er);
                    }
                }
                if (!coeff_poly.is_constant()) continue;
                const Rational b = coeff_poly.constant_term();
                // A + B v >= 0  <=>  v <= A/(-B) for B < 0,  v >= -A/B for B > 0
                MultiPoly bound = rest * (Rational(-1) / b);
                contractors.push_back({CompiledBivariate(bound), v == Var::y, b < 0});
                break;  // one variable per constraint
            }
        }
    }

    // Shrinks the box while keeping every feasible point; returns false when
    // the contraction proves the box infeasible.
    bool contract(Box& b) const {
        for (const auto& c : contractors) {
            const Interval range = c.bound.eval(b);
            Interval& target = c.on_y ? b.y : b.x;
            if (c.is_upper) {
                if (range.hi < target.lo) return false;
                target.hi = std::min(target.hi, range.hi);
            } else {
                if (range.lo > target.hi) return false;
                target.lo = std::max(target.lo, range.lo);
            }
        }
        return true;
    }

    // Entire box violates some constraint: contains no feasible point.
    bool box_infeasible(const Box& b) const {
        for (const auto& g : gs)
            if (g.eval(b).strictly_negative()) return true;
        return false;
    }

    bool box_strictly_feasible(const Box& b) const {
        for (const auto& g : gs)
            if (!g.eval(b).strictly_positive()) return false;
        return true;
    }

    bool point_feasible_exact(const Rational& px, const Rational& py) const {
        for (const auto& g : gs)
            if (g.eval_exact(px, py) < 0) return false;
        return true;
    }
};

}  // namespace detail

// Certified global maximization over a region by interval branch-and-bound.
// Boxes wholly violating a constraint are discarded; boxes merely straddling
// the boundary are evaluated whole, a sound over-approximation. The lower
// bound comes from exact rational evaluation at feasible box corners and
// centers, so vertex maxima (the relevant case here) are hit exactly.
inline CertifiedBound certify_max(const MultiPoly& h, const Region& region, double eps,
                                  std::uint64_t node_budget = kDefaultNodeBudget) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    CompiledBivariate ch(h);
    CompiledBivariate chx(h.derivative(Var::x)), chy(h.derivative(Var::y));
    detail::CompiledRegion cr(region);

    // Where the gradient sign is fixed over a box, the maximum sits on the
    // corresponding face; evaluating the collapsed box gives a far tighter
    // upper bound near vertex maxima. The original box still drives
    // feasibility tests and splitting.
    auto monotone_ub = [&](const Box& b) {
        Box ub_box = b;
        const Interval gx = chx.eval(ub_box);
        if (gx.lo > 0.0)
            ub_box.x = Interval::point(ub_box.x.hi);
        else if (gx.hi < 0.0)
            ub_box.x = Interval::point(ub_box.x.lo);
        const Interval gy = chy.eval(ub_box);
        if (gy.lo > 0.0)
            ub_box.y = Interval::point(ub_box.y.hi);
        else if (gy.hi < 0.0)
            ub_box.y = Interval::point(ub_box.y.lo);
        return ch.eval(ub_box).hi;
    };

    CertifiedBound result;
    result.eps = eps;

    auto try_point = [&](const Rational& px, const Rational& py) {
        if (!cr.point_feasible_exact(px, py)) return;
        Rational v = ch.eval_exact(px, py);
        if (!result.has_witness || v > result.lb) {
            result.lb = v;
            result.witness = {px, py};
            result.has_witness = true;
        }
    };

    auto seed_box_points = [&](const Box& b) {
        const double mx = 0.5 * (b.x.lo + b.x.hi), my = 0.5 * (b.y.lo + b.y.hi);
        const double pts[5][2] = {{b.x.lo, b.y.lo},
                                  {b.x.hi, b.y.lo},
                                  {b.x.lo, b.y.hi},
                                  {b.x.hi, b.y.hi},
                                  {mx, my}};
        // double-precision screen: exact evaluation only where the sample
        // could plausibly beat the incumbent (screen slack far exceeds the
        // evaluation error, and lb soundness never depends on the screen)
        const double screen = result.has_witness
                                  ? to_double(result.lb) + 1e-11 * (1.0 + std::abs(to_double(result.lb)))
                                  : -std::numeric_limits<double>::infinity();
        for (const auto& p : pts) {
            if (ch.eval_point(p[0], p[1]) < screen) continue;
            try_point(rational_from_double(p[0]), rational_from_double(p[1]));
        }
    };

    std::priority_queue<detail::BnbItem, std::vector<detail::BnbItem>, detail::BnbOrder> queue;
    double pruned_max = -std::numeric_limits<double>::infinity();

    seed_box_points(region.box);
    queue.push({region.box, monotone_ub(region.box)});

    auto lb_floor = [&]() {
        return result.has_witness ? to_double_down(result.lb)
                                  : -std::numeric_limits<double>::infinity();
    };

    while (!queue.empty()) {
        if (result.nodes >= node_budget) {
            // budget exhausted: report the best sound enclosure so far
            result.ub = std::max(queue.top().ub, pruned_max);
            if (result.has_witness) result.ub = std::max(result.ub, to_double_up(result.lb));
            result.converged = false;
            return result;
        }
        detail::BnbItem item = queue.top();
        queue.pop();
        ++result.nodes;

        const double threshold = lb_floor() + eps;
        if (item.ub <= threshold) {
            pruned_max = std::max(pruned_max, item.ub);
            break;  // heap order: every remaining box is below the threshold too
        }

        // split the wider dimension; a box too thin to bisect in either
        // dimension can only be folded into the upper bound
        const double mx = item.box.x.mid(), my = item.box.y.mid();
        const bool can_x = mx > item.box.x.lo && mx < item.box.x.hi;
        const bool can_y = my > item.box.y.lo && my < item.box.y.hi;
        if (!can_x && !can_y) {
            pruned_max = std::max(pruned_max, item.ub);
            continue;
        }
        Box children[2] = {item.box, item.box};
        if (can_x && (!can_y || item.box.x.width() >= item.box.y.width())) {
            children[0].x = {item.box.x.lo, mx};
            children[1].x = {mx, item.box.x.hi};
        } else {
            children[0].y = {item.box.y.lo, my};
            children[1].y = {my, item.box.y.hi};
        }
        for (Box child : children) {
            if (!cr.contract(child)) continue;
            if (cr.box_infeasible(child)) continue;
            const double ub_child = monotone_ub(child);
            seed_box_points(child);
            if (ub_child <= lb_floor() + eps) {
                pruned_max = std::max(pruned_max, ub_child);
            } else {
                queue.push({child, ub_child});
            }
        }
    }

    double ub = pruned_max;
    while (!queue.empty()) {  // drained by the early break: fold remaining tops
        ub = std::max(ub, queue.top().ub);
        queue.pop();
    }
    if (result.has_witness) ub = std::max(ub, to_double_up(result.lb));
    result.ub = ub;
    result.converged =
        result.has_witness && result.ub - to_double_down(result.lb) <= eps;
    return result;
}

enum class NonnegStatus { Certified, Violated, Inconclusive };

// Certificate for min p >= 0 over a region. `min_enclosure` brackets the true
// minimum: the lower end from Bernstein coefficients (or interval bounds),
// the upper end from an exact value at a feasible point.
struct NonnegCertificate {
    NonnegStatus status = NonnegStatus::Inconclusive;
    Rational min_lb{0};
    Rational min_ub{0};
    bool has_min_ub = false;
    std::pair<Rational, Rational> violation{Rational(0), Rational(0)};
    std::uint64_t patches = 0;
    int max_depth_seen = 0;
    std::string method;
};

namespace detail {

struct PatchTask {
    BernsteinPatch patch;
    Rational x0, x1, y0, y1;  // sub-box of [0,1]^2 the patch covers
    int depth;
};

// Subdivision loop over Bernstein patches on [0,1]^2. Exact arithmetic:
// termination with Certified means min p >= min_lb >= 0 rigorously, corner
// contact at zero included.
inline NonnegCertificate bernstein_nonneg(const MultiPoly& p01, std::uint64_t patch_budget,
                                          int depth_budget, const std::string& method) {
    NonnegCertificate cert;
    cert.method = method;
    if (p01.is_zero()) {
        cert.status = NonnegStatus::Certified;
        return cert;
    }

    std::deque<PatchTask> work;
    work.push_back({BernsteinPatch::from_poly(p01), Rational(0), Rational(1), Rational(0),
                    Rational(1), 0});
    bool first_leaf = true;
    bool has_min_lb = false;
    while (!work.empty()) {
        if (++cert.patches > patch_budget) {
            cert.status = NonnegStatus::Inconclusive;
            return cert;
        }
        PatchTask t = std::move(work.front());
        work.pop_front();
        cert.max_depth_seen = std::max(cert.max_depth_seen, t.depth);

        // corner coefficients are exact values: track the upper bound and
        // detect genuine violations
        const int nx = t.patch.dx(), ny = t.patch.dy();
        const std::pair<Rational, std::pair<Rational, Rational>> corners[4] = {
            {t.patch.at(0, 0), {t.x0, t.y0}},
            {t.patch.at(nx, 0), {t.x1, t.y0}},
            {t.patch.at(0, ny), {t.x0, t.y1}},
            {t.patch.at(nx, ny), {t.x1, t.y1}},
        };
        for (const auto& [value, pt] : corners) {
            if (!cert.has_min_ub || value < cert.min_ub) {
                cert.min_ub = value;
                cert.has_min_ub = true;
            }
            if (value < 0) {
                cert.status = NonnegStatus::Violated;
                cert.violation = pt;
                return cert;
            }
        }

        const Rational mc = t.patch.min_coeff();
        if (mc >= 0) {
            if (first_leaf || mc < cert.min_lb) cert.min_lb = mc;
            first_leaf = false;
            has_min_lb = true;
            continue;  // certified on this patch
        }
        if (t.depth >= depth_budget) {
            cert.status = NonnegStatus::Inconclusive;
            return cert;
        }
        const Rational wx = t.x1 - t.x0, wy = t.y1 - t.y0;
        const Rational half(1, 2);
        if (wx >= wy) {
            auto [left, right] = t.patch.split_x();
            const Rational xm = (t.x0 + t.x1) * half;
            work.push_back({std::move(left), t.x0, xm, t.y0, t.y1, t.depth + 1});
            work.push_back({std::move(right), xm, t.x1, t.y0, t.y1, t.depth + 1});
        } else {
            auto [bottom, top] = t.patch.split_y();
            const Rational ym = (t.y0 + t.y1) * half;
            work.push_back({std::move(bottom), t.x0, t.x1, t.y0, ym, t.depth + 1});
            work.push_back({std::move(top), t.x0, t.x1, ym, t.y1, t.depth + 1});
        }
    }
    cert.status = NonnegStatus::Certified;
    if (!has_min_lb) cert.min_lb = Rational(0);
    return cert;
}

}  // namespace detail

// Certifies min p >= 0 over the region. For the curved standard region the
// substitution y -> (1-x^2) y maps it exactly onto [0,1]^2, where exact
// Bernstein subdivision decides nonnegativity even with boundary contact;
// plain boxes are affinely rescaled to [0,1]^2. Regions with other
// constraint sets only get the quick interval check.
inline NonnegCertificate certify_nonneg(const MultiPoly& p, const Region& region,
                                        std::uint64_t patch_budget = 200'000,
                                        int depth_budget = 48) {
    // quick interval screen over the bounding box
    CompiledBivariate cp(p);
    const Interval whole = cp.eval(region.box);
    if (whole.lo >= 0.0) {
        NonnegCertificate cert;
        cert.status = NonnegStatus::Certified;
        cert.min_lb = rational_from_double(whole.lo);
        cert.method = "interval-box";
        return cert;
    }

    MultiPoly x = pvar(Var::x), y = pvar(Var::y);
    if (region.omega_curve) {
        MultiPoly tilde = p.substitute(Var::y, (pconst(1) - x.pow(2)) * y);
        NonnegCertificate cert =
            detail::bernstein_nonneg(tilde, patch_budget, depth_budget, "bernstein-omega");
        if (cert.status == NonnegStatus::Violated) {
            // map the witness back through y -> (1-x^2) y
            const Rational wx = cert.violation.first;
            cert.violation.second = (Rational(1) - wx * wx) * cert.violation.second;
        }
        return cert;
    }
    if (region.constraints.empty()) {
        const Rational x0 = rational_from_double(region.box.x.lo);
        const Rational x1 = rational_from_double(region.box.x.hi);
        const Rational y0 = rational_from_double(region.box.y.lo);
        const Rational y1 = rational_from_double(region.box.y.hi);
        MultiPoly rescaled = p.substitute(Var::x, pconst(x0) + pconst(x1 - x0) * x)
                                  .substitute(Var::y, pconst(y0) + pconst(y1 - y0) * y);
        NonnegCertificate cert =
            detail::bernstein_nonneg(rescaled, patch_budget, depth_budget, "bernstein-box");
        if (cert.status == NonnegStatus::Violated) {
            cert.violation.first = x0 + (x1 - x0) * cert.violation.first;
            cert.violation.second = y0 + (y1 - y0) * cert.violation.second;
        }
        return cert;
    }
    NonnegCertificate cert;
    cert.status = NonnegStatus::Inconclusive;
    cert.method = "interval-box";
    return cert;
}

// A verified interior critical point with its rigorous enclosure.
struct CriticalPoint {
    double x = 0.0;
    double y = 0.0;
    double value = 0.0;
    Box enclosure;
};

struct CriticalPointResult {
    std::vector<CriticalPoint> points;   // verified, strictly interior, unique per enclosure
    std::vector<Box> boundary_clusters;  // zero-gradient contact on the region boundary
    std::vector<Box> unresolved;         // interior boxes the verifier could not decide
    std::uint64_t nodes = 0;
};

namespace detail {

struct IMat2 {
    Interval a11, a12, a21, a22;
};

enum class KrawczykOutcome { NoRoot, Verified, Unknown };

// One Krawczyk step: K = m - Y F(m) + (I - Y J(X)) (X - m).
inline KrawczykOutcome krawczyk_step(const CompiledBivariate& fx, const CompiledBivariate& fy,
                                     const CompiledBivariate& fxx, const CompiledBivariate& fxy,
                                     const CompiledBivariate& fyy, const Box& X, Box& K_out) {
    const double mx = X.x.mid(), my = X.y.mid();
    const Box mid_box{Interval::point(mx), Interval::point(my)};
    const Interval Fmx = fx.eval(mid_box), Fmy = fy.eval(mid_box);
    const IMat2 J{fxx.eval(X), fxy.eval(X), fxy.eval(X), fyy.eval(X)};

    const double j11 = J.a11.mid(), j12 = J.a12.mid(), j21 = J.a21.mid(), j22 = J.a22.mid();
    const double det = j11 * j22 - j12 * j21;
    if (!std::isfinite(det) || std::abs(det) < 1e-14) return KrawczykOutcome::Unknown;
    const double y11 = j22 / det, y12 = -j12 / det, y21 = -j21 / det, y22 = j11 / det;

    const Interval Y11 = Interval::point(y11), Y12 = Interval::point(y12);
    const Interval Y21 = Interval::point(y21), Y22 = Interval::point(y22);

    // I - Y J(X)
    const Interval one = Interval::point(1.0);
    const IMat2 R{one - (Y11 * J.a11 + Y12 * J.a21), -(Y11 * J.a12 + Y12 * J.a22),
                  -(Y21 * J.a11 + Y22 * J.a21), one - (Y21 * J.a12 + Y22 * J.a22)};

    const Interval dx = X.x - Interval::point(mx);
    const Interval dy = X.y - Interval::point(my);
    const Interval kx =
        Interval::point(mx) - (Y11 * Fmx + Y12 * Fmy) + (R.a11 * dx + R.a12 * dy);
    const Interval ky =
        Interval::point(my) - (Y21 * Fmx + Y22 * Fmy) + (R.a21 * dx + R.a22 * dy);

    Interval ix, iy;
    if (!kx.intersect(X.x, ix) || !ky.intersect(X.y, iy)) return KrawczykOutcome::NoRoot;
    K_out = {ix, iy};
    if (kx.subset_of_interior(X.x) && ky.subset_of_interior(X.y)) return KrawczykOutcome::Verified;
    return KrawczykOutcome::Unknown;
}

}  // namespace detail

// All simultaneous zeros of (dh/dx, dh/dy) strictly inside the region, found
// by interval subdivision with Krawczyk existence/uniqueness verification.
// Gradient zeros touching the region boundary are reported separately, not
// as interior critical points.
inline CriticalPointResult critical_points(const MultiPoly& h, const Region& region, double tol,
                                           std::uint64_t node_budget = kDefaultNodeBudget) {
    if (tol <= 0) throw std::invalid_argument("tol must be positive");
    const MultiPoly hx = h.derivative(Var::x), hy = h.derivative(Var::y);
    CompiledBivariate ch(h), cfx(hx), cfy(hy);
    CompiledBivariate cfxx(hx.derivative(Var::x)), cfxy(hx.derivative(Var::y)),
        cfyy(hy.derivative(Var::y));
    detail::CompiledRegion cr(region);

    const double min_width = std::max(tol * 1e-2, 1e-11);
    const double refine_target = std::min(tol * 1e-2, 1e-12);

    CriticalPointResult result;
    std::vector<Box> stack{region.box};

    auto inside_verified = [&](const Box& b) {
        for (const auto& cp : result.points) {
            // skip boxes living inside an already-verified enclosure (padded)
            const double pad = 10 * std::max(cp.enclosure.x.width(), cp.enclosure.y.width()) +
                               4 * min_width;
            if (b.x.lo >= cp.enclosure.x.lo - pad && b.x.hi <= cp.enclosure.x.hi + pad &&
                b.y.lo >= cp.enclosure.y.lo - pad && b.y.hi <= cp.enclosure.y.hi + pad)
                return true;
        }
        return false;
    };

    auto strictly_interior = [&](const Box& b) {
        if (!(b.x.lo > region.box.x.lo && b.x.hi < region.box.x.hi && b.y.lo > region.box.y.lo &&
              b.y.hi < region.box.y.hi))
            return false;
        return cr.box_strictly_feasible(b);
    };

    while (!stack.empty()) {
        if (result.nodes++ >= node_budget) break;
        Box box = stack.back();
        stack.pop_back();

        if (cr.box_infeasible(box)) continue;
        if (!cfx.eval(box).contains_zero() || !cfy.eval(box).contains_zero()) continue;
        if (inside_verified(box)) continue;

        const bool interior = strictly_interior(box);
        if (interior && box.max_width() < 0.25) {
            // epsilon-inflation so roots sitting exactly on a bisection face
            // can still be strictly enclosed
            const double ix = 0.05 * box.x.width() + 1e-13;
            const double iy = 0.05 * box.y.width() + 1e-13;
            Box X{{box.x.lo - ix, box.x.hi + ix}, {box.y.lo - iy, box.y.hi + iy}};
            bool verified = false;
            bool dead = false;
            for (int iter = 0; iter < 64; ++iter) {
                Box K;
                const auto outcome = detail::krawczyk_step(cfx, cfy, cfxx, cfxy, cfyy, X, K);
                if (outcome == detail::KrawczykOutcome::NoRoot) {
                    dead = true;
                    break;
                }
                if (outcome == detail::KrawczykOutcome::Verified) verified = true;
                const double before = X.max_width();
                X = K;
                if (verified && X.max_width() <= refine_target) break;
                if (X.max_width() > 0.99 * before && iter > 4) break;  // stalled
            }
            if (dead) continue;
            if (verified && strictly_interior(X)) {
                const double px = X.x.mid(), py = X.y.mid();
                bool duplicate = false;
                for (const auto& cp : result.points)
                    if (std::abs(cp.x - px) < 4 * tol && std::abs(cp.y - py) < 4 * tol)
                        duplicate = true;
                if (!duplicate)
                    result.points.push_back(
                        {px, py, ch.eval({Interval::point(px), Interval::point(py)}).mid(), X});
                continue;
            }
        }

        if (box.max_width() < min_width) {
            (interior ? result.unresolved : result.boundary_clusters).push_back(box);
            continue;
        }

        Box children[2] = {box, box};
        if (box.x.width() >= box.y.width()) {
            const double m = box.x.mid();
            children[0].x = {box.x.lo, m};
            children[1].x = {m, box.x.hi};
        } else {
            const double m = box.y.mid();
            children[0].y = {box.y.lo, m};
            children[1].y = {m, box.y.hi};
        }
        stack.push_back(children[0]);
        stack.push_back(children[1]);
    }

    std::sort(result.points.begin(), result.points.end(),
              [](const CriticalPoint& a, const CriticalPoint& b) {
                  return a.x != b.x ? a.x < b.x : a.y < b.y;
              });

    // merge touching boundary boxes into coarse clusters for reporting
    std::vector<Box> merged;
    for (const Box& b : result.boundary_clusters) {
        bool absorbed = false;
        for (Box& m : merged) {
            const double gap = 4 * min_width;
            if (b.x.lo <= m.x.hi + gap && m.x.lo <= b.x.hi + gap && b.y.lo <= m.y.hi + gap &&
                m.y.lo <= b.y.hi + gap) {
                m.x = Interval::hull(m.x, b.x);
                m.y = Interval::hull(m.y, b.y);
                absorbed = true;
                break;
            }
        }
        if (!absorbed) merged.push_back(b);
    }
    // repeat once more so chains collapse
    for (std::size_t pass = 0; pass < 2; ++pass) {
        std::vector<Box> again;
        for (const Box& b : merged) {
            bool absorbed = false;
            for (Box& m : again) {
                const double gap = 4 * min_width;
                if (b.x.lo <= m.x.hi + gap && m.x.lo <= b.x.hi + gap && b.y.lo <= m.y.hi + gap &&
                    m.y.lo <= b.y.hi + gap) {
                    m.x = Interval::hull(m.x, b.x);
                    m.y = Interval::hull(m.y, b.y);
                    absorbed = true;
                    break;
                }
            }
            if (!absorbed) again.push_back(b);
        }
        merged = std::move(again);
    }
    std::sort(merged.begin(), merged.end(), [](const Box& a, const Box& b) {
        return a.x.lo != b.x.lo ? a.x.lo < b.x.lo : a.y.lo < b.y.lo;
    });
    result.boundary_clusters = std::move(merged);
    return result;
}

}  // namespace hankelbound
