#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hankelbound/multipoly.hpp"
#include "hankelbound/rational.hpp"

namespace hankelbound {

namespace rnd {

inline double down(double v) {
    return std::nextafter(v, -std::numeric_limits<double>::infinity());
}
inline double up(double v) {
    return std::nextafter(v, std::numeric_limits<double>::infinity());
}

// Directed versions of + and * through error-free transformations: TwoSum
// and FMA-based TwoProd recover the exact rounding error, so results round
// outward only when the operation actually rounded. Exact operations stay
// exact (no fake ulp inflation), which keeps enclosures tight.
inline double add_err(double a, double b, double s) {
    const double bb = s - a;
    return (a - (s - bb)) + (b - bb);
}
inline double add_lo(double a, double b) {
    const double s = a + b;
    return add_err(a, b, s) >= 0.0 ? s : down(s);
}
inline double add_hi(double a, double b) {
    const double s = a + b;
    return add_err(a, b, s) <= 0.0 ? s : up(s);
}
inline double mul_lo(double a, double b) {
    const double p = a * b;
    return std::fma(a, b, -p) >= 0.0 ? p : down(p);
}
inline double mul_hi(double a, double b) {
    const double p = a * b;
    return std::fma(a, b, -p) <= 0.0 ? p : up(p);
}

}  // namespace rnd

// Directed rational-to-double conversions (exact when representable).
inline double to_double_down(const Rational& q) {
    const double d = to_double(q);
    return rational_from_double(d) <= q ? d : rnd::down(d);
}
inline double to_double_up(const Rational& q) {
    const double d = to_double(q);
    return rational_from_double(d) >= q ? d : rnd::up(d);
}

// Closed floating-point interval with outward-rounded arithmetic: every
// operation returns an enclosure of the exact result set.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    static Interval point(double v) { return {v, v}; }
    static Interval make(double a, double b) { return {std::min(a, b), std::max(a, b)}; }

    // Tight enclosure of an exact rational.
    static Interval from_rational(const Rational& q) {
        const double d = to_double(q);
        if (rational_from_double(d) == q) return {d, d};
        return {rnd::down(d), rnd::up(d)};
    }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
    bool strictly_positive() const { return lo > 0.0; }
    bool strictly_negative() const { return hi < 0.0; }

    bool subset_of_interior(const Interval& o) const { return o.lo < lo && hi < o.hi; }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return {rnd::add_lo(a.lo, b.lo), rnd::add_hi(a.hi, b.hi)};
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return {rnd::add_lo(a.lo, -b.hi), rnd::add_hi(a.hi, -b.lo)};
    }
    friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
    friend Interval operator*(const Interval& a, const Interval& b) {
        const double lo = std::min(std::min(rnd::mul_lo(a.lo, b.lo), rnd::mul_lo(a.lo, b.hi)),
                                   std::min(rnd::mul_lo(a.hi, b.lo), rnd::mul_lo(a.hi, b.hi)));
        const double hi = std::max(std::max(rnd::mul_hi(a.lo, b.lo), rnd::mul_hi(a.lo, b.hi)),
                                   std::max(rnd::mul_hi(a.hi, b.lo), rnd::mul_hi(a.hi, b.hi)));
        return {lo, hi};
    }

    Interval pow(int k) const {
        if (k == 0) return point(1.0);
        if (k == 1) return *this;
        if (k % 2 == 0 && contains_zero()) {
            // even power over a straddling interval: range is [0, m^k]
            const double m = std::max(-lo, hi);
            double t = 1.0;
            for (int i = 0; i < k; ++i) t = rnd::mul_hi(t, m);
            return {0.0, t};
        }
        Interval r = *this;
        for (int i = 1; i < k; ++i) r = r * *this;
        return r;
    }

    static Interval hull(const Interval& a, const Interval& b) {
        return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
    }

    // Intersection; empty is signaled through the optional-like flag.
    bool intersect(const Interval& o, Interval& out) const {
        const double l = std::max(lo, o.lo), h = std::min(hi, o.hi);
        if (l > h) return false;
        out = {l, h};
        return true;
    }
};

struct Box {
    Interval x, y;

    double max_width() const { return std::max(x.width(), y.width()); }
    bool contains_point(double px, double py) const { return x.contains(px) && y.contains(py); }
};

// A bivariate polynomial in (x, y) compiled to interval coefficients for fast
// rigorous box evaluation (nested Horner), with the exact form kept alongside
// for rational point evaluation.
class CompiledBivariate {
public:
    CompiledBivariate() = default;

    explicit CompiledBivariate(const MultiPoly& p) : exact_(p) {
        for (int v = 0; v < 4; ++v)
            if (p.depends_on(static_cast<Var>(v)))
                throw std::invalid_argument("expected a polynomial in x and y only");
        const int dx = p.degree_in(Var::x), dy = p.degree_in(Var::y);
        rows_.assign(static_cast<std::size_t>(dy) + 1,
                     std::vector<Interval>(static_cast<std::size_t>(dx) + 1, Interval::point(0.0)));
        exact_rows_.assign(static_cast<std::size_t>(dy) + 1,
                           std::vector<Rational>(static_cast<std::size_t>(dx) + 1, Rational(0)));
        for (const auto& [e, c] : p.terms()) {
            const int i = e[static_cast<int>(Var::x)], j = e[static_cast<int>(Var::y)];
            rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = Interval::from_rational(c);
            exact_rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = c;
        }
    }

    const MultiPoly& exact() const { return exact_; }

    Interval eval(const Box& b) const {
        Interval acc = Interval::point(0.0);
        for (auto j = rows_.size(); j-- > 0;) {
            Interval row = Interval::point(0.0);
            const auto& r = rows_[j];
            for (auto i = r.size(); i-- > 0;) row = row * b.x + r[i];
            acc = acc * b.y + row;
        }
        return acc;
    }

    // Plain double evaluation (not rigorous; used for sampling heuristics).
    double eval_point(double x, double y) const {
        double acc = 0.0;
        for (auto j = rows_.size(); j-- > 0;) {
            double row = 0.0;
            const auto& r = rows_[j];
            for (auto i = r.size(); i-- > 0;) row = row * x + 0.5 * (r[i].lo + r[i].hi);
            acc = acc * y + row;
        }
        return acc;
    }

    Rational eval_exact(const Rational& x, const Rational& y) const {
        Rational acc(0);
        for (auto j = exact_rows_.size(); j-- > 0;) {
            Rational row(0);
            const auto& r = exact_rows_[j];
            for (auto i = r.size(); i-- > 0;) row = row * x + r[i];
            acc = acc * y + row;
        }
        return acc;
    }

private:
    MultiPoly exact_;
    std::vector<std::vector<Interval>> rows_;
    std::vector<std::vector<Rational>> exact_rows_;
};

}  // namespace hankelbound
