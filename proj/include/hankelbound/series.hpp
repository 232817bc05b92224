#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "hankelbound/errors.hpp"
#include "hankelbound/multipoly.hpp"
#include "hankelbound/rational.hpp"

namespace hankelbound {

// Coefficient-ring glue for TruncSeries. A ring needs zero/one, +,-,*, a
// conjugation (identity for real rings) and inversion of units.
template <class R>
struct RingTraits {
    static R zero() { return R(0); }
    static R one() { return R(1); }
    static R conj(const R& r) { return r; }
    static bool is_zero(const R& r) { return r == R(0); }
    static std::optional<R> inverse(const R& r) {
        if (r == R(0)) return std::nullopt;
        return R(1) / r;
    }
};

template <>
struct RingTraits<std::complex<double>> {
    using C = std::complex<double>;
    static C zero() { return {0.0, 0.0}; }
    static C one() { return {1.0, 0.0}; }
    static C conj(const C& r) { return std::conj(r); }
    static bool is_zero(const C& r) { return r == zero(); }
    static std::optional<C> inverse(const C& r) {
        if (is_zero(r)) return std::nullopt;
        return one() / r;
    }
};

template <>
struct RingTraits<MultiPoly> {
    static MultiPoly zero() { return MultiPoly{}; }
    static MultiPoly one() { return MultiPoly{Rational(1)}; }
    static MultiPoly conj(const MultiPoly& p) { return p; }
    static bool is_zero(const MultiPoly& p) { return p.is_zero(); }
    // Only nonzero rational constants are units in the polynomial ring.
    static std::optional<MultiPoly> inverse(const MultiPoly& p) {
        if (!p.is_constant() || p.is_zero()) return std::nullopt;
        return MultiPoly{Rational(1) / p.constant_term()};
    }
};

// Truncated univariate power series: coefficients of z^0..z^N over a ring R.
// All arithmetic discards terms beyond the truncation order; binary ops
// truncate to the shorter operand.
template <class R>
class TruncSeries {
public:
    explicit TruncSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1, RingTraits<R>::zero()) {
        if (order < 0) throw std::invalid_argument("negative series order");
    }

    static TruncSeries constant(const R& value, int order) {
        TruncSeries s(order);
        s.coeffs_[0] = value;
        return s;
    }

    static TruncSeries from_coeffs(std::vector<R> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("series needs at least the z^0 coefficient");
        TruncSeries s(static_cast<int>(coeffs.size()) - 1);
        s.coeffs_ = std::move(coeffs);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const R& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    R& at(int k) { return coeffs_[static_cast<std::size_t>(k)]; }

    TruncSeries truncated(int new_order) const {
        TruncSeries s(new_order);
        const int n = std::min(new_order, order());
        for (int k = 0; k <= n; ++k) s.coeffs_[k] = coeffs_[k];
        return s;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        const int n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (int k = 0; k <= n; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        const int n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (int k = 0; k <= n; ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        return r;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        const int n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (RingTraits<R>::is_zero(a.coeffs_[i])) continue;
            for (int j = 0; i + j <= n; ++j)
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    friend TruncSeries operator*(const TruncSeries& a, const R& s) {
        TruncSeries r = a;
        for (auto& c : r.coeffs_) c = c * s;
        return r;
    }

    // Division; the divisor's constant term must be a unit.
    TruncSeries div(const TruncSeries& b) const {
        const int n = std::min(order(), b.order());
        auto inv = RingTraits<R>::inverse(b.coeffs_[0]);
        if (!inv) throw DivisorNotUnit("series division needs an invertible constant term");
        TruncSeries r(n);
        for (int k = 0; k <= n; ++k) {
            R acc = coeffs_[k];
            for (int j = 0; j < k; ++j) acc = acc - r.coeffs_[j] * b.coeffs_[k - j];
            r.coeffs_[k] = acc * (*inv);
        }
        return r;
    }

    // d/dz; a series known through z^N determines its derivative through z^(N-1).
    TruncSeries derivative() const {
        if (order() == 0) return TruncSeries(0);
        TruncSeries r(order() - 1);
        for (int k = 1; k <= order(); ++k) r.coeffs_[k - 1] = coeffs_[k] * R(k);
        return r;
    }

    // Multiplication by z extends the order by one exactly (no information
    // is invented: the new top coefficient is the old one shifted).
    TruncSeries mul_z() const {
        TruncSeries r(order() + 1);
        for (int k = 0; k <= order(); ++k) r.coeffs_[k + 1] = coeffs_[k];
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<R> coeffs_;
};

template <>
inline TruncSeries<MultiPoly> TruncSeries<MultiPoly>::derivative() const {
    if (order() == 0) return TruncSeries<MultiPoly>(0);
    TruncSeries<MultiPoly> r(order() - 1);
    for (int k = 1; k <= order(); ++k) r.coeffs_[k - 1] = coeffs_[k] * Rational(k);
    return r;
}

}  // namespace hankelbound
