#pragma once

#include <vector>

#include "hankelbound/classmodel.hpp"
#include "hankelbound/errors.hpp"
#include "hankelbound/multipoly.hpp"

namespace hankelbound {

// A Hankel determinant H_q(n) expanded through a coefficient table: an exact
// polynomial in c_1..c_4, optionally rescaled (e.g. 320*H_3(1)).
struct HankelPoly {
    int q = 0;
    int n = 0;
    Rational scale{1};
    MultiPoly poly;
};

namespace detail {

inline MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t q = m.size();
    if (q == 1) return m[0][0];
    MultiPoly det;
    int sign = 1;
    for (std::size_t j = 0; j < q; ++j, sign = -sign) {
        std::vector<std::vector<MultiPoly>> minor;
        minor.reserve(q - 1);
        for (std::size_t r = 1; r < q; ++r) {
            std::vector<MultiPoly> row;
            row.reserve(q - 1);
            for (std::size_t c = 0; c < q; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        MultiPoly term = m[0][j] * poly_determinant(minor);
        det += sign > 0 ? term : -term;
    }
    return det;
}

}  // namespace detail

// Exact cofactor expansion of the q x q Hankel matrix of a-coefficients
// starting at a_n (with a_1 = 1), times `scale`.
inline HankelPoly hankel_poly(const CoeffTable& table, int q, int n, const Rational& scale = Rational(1)) {
    if (q < 1 || n < 1) throw std::invalid_argument("hankel determinant needs q >= 1, n >= 1");
    if (table.order < n + 2 * q - 2)
        throw OrderTooLow("table order " + std::to_string(table.order) + " < required a_" +
                          std::to_string(n + 2 * q - 2));
    std::vector<std::vector<MultiPoly>> m(static_cast<std::size_t>(q),
                                          std::vector<MultiPoly>(static_cast<std::size_t>(q)));
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            const int idx = n + i + j;
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                idx == 1 ? pconst(1) : table.coeff(idx);
        }
    }
    return HankelPoly{q, n, scale, detail::poly_determinant(m) * scale};
}

// Signed value of scale*H_q(n) at a Schwarz coefficient point; exact over
// Rational. Callers apply the absolute value.
template <class T>
T hankel_eval(const CoeffTable& table, int q, int n, const std::vector<T>& c_point,
              const Rational& scale = Rational(1)) {
    if (static_cast<int>(c_point.size()) < n + 2 * q - 3)
        throw ArityMismatch("point supplies c_1..c_" + std::to_string(c_point.size()) +
                            ", need c_1..c_" + std::to_string(n + 2 * q - 3));
    HankelPoly hp = hankel_poly(table, q, n, scale);
    std::array<T, kNumVars> point{};
    for (int k = 0; k < 4 && k < static_cast<int>(c_point.size()); ++k) point[k] = c_point[k];
    return hp.poly.eval(point);
}

}  // namespace hankelbound
