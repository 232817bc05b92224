#pragma once

#include <utility>
#include <vector>

#include "hankelbound/multipoly.hpp"
#include "hankelbound/rational.hpp"

namespace hankelbound {

// Tensor-product Bernstein form of a bivariate polynomial on [0,1]^2, exact
// rational throughout. Bernstein coefficients bound the polynomial from
// below on the patch, and the four corner coefficients equal its values at
// the patch corners; de Casteljau subdivision refines both facts. That gives
// a nonnegativity certificate that tolerates exact boundary contact, which
// plain interval branch-and-bound cannot resolve.
class BernsteinPatch {
public:
    // b[i][j]: x-index i in 0..dx, y-index j in 0..dy
    BernsteinPatch(int dx, int dy)
        : b_(static_cast<std::size_t>(dx) + 1,
             std::vector<Rational>(static_cast<std::size_t>(dy) + 1, Rational(0))) {}

    static BernsteinPatch from_poly(const MultiPoly& p) {
        for (int v = 0; v < 4; ++v)
            if (p.depends_on(static_cast<Var>(v)))
                throw std::invalid_argument("Bernstein form needs a polynomial in x and y only");
        const int dx = p.degree_in(Var::x), dy = p.degree_in(Var::y);
        // dense power coefficients
        std::vector<std::vector<Rational>> a(static_cast<std::size_t>(dx) + 1,
                                             std::vector<Rational>(static_cast<std::size_t>(dy) + 1,
                                                                   Rational(0)));
        for (const auto& [e, c] : p.terms())
            a[static_cast<std::size_t>(e[static_cast<int>(Var::x)])]
             [static_cast<std::size_t>(e[static_cast<int>(Var::y)])] = c;

        const auto binom = binomial_table(std::max(dx, dy) + 1);
        BernsteinPatch out(dx, dy);
        for (int i = 0; i <= dx; ++i)
            for (int j = 0; j <= dy; ++j) {
                Rational acc(0);
                for (int k = 0; k <= i; ++k)
                    for (int l = 0; l <= j; ++l) {
                        const Rational w =
                            Rational(binom[i][k] * binom[j][l]) / (binom[dx][k] * binom[dy][l]);
                        acc += w * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
                    }
                out.b_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
            }
        return out;
    }

    int dx() const { return static_cast<int>(b_.size()) - 1; }
    int dy() const { return static_cast<int>(b_.front().size()) - 1; }
    const Rational& at(int i, int j) const {
        return b_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    Rational min_coeff() const {
        Rational m = b_[0][0];
        for (const auto& col : b_)
            for (const auto& v : col)
                if (v < m) m = v;
        return m;
    }

    bool all_nonneg() const { return min_coeff() >= 0; }

    // Corner coefficients are exact values of the polynomial at patch corners.
    Rational corner_min() const {
        const int nx = dx(), ny = dy();
        Rational m = at(0, 0);
        for (const Rational& v : {at(nx, 0), at(0, ny), at(nx, ny)})
            if (v < m) m = v;
        return m;
    }

    std::pair<BernsteinPatch, BernsteinPatch> split_x() const {
        const int nx = dx(), ny = dy();
        BernsteinPatch left(nx, ny), right(nx, ny);
        const Rational half(1, 2);
        for (int j = 0; j <= ny; ++j) {
            std::vector<Rational> tri(static_cast<std::size_t>(nx) + 1);
            for (int i = 0; i <= nx; ++i) tri[static_cast<std::size_t>(i)] = at(i, j);
            for (int level = 0; level <= nx; ++level) {
                left.b_[static_cast<std::size_t>(level)][static_cast<std::size_t>(j)] = tri[0];
                right.b_[static_cast<std::size_t>(nx - level)][static_cast<std::size_t>(j)] =
                    tri[static_cast<std::size_t>(nx - level)];
                for (int i = 0; i < nx - level; ++i)
                    tri[static_cast<std::size_t>(i)] =
                        (tri[static_cast<std::size_t>(i)] + tri[static_cast<std::size_t>(i) + 1]) *
                        half;
            }
        }
        return {std::move(left), std::move(right)};
    }

    std::pair<BernsteinPatch, BernsteinPatch> split_y() const {
        const int nx = dx(), ny = dy();
        BernsteinPatch bottom(nx, ny), top(nx, ny);
        const Rational half(1, 2);
        for (int i = 0; i <= nx; ++i) {
            std::vector<Rational> tri(static_cast<std::size_t>(ny) + 1);
            for (int j = 0; j <= ny; ++j) tri[static_cast<std::size_t>(j)] = at(i, j);
            for (int level = 0; level <= ny; ++level) {
                bottom.b_[static_cast<std::size_t>(i)][static_cast<std::size_t>(level)] = tri[0];
                top.b_[static_cast<std::size_t>(i)][static_cast<std::size_t>(ny - level)] =
                    tri[static_cast<std::size_t>(ny - level)];
                for (int j = 0; j < ny - level; ++j)
                    tri[static_cast<std::size_t>(j)] =
                        (tri[static_cast<std::size_t>(j)] + tri[static_cast<std::size_t>(j) + 1]) *
                        half;
            }
        }
        return {std::move(bottom), std::move(top)};
    }

private:
    static std::vector<std::vector<Integer>> binomial_table(int n) {
        std::vector<std::vector<Integer>> c(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
            c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, Integer(1));
            for (int k = 1; k < i; ++k)
                c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                    c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] +
                    c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)];
        }
        return c;
    }

    std::vector<std::vector<Rational>> b_;
};

}  // namespace hankelbound
