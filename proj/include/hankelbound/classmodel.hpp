#pragma once

#include <string>
#include <vector>

#include "hankelbound/errors.hpp"
#include "hankelbound/multipoly.hpp"
#include "hankelbound/rational.hpp"
#include "hankelbound/series.hpp"

namespace hankelbound {

// An Ozaki-type class, parameterized by lambda in the defining relation
//   [z f'(z)]' * (1 - w(z)) = (1 + lambda*w(z)) * f'(z),
// equivalently  z f'' = w * ((1+lambda) f' + z f'').
// F has lambda = 2, G has lambda = -2.
struct ClassSpec {
    std::string name;
    Rational lambda;

    static ClassSpec F() { return {"F", Rational(2)}; }
    static ClassSpec G() { return {"G", Rational(-2)}; }
    static ClassSpec custom(const Rational& lambda) {
        return {"lambda=" + rational_to_string(lambda), lambda};
    }

    bool is_F() const { return lambda == 2; }
    bool is_G() const { return lambda == -2; }
};

// Taylor coefficients a_2..a_N of a class member, each an exact polynomial in
// the Schwarz coefficients c_1..c_{N-1}. a_1 is identically 1.
struct CoeffTable {
    ClassSpec spec;
    int order = 0;
    std::vector<MultiPoly> a;  // a[k] is a_{k+2}

    const MultiPoly& coeff(int n) const {
        if (n < 2 || n > order) throw OrderTooLow("a_" + std::to_string(n) + " is not in the table");
        return a[static_cast<std::size_t>(n - 2)];
    }
};

// The fixed variable universe carries c_1..c_4 only, which covers a_2..a_5.
inline constexpr int kMaxDeriveOrder = 5;

// Solves the triangular recurrence obtained by equating z^(n-1) coefficients
// of  z f'' = w * ((1+lambda) f' + z f''):
//   n(n-1) a_n = sum_{k=1}^{n-1} c_k (n-k)(n-k+lambda) a_{n-k},  a_1 = 1.
inline CoeffTable derive_coefficients(const ClassSpec& spec, int order) {
    if (order < 2) throw std::invalid_argument("order must be at least 2");
    if (order > kMaxDeriveOrder)
        throw std::invalid_argument("coefficient derivation supports order <= 5 (variables c1..c4)");
    std::vector<MultiPoly> a(static_cast<std::size_t>(order) + 1);  // a[n] = a_n, a[0] unused
    a[1] = pconst(1);
    for (int n = 2; n <= order; ++n) {
        MultiPoly rhs;
        for (int k = 1; k <= n - 1; ++k) {
            const Rational factor = Rational(n - k) * (Rational(n - k) + spec.lambda);
            rhs += pvar(static_cast<Var>(k - 1)) * a[static_cast<std::size_t>(n - k)] * factor;
        }
        a[static_cast<std::size_t>(n)] = rhs * (Rational(1) / (Rational(n) * (n - 1)));
    }
    CoeffTable table{spec, order, {}};
    table.a.assign(a.begin() + 2, a.end());
    return table;
}

// Numeric a_2..a_N at a Schwarz coefficient point; exact over Rational.
template <class T>
std::vector<T> eval_coefficients(const CoeffTable& table, const std::vector<T>& c_point) {
    if (static_cast<int>(c_point.size()) < table.order - 1)
        throw ArityMismatch("need c_1..c_" + std::to_string(table.order - 1));
    std::array<T, kNumVars> point{};
    for (int k = 0; k < 4 && k < static_cast<int>(c_point.size()); ++k) point[k] = c_point[k];
    std::vector<T> out;
    out.reserve(table.a.size());
    for (const auto& an : table.a) out.push_back(an.eval(point));
    return out;
}

// Residual of the defining relation with the derived coefficients substituted:
//   z f'' - w * ((1+lambda) f' + z f'')  truncated at z^(order-1).
// Identically zero exactly when the table solves the recurrence.
inline TruncSeries<MultiPoly> class_relation_residual(const CoeffTable& table) {
    const int N = table.order;
    using S = TruncSeries<MultiPoly>;
    // f = z + a_2 z^2 + ... + a_N z^N
    std::vector<MultiPoly> fc(static_cast<std::size_t>(N) + 1);
    fc[1] = pconst(1);
    for (int n = 2; n <= N; ++n) fc[static_cast<std::size_t>(n)] = table.coeff(n);
    S f = S::from_coeffs(std::move(fc));
    S fp = f.derivative();                  // order N-1
    S zfpp = fp.derivative().mul_z();       // z f'', order N-1
    // w = c_1 z + ... + c_{N-1} z^{N-1}
    S w(N - 1);
    for (int k = 1; k <= N - 1; ++k) w.at(k) = pvar(static_cast<Var>(k - 1));
    const MultiPoly one_plus_lambda = pconst(Rational(1) + table.spec.lambda);
    S rhs = w * (fp * one_plus_lambda + zfpp);
    return zfpp - rhs;
}

}  // namespace hankelbound
