#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <complex>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hankelbound/errors.hpp"
#include "hankelbound/rational.hpp"

namespace hankelbound {

// Fixed global variable universe, in this order. Canonical exponent vectors
// always have kNumVars slots.
enum class Var : int { c1 = 0, c2 = 1, c3 = 2, c4 = 3, x = 4, y = 5 };

inline constexpr int kNumVars = 6;

inline constexpr std::array<const char*, kNumVars> kVarNames = {"c1", "c2", "c3", "c4", "x", "y"};

using Expo = std::array<int, kNumVars>;

inline int total_degree(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Degree-lexicographic term order: total degree first, then lex on the
// exponent vector. Gives decidable equality and reproducible printing.
struct DegLexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

namespace detail {

template <class T>
inline T ring_cast(const Rational& q) {
    return static_cast<T>(to_double(q));
}
template <>
inline Rational ring_cast<Rational>(const Rational& q) {
    return q;
}
template <>
inline std::complex<double> ring_cast<std::complex<double>>(const Rational& q) {
    return {to_double(q), 0.0};
}

}  // namespace detail

// Sparse multivariate polynomial with exact rational coefficients over the
// fixed variable universe (c1,c2,c3,c4,x,y). Stored coefficients are never
// zero; equality is exact structural equality.
class MultiPoly {
public:
    using TermMap = std::map<Expo, Rational, DegLexLess>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& constant) {
        if (constant != 0) terms_.emplace(Expo{}, constant);
    }
    explicit MultiPoly(long long constant) : MultiPoly(Rational(constant)) {}

    static MultiPoly variable(Var v, int power = 1) {
        Expo e{};
        e[static_cast<int>(v)] = power;
        return monomial(Rational(1), e);
    }

    static MultiPoly monomial(const Rational& coeff, const Expo& e) {
        MultiPoly p;
        if (coeff != 0) p.terms_.emplace(e, coeff);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{});
    }

    Rational constant_term() const {
        auto it = terms_.find(Expo{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    int total_degree() const {
        // map is degree-sorted, so the last term is maximal
        return terms_.empty() ? 0 : hankelbound::total_degree(terms_.rbegin()->first);
    }

    int degree_in(Var v) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
        return d;
    }

    bool depends_on(Var v) const {
        for (const auto& [e, c] : terms_)
            if (e[static_cast<int>(v)] > 0) return true;
        return false;
    }

    MultiPoly& operator+=(const MultiPoly& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
        return *this;
    }
    MultiPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [e, c] : terms_) c *= s;
        }
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r = a;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Expo e;
                for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative polynomial power");
        MultiPoly r{Rational(1)};
        MultiPoly base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    MultiPoly derivative(Var v) const {
        const int iv = static_cast<int>(v);
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            if (e[iv] == 0) continue;
            Expo d = e;
            d[iv] -= 1;
            r.add_term(d, c * e[iv]);
        }
        return r;
    }

    // Substitutes `value` for `v`. The replacement may itself contain `v`.
    MultiPoly substitute(Var v, const MultiPoly& value) const {
        const int iv = static_cast<int>(v);
        MultiPoly r;
        std::map<int, MultiPoly> powers;  // cache value^k
        powers[0] = MultiPoly{Rational(1)};
        for (const auto& [e, c] : terms_) {
            Expo rest = e;
            const int k = rest[iv];
            rest[iv] = 0;
            auto it = powers.find(k);
            if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
            r += monomial(c, rest) * it->second;
        }
        return r;
    }

    // Full-point evaluation over any ring T reachable from Rational.
    template <class T>
    T eval(const std::array<T, kNumVars>& point) const {
        T acc{};
        for (const auto& [e, c] : terms_) {
            T term = detail::ring_cast<T>(c);
            for (int i = 0; i < kNumVars; ++i)
                for (int k = 0; k < e[i]; ++k) term = term * point[i];
            acc = acc + term;
        }
        return acc;
    }

    // Map-based evaluation; every occurring variable must be bound.
    template <class T>
    T eval(const std::map<Var, T>& assignment) const {
        std::array<T, kNumVars> point{};
        std::array<bool, kNumVars> bound{};
        for (const auto& [v, val] : assignment) {
            point[static_cast<int>(v)] = val;
            bound[static_cast<int>(v)] = true;
        }
        for (const auto& [e, c] : terms_)
            for (int i = 0; i < kNumVars; ++i)
                if (e[i] > 0 && !bound[i])
                    throw UnboundVariable(std::string("unbound variable ") + kVarNames[i]);
        return eval(point);
    }

    // Sum of |coeff| * x^(deg c1) * y^(deg c2) over all terms: the triangle
    // inequality image of a polynomial in c1,c2 under |c1|->x, |c2|->y.
    // Only valid for polynomials in c1,c2.
    MultiPoly modulus_majorant() const {
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            if (e[static_cast<int>(Var::c3)] || e[static_cast<int>(Var::c4)] ||
                e[static_cast<int>(Var::x)] || e[static_cast<int>(Var::y)])
                throw std::invalid_argument("modulus majorant needs a polynomial in c1,c2");
            Expo m{};
            m[static_cast<int>(Var::x)] = e[static_cast<int>(Var::c1)];
            m[static_cast<int>(Var::y)] = e[static_cast<int>(Var::c2)];
            r.add_term(m, rational_abs(c));
        }
        return r;
    }

    // Weighted degree under weight(c_k)=k, provided the polynomial is
    // weighted-homogeneous and free of x,y; nullopt otherwise.
    std::optional<int> weighted_degree() const {
        std::optional<int> w;
        for (const auto& [e, c] : terms_) {
            if (e[static_cast<int>(Var::x)] || e[static_cast<int>(Var::y)]) return std::nullopt;
            int we = e[0] * 1 + e[1] * 2 + e[2] * 3 + e[3] * 4;
            if (!w) {
                w = we;
            } else if (*w != we) {
                return std::nullopt;
            }
        }
        return w;
    }

    // Canonical text: terms in descending deglex order, coefficients exact,
    // e.g. "-23*c1^2*c2^2 + 4*c1*c2*c3". Round-trips through parse().
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            const bool neg = c < 0;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            Rational a = rational_abs(c);
            const bool is_const_term = (e == Expo{});
            if (a != 1 || is_const_term) out += rational_to_string(a);
            bool first_factor = !(a != 1 || is_const_term);
            for (int i = 0; i < kNumVars; ++i) {
                if (e[i] == 0) continue;
                if (!first_factor || a != 1 || is_const_term) out += "*";
                out += kVarNames[i];
                if (e[i] > 1) {
                    out += "^";
                    out += std::to_string(e[i]);
                }
                first_factor = false;
            }
        }
        return out;
    }

    static MultiPoly parse(std::string_view text);

private:
    void add_term(const Expo& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

namespace detail {

struct PolyParser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) +
                                    ": " + what);
    }

    std::string read_integer() {
        skip_ws();
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            digits += s[pos++];
        if (digits.empty()) fail("expected integer");
        return digits;
    }

    Rational read_coeff() {
        std::string num = read_integer();
        if (peek() == '/') {
            ++pos;
            std::string den = read_integer();
            return parse_rational(num + "/" + den);
        }
        return parse_rational(num);
    }

    std::optional<Var> try_read_var() {
        skip_ws();
        for (int i = 0; i < kNumVars; ++i) {
            std::string_view name = kVarNames[i];
            if (s.substr(pos, name.size()) == name) {
                // "c1".."c4" and single-letter "x","y"; longest match is fine
                // because no name is a prefix of another.
                pos += name.size();
                return static_cast<Var>(i);
            }
        }
        return std::nullopt;
    }

    // term := [coeff] ('*'? var ('^' int)?)*
    MultiPoly read_term() {
        Rational coeff(1);
        Expo e{};
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = read_coeff();
            saw_factor = true;
        }
        for (;;) {
            if (peek() == '*') {
                ++pos;
            } else if (saw_factor) {
                break;  // factors after the first must be '*'-joined
            }
            auto v = try_read_var();
            if (!v) {
                if (saw_factor) fail("expected variable after '*'");
                fail("expected coefficient or variable");
            }
            int power = 1;
            if (peek() == '^') {
                ++pos;
                power = std::stoi(read_integer());
            }
            e[static_cast<int>(*v)] += power;
            saw_factor = true;
        }
        return MultiPoly::monomial(coeff, e);
    }
};

}  // namespace detail

inline MultiPoly MultiPoly::parse(std::string_view text) {
    detail::PolyParser p{text};
    MultiPoly result;
    if (p.eof()) p.fail("empty input");
    if (p.peek() == '0') {
        std::size_t save = p.pos;
        ++p.pos;
        if (p.eof()) return result;
        p.pos = save;
    }
    bool negative = false;
    if (p.peek() == '-') {
        negative = true;
        ++p.pos;
    } else if (p.peek() == '+') {
        ++p.pos;
    }
    for (;;) {
        MultiPoly term = p.read_term();
        result += negative ? -term : term;
        if (p.eof()) break;
        char sign = p.peek();
        if (sign != '+' && sign != '-') p.fail("expected '+' or '-' between terms");
        negative = (sign == '-');
        ++p.pos;
    }
    return result;
}

// Convenience builders used throughout.
inline MultiPoly pvar(Var v, int power = 1) { return MultiPoly::variable(v, power); }
inline MultiPoly pconst(const Rational& q) { return MultiPoly(q); }
inline MultiPoly pconst(long long n) { return MultiPoly(Rational(n)); }

}  // namespace hankelbound
