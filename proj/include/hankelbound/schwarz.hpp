#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "hankelbound/errors.hpp"
#include "hankelbound/rational.hpp"
#include "hankelbound/series.hpp"

namespace hankelbound {

// Taylor coefficients c_1..c_N of a Schwarz function w(z) = z*sigma(z).
// `certified` is set only by schur_to_coeffs, whose outputs lie in the
// coefficient body by construction.
template <class T>
struct SchwarzCoeffsT {
    std::vector<T> c;
    bool certified = false;
};

using SchwarzCoeffs = SchwarzCoeffsT<double>;
using SchwarzCoeffsC = SchwarzCoeffsT<std::complex<double>>;
using SchwarzCoeffsQ = SchwarzCoeffsT<Rational>;

struct PSParams {
    double mu = 0.0;
    double nu = 0.0;
};

inline constexpr double kLemmaTol = 1e-12;

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }
inline double magnitude(const Rational& v) { return std::abs(to_double(v)); }

inline bool in_closed_disk(double v) { return std::abs(v) <= 1.0 + 1e-15; }
inline bool in_closed_disk(const std::complex<double>& v) { return std::abs(v) <= 1.0 + 1e-15; }
inline bool in_closed_disk(const Rational& v) { return rational_abs(v) <= 1; }

}  // namespace detail

// Builds c_1..c_N from Schur parameters gamma_0..gamma_m via the backward
// Moebius recursion sigma_m = gamma_m,
//   sigma_k(z) = (gamma_k + z*sigma_{k+1}(z)) / (1 + conj(gamma_k)*z*sigma_{k+1}(z)),
// truncated at order N-1; then c_k = [z^{k-1}] sigma_0. Any parameter vector
// in the closed unit polydisk yields an admissible coefficient tuple, and the
// map covers the whole coefficient body. Exact over Rational inputs.
template <class T>
SchwarzCoeffsT<T> schur_to_coeffs(const std::vector<T>& gamma, int N) {
    if (N < 1) throw std::invalid_argument("need N >= 1");
    if (gamma.empty()) throw std::invalid_argument("need at least one Schur parameter");
    for (const T& g : gamma)
        if (!detail::in_closed_disk(g)) throw ParamOutOfDisk("Schur parameter outside the closed unit disk");

    using S = TruncSeries<T>;
    const int W = N - 1;
    S sigma = S::constant(gamma.back(), W);
    for (int k = static_cast<int>(gamma.size()) - 2; k >= 0; --k) {
        S zs = sigma.mul_z().truncated(W);
        S num = S::constant(gamma[static_cast<std::size_t>(k)], W) + zs;
        S den = S::constant(RingTraits<T>::one(), W) +
                zs * RingTraits<T>::conj(gamma[static_cast<std::size_t>(k)]);
        sigma = num.div(den);
    }
    SchwarzCoeffsT<T> out;
    out.c.resize(static_cast<std::size_t>(N));
    for (int j = 1; j <= N; ++j) out.c[static_cast<std::size_t>(j - 1)] = sigma[j - 1];
    out.certified = true;
    return out;
}

// Coefficient-body inequalities |c2| <= 1-|c1|^2 and |c4| <= 1-|c1|^2-|c2|^2
// (the second only when c4 is supplied), within kLemmaTol.
template <class T>
bool carlson_satisfied(const SchwarzCoeffsT<T>& sc, double tol = kLemmaTol) {
    if (sc.c.size() < 2) throw ArityMismatch("need at least c_1, c_2");
    const double a1 = detail::magnitude(sc.c[0]);
    const double a2 = detail::magnitude(sc.c[1]);
    if (a2 > 1.0 - a1 * a1 + tol) return false;
    if (sc.c.size() >= 4) {
        const double a4 = detail::magnitude(sc.c[3]);
        if (a4 > 1.0 - a1 * a1 - a2 * a2 + tol) return false;
    }
    return true;
}

// Exact-rational variant (no tolerance at all).
inline bool carlson_satisfied_exact(const SchwarzCoeffsQ& sc) {
    if (sc.c.size() < 2) throw ArityMismatch("need at least c_1, c_2");
    const Rational a1 = rational_abs(sc.c[0]);
    const Rational a2 = rational_abs(sc.c[1]);
    if (a2 > 1 - a1 * a1) return false;
    if (sc.c.size() >= 4) {
        const Rational a4 = rational_abs(sc.c[3]);
        if (a4 > 1 - a1 * a1 - a2 * a2) return false;
    }
    return true;
}

// Admissible (mu,nu) region for |c3 + mu c1 c2 + nu c1^3| <= 1:
//   D1 = { |mu| <= 1/2, |nu| <= 1 }
//   D2 = { 1/2 <= |mu| <= 2,  4/27 (|mu|+1)^3 - (|mu|+1) <= nu <= 1 }.
inline bool ps_admissible(const PSParams& p, double tol = kLemmaTol) {
    const double am = std::abs(p.mu);
    const bool d1 = am <= 0.5 + tol && std::abs(p.nu) <= 1.0 + tol;
    const double t = am + 1.0;
    const bool d2 = am >= 0.5 - tol && am <= 2.0 + tol &&
                    p.nu >= (4.0 / 27.0) * t * t * t - t - tol && p.nu <= 1.0 + tol;
    return d1 || d2;
}

// |c3 + mu c1 c2 + nu c1^3|.
template <class T>
double ps_functional(const SchwarzCoeffsT<T>& sc, const PSParams& p) {
    if (sc.c.size() < 3) throw ArityMismatch("need c_1, c_2, c_3");
    const T v = sc.c[2] + T(p.mu) * sc.c[0] * sc.c[1] + T(p.nu) * sc.c[0] * sc.c[0] * sc.c[0];
    return detail::magnitude(v);
}

inline Rational ps_functional_exact(const SchwarzCoeffsQ& sc, const Rational& mu, const Rational& nu) {
    if (sc.c.size() < 3) throw ArityMismatch("need c_1, c_2, c_3");
    return rational_abs(sc.c[2] + mu * sc.c[0] * sc.c[1] + nu * sc.c[0] * sc.c[0] * sc.c[0]);
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro-style stream built on splitmix64; platform-independent, so seeded
// runs produce byte-identical reports everywhere.
struct SeededRng {
    std::uint64_t state;
    explicit SeededRng(std::uint64_t seed) : state(splitmix64(seed)) {}
    std::uint64_t next_u64() {
        state = splitmix64(state);
        return state;
    }
    double next_unit() {  // [0, 1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }
    double next_symmetric() {  // [-1, 1]
        return 2.0 * next_unit() - 1.0;
    }
    std::complex<double> next_in_disk() {
        for (;;) {
            const double re = next_symmetric(), im = next_symmetric();
            if (re * re + im * im <= 1.0) return {re, im};
        }
    }
};

inline std::uint64_t sample_stream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ (0xa0761d6478bd642fULL + index * 0xe7037ed1a0b428dbULL));
}

}  // namespace detail

enum class SampleField { Real, Complex };

// Deterministic sampler of the coefficient body, real Schur parameters
// uniform on [-1,1]. Per-sample derived seeds, so runs shard cleanly and
// repeat bit-identically.
inline std::vector<SchwarzCoeffs> sample_body(std::uint64_t seed, int m, int count, int N = 4) {
    if (m < 0 || count < 1) throw std::invalid_argument("need m >= 0 and count >= 1");
    std::vector<SchwarzCoeffs> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        detail::SeededRng rng(detail::sample_stream_seed(seed, static_cast<std::uint64_t>(i)));
        std::vector<double> gamma(static_cast<std::size_t>(m) + 1);
        for (auto& g : gamma) g = rng.next_symmetric();
        out.push_back(schur_to_coeffs(gamma, N));
    }
    return out;
}

// Complex-field sampler, parameters uniform on the unit disk by rejection.
inline std::vector<SchwarzCoeffsC> sample_body_complex(std::uint64_t seed, int m, int count, int N = 4) {
    if (m < 0 || count < 1) throw std::invalid_argument("need m >= 0 and count >= 1");
    std::vector<SchwarzCoeffsC> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        detail::SeededRng rng(detail::sample_stream_seed(seed, static_cast<std::uint64_t>(i)));
        std::vector<std::complex<double>> gamma(static_cast<std::size_t>(m) + 1);
        for (auto& g : gamma) g = rng.next_in_disk();
        out.push_back(schur_to_coeffs(gamma, N));
    }
    return out;
}

}  // namespace hankelbound
