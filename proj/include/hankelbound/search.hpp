#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <thread>
#include <vector>

#include "hankelbound/decomp.hpp"
#include "hankelbound/hankel.hpp"
#include "hankelbound/schwarz.hpp"

namespace hankelbound {

// H3(1) as a flat coefficient/exponent table over c1..c4 for fast numeric
// evaluation inside the search loop.
class CompiledHankel {
public:
    explicit CompiledHankel(const ClassSpec& cls) {
        CoeffTable table = derive_coefficients(cls, 5);
        HankelPoly hp = hankel_poly(table, 3, 1);
        for (const auto& [e, c] : hp.poly.terms())
            terms_.push_back({to_double(c),
                              {e[0], e[1], e[2], e[3]}});
    }

    double eval_abs(const std::array<double, 4>& c) const {
        double acc = 0.0;
        for (const auto& t : terms_) {
            double v = t.coeff;
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < t.e[i]; ++k) v *= c[static_cast<std::size_t>(i)];
            acc += v;
        }
        return std::abs(acc);
    }

    double eval_abs(const std::array<std::complex<double>, 4>& c) const {
        std::complex<double> acc = 0.0;
        for (const auto& t : terms_) {
            std::complex<double> v = t.coeff;
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < t.e[i]; ++k) v *= c[static_cast<std::size_t>(i)];
            acc += v;
        }
        return std::abs(acc);
    }

private:
    struct Term {
        double coeff;
        std::array<int, 4> e;
    };
    std::vector<Term> terms_;
};

struct SearchTraceRow {
    int restart = 0;
    int iteration = 0;
    double value = 0.0;
    std::vector<double> params;  // complex runs interleave re,im
};

struct SearchOptions {
    int m = 4;
    int restarts = 1000;
    std::uint64_t seed = 7;
    bool complex_field = false;
    int threads = 1;
    bool record_trace = false;
    int max_evals_per_restart = 6000;
};

struct SearchResult {
    ClassSpec cls;
    double best_value = 0.0;
    std::vector<double> best_params;                  // real parameters
    std::vector<std::complex<double>> best_params_c;  // complex runs
    SchwarzCoeffs best_coeffs;
    SchwarzCoeffsC best_coeffs_c;
    int restarts = 0;
    std::uint64_t seed = 0;
    std::optional<Rational> conjectured_value;  // exact |H3| at w = z^2
    std::optional<Rational> proven_bound;       // certified upper bound for the class
    double conjecture_gap = 0.0;                // best_value - conjectured
    double proven_bound_margin = 0.0;           // proven - best_value
    bool counterexample_candidate = false;
    std::optional<Rational> counterexample_exact;  // exact re-evaluation at rationalized params
    std::vector<double> counterexample_params;
    std::vector<SearchTraceRow> trace;
};

// Exact evaluation of one candidate: Schur parameters -> coefficients ->
// |H3(1)|, all over rationals.
inline std::pair<SchwarzCoeffsQ, Rational> evaluate_candidate(const ClassSpec& cls,
                                                              const std::vector<Rational>& gamma) {
    SchwarzCoeffsQ sc = schur_to_coeffs<Rational>(gamma, 4);
    CoeffTable table = derive_coefficients(cls, 5);
    const Rational v = hankel_eval<Rational>(table, 3, 1, sc.c);
    return {sc, rational_abs(v)};
}

namespace detail {

struct RestartOutcome {
    double value = -1.0;
    std::vector<double> params;
    std::vector<SearchTraceRow> trace;
};

// Coordinate pattern search with shrinking step, clamped to the parameter
// cube (real) or polydisk (complex, on interleaved re/im pairs).
template <class Objective, class Clamp>
RestartOutcome pattern_search(Objective&& objective, Clamp&& clamp, std::vector<double> p,
                              int restart_index, int max_evals, bool record_trace) {
    RestartOutcome out;
    clamp(p);
    double f = objective(p);
    int evals = 1;
    double step = 0.5;
    int iteration = 0;
    if (record_trace) out.trace.push_back({restart_index, iteration, f, p});
    while (step > 1e-13 && evals < max_evals) {
        bool improved = false;
        for (std::size_t i = 0; i < p.size() && evals < max_evals; ++i) {
            for (double sign : {1.0, -1.0}) {
                std::vector<double> q = p;
                q[i] += sign * step;
                clamp(q);
                if (q[i] == p[i]) continue;
                const double fq = objective(q);
                ++evals;
                if (fq > f) {
                    f = fq;
                    p = std::move(q);
                    improved = true;
                    ++iteration;
                    if (record_trace) out.trace.push_back({restart_index, iteration, f, p});
                    break;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    out.value = f;
    out.params = std::move(p);
    return out;
}

}  // namespace detail

// Multistart numeric maximization of |H3(1)| over the Schwarz coefficient
// body via Schur parameters. Deterministic for a fixed seed regardless of
// thread count: restarts derive independent streams and merge by value with
// restart-index tie-break.
inline SearchResult search_extremal(const ClassSpec& cls, const SearchOptions& opt = {}) {
    if (opt.m < 0 || opt.restarts < 1) throw std::invalid_argument("need m >= 0, restarts >= 1");
    CompiledHankel objective_poly(cls);
    const int dim = (opt.m + 1) * (opt.complex_field ? 2 : 1);

    auto objective = [&](const std::vector<double>& p) {
        if (!opt.complex_field) {
            auto sc = schur_to_coeffs<double>(p, 4);
            return objective_poly.eval_abs(
                std::array<double, 4>{sc.c[0], sc.c[1], sc.c[2], sc.c[3]});
        }
        std::vector<std::complex<double>> gamma(p.size() / 2);
        for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] = {p[2 * i], p[2 * i + 1]};
        auto sc = schur_to_coeffs<std::complex<double>>(gamma, 4);
        return objective_poly.eval_abs(
            std::array<std::complex<double>, 4>{sc.c[0], sc.c[1], sc.c[2], sc.c[3]});
    };
    auto clamp = [&](std::vector<double>& p) {
        if (!opt.complex_field) {
            for (double& v : p) v = std::clamp(v, -1.0, 1.0);
            return;
        }
        for (std::size_t i = 0; i + 1 < p.size(); i += 2) {
            const double r = std::hypot(p[i], p[i + 1]);
            if (r > 1.0) {
                p[i] /= r;
                p[i + 1] /= r;
            }
        }
    };

    std::vector<detail::RestartOutcome> outcomes(static_cast<std::size_t>(opt.restarts));
    auto run_range = [&](int begin, int end) {
        for (int r = begin; r < end; ++r) {
            detail::SeededRng rng(
                detail::sample_stream_seed(opt.seed, static_cast<std::uint64_t>(r)));
            std::vector<double> p(static_cast<std::size_t>(dim));
            for (double& v : p) v = rng.next_symmetric();
            outcomes[static_cast<std::size_t>(r)] =
                detail::pattern_search(objective, clamp, std::move(p), r,
                                       opt.max_evals_per_restart, opt.record_trace);
        }
    };

    const int threads = std::max(1, opt.threads);
    if (threads == 1) {
        run_range(0, opt.restarts);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (opt.restarts + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int begin = t * chunk, end = std::min(opt.restarts, begin + chunk);
            if (begin < end) pool.emplace_back(run_range, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    SearchResult result;
    result.cls = cls;
    result.restarts = opt.restarts;
    result.seed = opt.seed;
    int best_idx = 0;
    for (int r = 1; r < opt.restarts; ++r)
        if (outcomes[static_cast<std::size_t>(r)].value >
            outcomes[static_cast<std::size_t>(best_idx)].value)
            best_idx = r;
    auto& best = outcomes[static_cast<std::size_t>(best_idx)];
    result.best_value = best.value;
    if (opt.record_trace)
        for (auto& o : outcomes)
            result.trace.insert(result.trace.end(), o.trace.begin(), o.trace.end());

    if (!opt.complex_field) {
        result.best_params = best.params;
        result.best_coeffs = schur_to_coeffs<double>(best.params, 4);
    } else {
        result.best_params_c.resize(best.params.size() / 2);
        for (std::size_t i = 0; i < result.best_params_c.size(); ++i)
            result.best_params_c[i] = {best.params[2 * i], best.params[2 * i + 1]};
        result.best_coeffs_c = schur_to_coeffs<std::complex<double>>(result.best_params_c, 4);
    }

    // reference values: the w = z^2 candidate, exactly, and the certified
    // upper bound from the class decomposition
    if (cls.is_F() || cls.is_G()) {
        result.conjectured_value =
            evaluate_candidate(cls, {Rational(0), Rational(1)}).second;
        BoundDecomposition d = builtin_decomposition(cls);
        CertifiedBound hmax = certify_max(d.majorant, Region::omega(), 1e-9);
        result.proven_bound = bound_from_decomposition(d, hmax).hi;
        result.conjecture_gap = result.best_value - to_double(*result.conjectured_value);
        result.proven_bound_margin = to_double(*result.proven_bound) - result.best_value;

        if (result.conjecture_gap > 1e-7) {
            result.counterexample_candidate = true;
            // exact re-evaluation at nearby rational parameters
            std::vector<Rational> gamma_q;
            const auto& params =
                opt.complex_field ? std::vector<double>() : result.best_params;
            for (double v : params)
                gamma_q.push_back(Rational(static_cast<long long>(std::llround(v * 1e6)), 1000000));
            if (!gamma_q.empty()) {
                for (auto& g : gamma_q) {
                    if (g > 1) g = 1;
                    if (g < -1) g = -1;
                }
                result.counterexample_exact = evaluate_candidate(cls, gamma_q).second;
                result.counterexample_params = result.best_params;
            }
        }
    }
    return result;
}

}  // namespace hankelbound
