#include <catch2/catch_amalgamated.hpp>

#include "hankelbound/search.hpp"

using namespace hankelbound;

TEST_CASE("exact candidate evaluation at w = z^2 and w = z", "[search]") {
    auto [fc, fv] = evaluate_candidate(ClassSpec::F(), {Rational(0), Rational(1)});
    CHECK(fc.c == std::vector<Rational>{0, 1, 0, 0});
    CHECK(fv == Rational(1, 16));

    auto [gc, gv] = evaluate_candidate(ClassSpec::G(), {Rational(0), Rational(1)});
    CHECK(gv == Rational(19, 2160));

    auto [wc, wv] = evaluate_candidate(ClassSpec::F(), {Rational(1)});
    CHECK(wc.c == std::vector<Rational>{1, 0, 0, 0});
    CHECK(wv == 0);
}

TEST_CASE("m=0 search is identically zero for F", "[search]") {
    SearchOptions opt;
    opt.m = 0;
    opt.restarts = 20;
    opt.seed = 5;
    SearchResult r = search_extremal(ClassSpec::F(), opt);
    CHECK(r.best_value == 0.0);
}

TEST_CASE("short search reaches the w = z^2 value", "[search][slow]") {
    SearchOptions opt;
    opt.m = 2;
    opt.restarts = 60;
    opt.seed = 42;
    SearchResult r = search_extremal(ClassSpec::F(), opt);
    CHECK(r.best_value >= 1.0 / 16.0 - 1e-7);
    CHECK(r.best_value <= to_double(*r.proven_bound) + 1e-12);
    CHECK(carlson_satisfied(r.best_coeffs));
    CHECK_FALSE(r.counterexample_candidate);
    CHECK(r.conjectured_value == Rational(1, 16));
    CHECK(r.proven_bound.has_value());
}

TEST_CASE("best value is monotone in the parameter count", "[search][slow]") {
    double prev = -1.0;
    for (int m : {0, 1, 2, 3}) {
        SearchOptions opt;
        opt.m = m;
        opt.restarts = 40;
        opt.seed = 11;
        SearchResult r = search_extremal(ClassSpec::G(), opt);
        CHECK(r.best_value >= prev - 1e-9);
        prev = std::max(prev, r.best_value);
    }
}

TEST_CASE("search is deterministic and thread-count independent", "[search]") {
    SearchOptions opt;
    opt.m = 2;
    opt.restarts = 12;
    opt.seed = 99;
    SearchResult a = search_extremal(ClassSpec::F(), opt);
    SearchResult b = search_extremal(ClassSpec::F(), opt);
    CHECK(a.best_value == b.best_value);
    CHECK(a.best_params == b.best_params);
    opt.threads = 4;
    SearchResult c = search_extremal(ClassSpec::F(), opt);
    CHECK(a.best_value == c.best_value);
    CHECK(a.best_params == c.best_params);
}

TEST_CASE("trace records restart progress", "[search]") {
    SearchOptions opt;
    opt.m = 1;
    opt.restarts = 3;
    opt.seed = 1;
    opt.record_trace = true;
    SearchResult r = search_extremal(ClassSpec::F(), opt);
    REQUIRE(!r.trace.empty());
    for (const auto& row : r.trace) {
        CHECK(row.restart >= 0);
        CHECK(row.restart < 3);
        CHECK(row.params.size() == 2);
    }
}

TEST_CASE("complex-field search stays within the proven bound", "[search][slow]") {
    SearchOptions opt;
    opt.m = 2;
    opt.restarts = 20;
    opt.seed = 3;
    opt.complex_field = true;
    SearchResult r = search_extremal(ClassSpec::G(), opt);
    CHECK(r.best_value <= to_double(*r.proven_bound) + 1e-12);
    CHECK(carlson_satisfied(r.best_coeffs_c));
}
