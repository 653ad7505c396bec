#include <doctest.h>

#include <sstream>

#include "gaussphi/regions.hpp"
#include "gaussphi/strategies.hpp"

using namespace gaussphi;

TEST_CASE("digit recursion reproduces B_n") {
    const auto sizes = recursive_b_sizes(16);
    REQUIRE(sizes.size() == 17);
    for (int n = 0; n <= 16; ++n) CHECK(b_size(n) == sizes[static_cast<std::size_t>(n)]);
    for (int n = 0; n <= 8; ++n) CHECK(recursive_b_elements(n) == enumerate_region({RegionKind::B, n}).elements);
}

TEST_CASE("strategies agree") {
    for (int n = 0; n <= 6; ++n) {
        const BigInt formula = count_preimage(Strategy::Formula, n);
        CHECK(count_preimage(Strategy::Naive, n) == formula);
        CHECK(count_preimage(Strategy::Recursive, n) == formula);
    }
    CHECK(count_preimage(Strategy::Formula, 6) == 788);
    CHECK(count_preimage(Strategy::Formula, 25) == 469680132);
    CHECK_THROWS_AS(count_preimage(Strategy::Naive, 9), CapExceeded);
    CHECK_THROWS_AS(count_preimage(Strategy::Recursive, 21), CapExceeded);
    StrategyOptions tight;
    tight.naive_cap = 3;
    CHECK_THROWS_AS(count_preimage(Strategy::Naive, 4, tight), CapExceeded);
}

TEST_CASE("bench report") {
    StrategyOptions options;
    options.recursive_cap = 5;
    const auto report = bench(6, options);
    CHECK(report.consistent);

    int naive = 0, recursive = 0, formula = 0;
    for (const auto& row : report.rows) {
        if (row.strategy == "naive") ++naive;
        if (row.strategy == "recursive") ++recursive;
        if (row.strategy == "formula") ++formula;
        if (row.n == 6 && row.result) CHECK(*row.result == 788);
    }
    CHECK(naive == 7);
    CHECK(recursive == 6);
    CHECK(formula == 7);

    const auto& last = report.rows.back();
    CHECK(last.strategy == "naive-frontier");
    CHECK(last.n == 7);
    REQUIRE(last.search.has_value());
    CHECK(last.search->norm_bound == 1457);

    std::ostringstream os;
    write_bench_csv(os, report);
    CHECK(os.str().rfind("n,strategy,wall_time_s,result,norm_bound,octant_candidates,already_present,examined,cosets\n", 0) == 0);
}

TEST_CASE("bench beyond the naive cap has no frontier row") {
    StrategyOptions options;
    options.naive_cap = 2;
    options.recursive_cap = 3;
    const auto report = bench(4, options);
    CHECK(report.consistent);
    CHECK(report.rows.back().strategy == "formula");
}
