#pragma once

// Three ways to obtain |phi^{-1}(n)|, from slowest to fastest:
//   naive     - Motzkin sets built from coset surjection checks
//   recursive - B_n = B_{n-1} + {u (1+i)^n + b : u unit, b in B_{n-1}}
//   formula   - the closed forms in counting.hpp

#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "gaussphi/counting.hpp"
#include "gaussphi/motzkin.hpp"

namespace gaussphi {

enum class Strategy { Naive, Recursive, Formula };

std::string_view to_string(Strategy s);

struct StrategyOptions {
    int naive_cap = 8;
    int recursive_cap = 20;
    unsigned threads = 1;
};

// Sizes |B_0|, ..., |B_n_max| from the digit recursion over sorted packed keys.
std::vector<std::int64_t> recursive_b_sizes(int n_max);

// Elements of B_n from the digit recursion, sorted.
std::vector<GaussInt> recursive_b_elements(int n);

// |phi^{-1}(n)| computed with the given strategy. Throws CapExceeded past its cap.
BigInt count_preimage(Strategy s, int n, const StrategyOptions& options = {});

struct BenchRow {
    int n = 0;
    std::string strategy;
    double wall_time_s = 0.0;
    std::optional<BigInt> result;
    std::optional<LevelSearch> search;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    bool consistent = true;  // every strategy that ran at a level gave the same count
};

// Runs each strategy at n = 0..n_max within its cap. When n_max is within the naive cap,
// a final "naive-frontier" row describes the candidate space for level n_max + 1.
BenchReport bench(int n_max, const StrategyOptions& options = {});

// Columns n,strategy,wall_time_s,result,norm_bound,octant_candidates,already_present,examined,cosets.
void write_bench_csv(std::ostream& os, const BenchReport& report);

}  // namespace gaussphi
