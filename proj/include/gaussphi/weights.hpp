#pragma once

// The weight sequence w_n and the closed-form minimal Euclidean function on Z[i].

#include <cstdint>
#include <string>
#include <vector>

#include "gaussphi/gaussian.hpp"

namespace gaussphi {

// w_{2k} = 3*2^k, w_{2k+1} = 4*2^k. Throws OverflowError past n = 121.
std::int64_t w(int n);

// Largest n for which w(n) fits in int64.
inline constexpr int kMaxWeightIndex = 121;

// Least n with m <= w_n. Requires m >= 3.
int least_level(std::int64_t m);

// Value of the minimal Euclidean function at x != 0.
int phi(GaussInt x);

struct WeightIdentityViolation {
    int n = 0;
    int l = 0;             // -1 for identities that do not involve l
    std::string identity;  // e.g. "2(w[n+1]-w[n]) <= w[n]"
};

// Evaluates every unambiguous weight identity for 2 <= n <= n_max and 0 <= l <= n.
// An empty result means they all hold.
std::vector<WeightIdentityViolation> check_weight_identities(int n_max);

}  // namespace gaussphi
