#pragma once

// Test-only brute-force references. None of these go through the region or phi code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "gaussphi/gaussian.hpp"

namespace gaussphi::oracle {

inline std::int64_t weight(int n) { return (n % 2 == 0 ? 3 : 4) * (std::int64_t{1} << (n / 2)); }

// Shortest digit-string length for every value representable with at most max_len digits
// from {0, +-1, +-i}, found by walking all 5^max_len strings.
inline std::map<GaussInt, int> shortest_digit_lengths(int max_len) {
    static const GaussInt digits[5] = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    std::vector<GaussInt> powers(static_cast<std::size_t>(max_len));
    GaussInt p{1, 0};
    for (int j = 0; j < max_len; ++j) {
        powers[static_cast<std::size_t>(j)] = p;
        p = GaussInt{p.re - p.im, p.re + p.im};
    }
    std::map<GaussInt, int> best;
    std::function<void(int, GaussInt, int)> walk = [&](int pos, GaussInt acc, int top) {
        if (pos == max_len) {
            auto [it, inserted] = best.emplace(acc, top);
            if (!inserted) it->second = std::min(it->second, top);
            return;
        }
        for (int d = 0; d < 5; ++d) {
            const GaussInt term = GaussInt{digits[d].re * powers[pos].re - digits[d].im * powers[pos].im,
                                           digits[d].re * powers[pos].im + digits[d].im * powers[pos].re};
            walk(pos + 1, GaussInt{acc.re + term.re, acc.im + term.im}, d == 0 ? top : pos + 1);
        }
    };
    walk(0, {0, 0}, 0);
    return best;
}

// The set B_n as all values with at most n+1 digits.
inline std::vector<GaussInt> digit_set(const std::map<GaussInt, int>& lengths, int n) {
    std::vector<GaussInt> out;
    for (const auto& [x, len] : lengths)
        if (len <= n + 1) out.push_back(x);
    return out;
}

// Scan of the full box [-r, r]^2 in (re, im) order with a raw predicate.
template <class Pred>
std::vector<GaussInt> box_scan(std::int64_t r, Pred&& pred) {
    std::vector<GaussInt> out;
    for (std::int64_t a = -r; a <= r; ++a)
        for (std::int64_t b = -r; b <= r; ++b)
            if (pred(GaussInt{a, b})) out.push_back({a, b});
    return out;
}

// Defining inequalities of the octagonal regions, written out directly.
inline bool raw_octagon(GaussInt x, int n) {
    const std::int64_t a = x.re < 0 ? -x.re : x.re;
    const std::int64_t b = x.im < 0 ? -x.im : x.im;
    return a <= weight(n) - 2 && b <= weight(n) - 2 && a + b <= weight(n + 1) - 3;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed1234abcdULL);
    return gen;
}

inline GaussInt random_gauss(std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> d(-bound, bound);
    return {d(rng()), d(rng())};
}

}  // namespace gaussphi::oracle
