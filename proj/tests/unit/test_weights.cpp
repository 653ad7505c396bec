#include <doctest.h>

#include "gaussphi/regions.hpp"
#include "gaussphi/weights.hpp"
#include "oracles.hpp"

using namespace gaussphi;

TEST_CASE("w") {
    CHECK(w(0) == 3);
    CHECK(w(1) == 4);
    CHECK(w(5) == 16);
    CHECK(w(120) == 3 * (std::int64_t{1} << 60));
    CHECK_THROWS_AS(w(kMaxWeightIndex + 1), OverflowError);
    CHECK_THROWS_AS(w(-1), DomainError);
    for (int n = 0; n + 2 <= kMaxWeightIndex; ++n) {
        CHECK(w(n + 1) > w(n));
        CHECK(w(n + 2) == 2 * w(n));
    }
}

TEST_CASE("least_level") {
    CHECK(least_level(3) == 0);
    CHECK(least_level(4) == 1);
    CHECK(least_level(9) == 4);
    CHECK_THROWS_AS(least_level(2), DomainError);
    int previous = 0;
    for (std::int64_t m = 3; m < 5000; ++m) {
        const int n = least_level(m);
        CHECK(n >= previous);
        CHECK(m <= w(n));
        if (n > 0) CHECK(m > w(n - 1));
        previous = n;
    }
}

TEST_CASE("phi examples") {
    CHECK(phi({1, 0}) == 0);
    CHECK(phi({2, 1}) == 1);
    CHECK(phi({4, 1}) == 2);
    CHECK(phi({2, 0}) == 2);
    CHECK(phi({4, 0}) == 4);
    CHECK(phi({7, 4}) == 4);
    CHECK_THROWS_AS(phi({0, 0}), DomainError);
}

TEST_CASE("phi matches the shortest digit string") {
    // 9 digits reach every value of B_8.
    const auto lengths = oracle::shortest_digit_lengths(9);
    for (const auto& [x, len] : lengths) {
        if (x.is_zero()) continue;
        INFO(to_string(x));
        CHECK(phi(x) == len - 1);
    }
}

TEST_CASE("phi symmetries and shifts on a box") {
    for (std::int64_t a = -40; a <= 40; ++a) {
        for (std::int64_t b = -40; b <= 40; ++b) {
            const GaussInt x{a, b};
            if (x.is_zero()) continue;
            const int p = phi(x);
            for (GaussInt s : symmetries(x)) CHECK(phi(s) == p);
            CHECK(phi(kOnePlusI * x) == p + 1);
            CHECK(phi(GaussInt{2, 0} * x) == p + 2);
        }
    }
}

TEST_CASE("phi at large coordinates") {
    const GaussInt x{std::int64_t{1} << 59, 0};
    CHECK(phi(x) == 2 * 59);
    CHECK_THROWS_AS(phi({std::int64_t{1} << 62, 1}), OverflowError);
}

TEST_CASE("weight identities") {
    CHECK(check_weight_identities(60).empty());
    CHECK(check_weight_identities(2).empty());
    CHECK(w(4) == 2 * w(2));
    CHECK(2 * (w(4) - w(3)) == w(3));
    CHECK_THROWS_AS(check_weight_identities(1), DomainError);
}
