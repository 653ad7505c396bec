#include <doctest.h>

#include <limits>

#include "gaussphi/gaussian.hpp"
#include "oracles.hpp"

using namespace gaussphi;

TEST_CASE("norm") {
    CHECK(norm({7, 4}) == 65);
    CHECK(norm({0, 0}) == 0);
    CHECK(norm({-1, 1}) == 2);
    CHECK_THROWS_AS(norm({std::int64_t{1} << 62, 0}), OverflowError);
}

TEST_CASE("conj") {
    CHECK(conj({3, 2}) == GaussInt{3, -2});
    CHECK(conj({5, 0}) == GaussInt{5, 0});
    for (int k = 0; k < 200; ++k) {
        const GaussInt x = oracle::random_gauss(1'000'000);
        CHECK(conj(conj(x)) == x);
    }
}

TEST_CASE("mul") {
    CHECK(kOnePlusI * kOnePlusI == GaussInt{0, 2});
    CHECK(kI * GaussInt{4, 1} == GaussInt{-1, 4});
    CHECK(onepi_pow(4) == GaussInt{-4, 0});
    CHECK(onepi_pow(0) == GaussInt{1, 0});
    const GaussInt big{std::int64_t{1} << 40, std::int64_t{1} << 40};
    CHECK_THROWS_AS(big * big, OverflowError);
    CHECK_THROWS_AS(GaussInt(std::numeric_limits<std::int64_t>::max(), 0) + GaussInt(1, 0), OverflowError);
    CHECK_THROWS_AS(-GaussInt(std::numeric_limits<std::int64_t>::min(), 0), OverflowError);
}

TEST_CASE("div_exact") {
    CHECK(div_exact({4, 0}, onepi_pow(4)) == GaussInt{-1, 0});
    CHECK(div_exact({5, 3}, kOnePlusI) == GaussInt{4, -1});
    CHECK_FALSE(div_exact({1, 0}, kOnePlusI).has_value());
    CHECK_THROWS_AS(div_exact({1, 0}, {0, 0}), DomainError);
    // Large coordinates go through the 128-bit path.
    const GaussInt d{3'000'000'007, -5};
    const GaussInt q{-1'234'567, 987'654};
    CHECK(div_exact(q * d, d) == q);
}

TEST_CASE("two_adic_val and onepi_adic_val") {
    CHECK(two_adic_val({12, 4}) == 2);
    CHECK(two_adic_val({1, 1}) == 0);
    CHECK(two_adic_val({2, 2}) == 1);
    CHECK(two_adic_val({0, -8}) == 3);
    CHECK_THROWS_AS(two_adic_val({0, 0}), DomainError);

    CHECK(onepi_adic_val({2, 0}) == 2);
    CHECK(onepi_adic_val({1, 1}) == 1);
    CHECK(onepi_adic_val({7, 4}) == 0);
    CHECK_THROWS_AS(onepi_adic_val({0, 0}), DomainError);
}

TEST_CASE("onepi_adic_val agrees with repeated division") {
    for (int k = 0; k < 500; ++k) {
        GaussInt x = oracle::random_gauss(1 << 14);
        if (x.is_zero()) continue;
        const GaussInt original = x;
        int count = 0;
        while (auto q = div_exact(x, kOnePlusI)) {
            x = *q;
            ++count;
        }
        CHECK(onepi_adic_val(original) == count);
        const int j = two_adic_val(original);
        CHECK((count == 2 * j || count == 2 * j + 1));
    }
}

TEST_CASE("canonical_octant") {
    CHECK(canonical_octant({-4, 7}) == GaussInt{7, 4});
    CHECK(canonical_octant({3, 0}) == GaussInt{3, 0});
    CHECK(canonical_octant({0, 0}) == GaussInt{0, 0});
}

TEST_CASE("ring properties on random samples") {
    for (int k = 0; k < 500; ++k) {
        const GaussInt x = oracle::random_gauss(1 << 14);
        const GaussInt y = oracle::random_gauss(1 << 14);
        CHECK(norm(x * y) == norm(x) * norm(y));
        if (!y.is_zero()) CHECK(div_exact(x * y, y) == x);
        const GaussInt c = canonical_octant(x);
        CHECK(canonical_octant(conj(x)) == c);
        for (GaussInt u : kUnits) CHECK(canonical_octant(u * x) == c);
        for (GaussInt s : symmetries(x)) CHECK(canonical_octant(s) == c);
    }
}

TEST_CASE("packed keys keep lexicographic order") {
    for (int k = 0; k < 500; ++k) {
        const GaussInt x = oracle::random_gauss(1 << 30);
        const GaussInt y = oracle::random_gauss(1 << 30);
        CHECK(unpack32(pack32(x)) == x);
        CHECK((pack32(x) < pack32(y)) == (x < y));
    }
    CHECK_THROWS_AS(pack32({std::int64_t{1} << 40, 0}), OverflowError);
}

TEST_CASE("printing") {
    CHECK(to_string({4, 1}) == "4+i");
    CHECK(to_string({3, -2}) == "3-2i");
    CHECK(to_string({0, -1}) == "-i");
    CHECK(to_string({-5, 0}) == "-5");
}
