#include <doctest.h>

#include <sstream>

#include "gaussphi/counting.hpp"
#include "gaussphi/regions.hpp"
#include "table1.hpp"

using namespace gaussphi;

TEST_CASE("s_size") {
    CHECK(s_size(0) == 4);
    CHECK(s_size(1) == 16);
    CHECK(s_size(2) == 44);
    CHECK(s_size(9) == 10216);
    CHECK_THROWS_AS(s_size_quadratic(0), DomainError);
    for (int n = 1; n <= 100; ++n) CHECK(s_size_quadratic(n) == s_size_closed(n));
}

TEST_CASE("b_size and preimage_size") {
    CHECK(b_size(0) == 5);
    CHECK(b_size(8) == 6457);
    CHECK(b_size(9) == 13309);
    CHECK(preimage_size(8) == 3364);
    CHECK(preimage_size(9) == 6852);
    CHECK(preimage_size(25) == 469680132);
    CHECK_THROWS_AS(b_size(-1), DomainError);
}

TEST_CASE("recurrences hold up to n = 100") {
    for (int n = 0; n <= 100; ++n) {
        if (n >= 1) CHECK(b_size(n) == b_size(n - 1) + preimage_size(n));
        BigInt layered = 1;  // the zero element
        for (int j = 0; j <= n / 2; ++j) layered += s_size(n - 2 * j);
        CHECK(b_size(n) == layered);
    }
    // Values well past 64 bits stay exact.
    CHECK(b_size(100) > BigInt{1} << 100);
}

TEST_CASE("table reproduces the published rows") {
    const auto rows = table(25);
    REQUIRE(rows.size() == reference::kTable1.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& ref = reference::kTable1[k];
        CHECK(rows[k].n == ref.n);
        CHECK(rows[k].s_size == ref.s_size);
        CHECK(rows[k].b_size == ref.b_size);
        CHECK(rows[k].preimage_size == ref.preimage_size);
    }
    const auto single = table(0);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == CountRow{0, 4, 5, 5});
}

TEST_CASE("csv layout") {
    std::ostringstream os;
    write_table_csv(os, table(2));
    CHECK(os.str() == "n,s_size,b_size,preimage_size\n0,4,5,5\n1,16,17,12\n2,44,49,32\n");
}

TEST_CASE("closed forms agree with enumeration") {
    for (int n = 0; n <= 10; ++n) {
        INFO("n ", n);
        CHECK(s_size(n) == enumerate_region({RegionKind::S, n}).size());
        CHECK(b_size(n) == enumerate_region({RegionKind::B, n}).size());
        CHECK(preimage_size(n) == preimage(n).size());
    }
}
