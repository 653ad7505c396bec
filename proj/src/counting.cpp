#include "gaussphi/counting.hpp"

#include <stdexcept>
#include <string>

#include "gaussphi/errors.hpp"

namespace gaussphi {

namespace {

void require_nonnegative(int n, const char* what) {
    if (n < 0) throw DomainError(std::string(what) + " requires n >= 0");
}

BigInt pow2(int k) { return BigInt{1} << k; }

}  // namespace

BigInt weight_big(int n) {
    require_nonnegative(n, "weight_big");
    return BigInt{n % 2 == 0 ? 3 : 4} << (n / 2);
}

BigInt s_size_quadratic(int n) {
    if (n < 1) throw DomainError("s_size_quadratic requires n >= 1");
    const BigInt r = weight_big(n) - 2;
    const BigInt gap = weight_big(n) - weight_big(n - 1);
    return 3 * r * r + 2 * r - 6 * gap * (gap - 1);
}

BigInt s_size_closed(int n) {
    if (n < 1) throw DomainError("s_size_closed requires n >= 1");
    const int k = n / 2;
    const BigInt p = pow2(k);
    if (n % 2 == 1) return 42 * p * p - 34 * p + 8;
    return 21 * p * p - 24 * p + 8;
}

BigInt s_size(int n) {
    require_nonnegative(n, "s_size");
    if (n == 0) return 4;
    BigInt quadratic = s_size_quadratic(n);
    if (quadratic != s_size_closed(n))
        throw std::logic_error("|S_n| forms disagree at n = " + std::to_string(n));
    return quadratic;
}

BigInt b_size(int n) {
    require_nonnegative(n, "b_size");
    const int k = n / 2;
    const BigInt p = pow2(k);
    if (n % 2 == 1) return 14 * (4 * p * p) - 34 * (2 * p) + 8 * k + 29;
    // The even form also gives |B_0| = 5.
    return 28 * p * p - 48 * p + 8 * k + 25;
}

BigInt preimage_size(int n) {
    require_nonnegative(n, "preimage_size");
    if (n == 0) return 5;
    const int k = n / 2;
    const BigInt p = pow2(k);
    if (n % 2 == 1) return 28 * p * p - 20 * p + 4;
    return 14 * p * p - 14 * p + 4;
}

std::vector<CountRow> table(int n_max) {
    require_nonnegative(n_max, "table");
    std::vector<CountRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) rows.push_back({n, s_size(n), b_size(n), preimage_size(n)});
    return rows;
}

void write_table_csv(std::ostream& os, const std::vector<CountRow>& rows) {
    os << "n,s_size,b_size,preimage_size\n";
    for (const auto& r : rows) os << r.n << ',' << r.s_size << ',' << r.b_size << ',' << r.preimage_size << '\n';
}

}  // namespace gaussphi
