#pragma once

// Closed-form sizes of S_n, B_n = A_n and phi^{-1}(n).

#include <ostream>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gaussphi {

using BigInt = boost::multiprecision::cpp_int;

// w_n without the int64 ceiling.
BigInt weight_big(int n);

// |S_n| = 3(w_n-2)^2 + 2(w_n-2) - 6(w_n-w_{n-1})(w_n-w_{n-1}-1), n >= 1.
BigInt s_size_quadratic(int n);
// |S_{2k+1}| = 42*4^k - 34*2^k + 8 and |S_{2k}| = 21*4^k - 24*2^k + 8, n >= 1.
BigInt s_size_closed(int n);
// |S_0| = 4; for n >= 1 both forms above, which must agree (std::logic_error otherwise).
BigInt s_size(int n);

BigInt b_size(int n);
BigInt preimage_size(int n);

struct CountRow {
    int n = 0;
    BigInt s_size;
    BigInt b_size;
    BigInt preimage_size;

    friend bool operator==(const CountRow&, const CountRow&) = default;
};

std::vector<CountRow> table(int n_max);

// Header "n,s_size,b_size,preimage_size" then one line per row.
void write_table_csv(std::ostream& os, const std::vector<CountRow>& rows);

}  // namespace gaussphi
