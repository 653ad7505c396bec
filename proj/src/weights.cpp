#include "gaussphi/weights.hpp"

#include <algorithm>

namespace gaussphi {

std::int64_t w(int n) {
    if (n < 0) throw DomainError("weight index must be nonnegative");
    if (n > kMaxWeightIndex) throw OverflowError("w(" + std::to_string(n) + ") exceeds int64");
    const int k = n / 2;
    return (n % 2 == 0 ? std::int64_t{3} : std::int64_t{4}) << k;
}

int least_level(std::int64_t m) {
    if (m < 3) throw DomainError("least_level requires m >= 3, got " + std::to_string(m));
    int n = 0;
    while (w(n) < m) ++n;
    return n;
}

int phi(GaussInt x) {
    if (x.is_zero()) throw DomainError("phi undefined at 0");
    const int j = two_adic_val(x);
    const std::int64_t a = checked::abs(x.re) >> j;
    const std::int64_t b = checked::abs(x.im) >> j;
    const int n = least_level(checked::add(std::max(a, b), 2));
    const std::int64_t sum = checked::add(checked::add(a, b), 3);
    return (sum <= w(n + 1) ? n : n + 1) + 2 * j;
}

std::vector<WeightIdentityViolation> check_weight_identities(int n_max) {
    if (n_max < 2) throw DomainError("check_weight_identities requires n_max >= 2");
    if (n_max + 2 > kMaxWeightIndex) throw OverflowError("n_max too large for int64 weights");

    std::vector<WeightIdentityViolation> out;
    auto expect = [&](bool ok, int n, int l, const char* identity) {
        if (!ok) out.push_back({n, l, identity});
    };

    for (int n = 2; n <= n_max; ++n) {
        const std::int64_t wn = w(n);
        const std::int64_t wn1 = w(n + 1);
        const std::int64_t gap = wn1 - wn;
        const int half = n / 2;

        expect(w(n + 2) == 2 * wn, n, -1, "w[n+2] = 2w[n]");
        expect(2 * gap <= wn, n, -1, "2(w[n+1]-w[n]) <= w[n]");
        expect(3 * gap <= wn1, n, -1, "3(w[n+1]-w[n]) <= w[n+1]");

        for (int l = 0; l <= n; ++l) {
            const std::int64_t p = std::int64_t{1} << l;
            if (2 * p < wn) expect(l <= half, n, l, "2^(l+1) < w[n] => l <= floor(n/2)");
            if (2 * p <= wn) expect(p <= gap, n, l, "2^(l+1) <= w[n] => 2^l <= w[n+1]-w[n]");
            if (gap <= p) expect((n + 1) / 2 <= l, n, l, "w[n+1]-w[n] <= 2^l => floor((n+1)/2) <= l");
            if (l <= half) {
                expect((wn - p) % p == 0, n, l, "l <= floor(n/2) => 2^l | (w[n]-2^l)");
                expect(p <= gap, n, l, "l <= floor(n/2) => 2^l <= w[n+1]-w[n]");
                expect(gap + p <= wn, n, l, "l <= floor(n/2) => w[n+1]-w[n]+2^l <= w[n]");
            }
        }
    }
    return out;
}

}  // namespace gaussphi
