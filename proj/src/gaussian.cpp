#include "gaussphi/gaussian.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

namespace gaussphi {

namespace {

std::uint64_t magnitude(std::int64_t v) {
    // Well defined for INT64_MIN as well.
    return v < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("Gaussian integer coordinate out of int64 range");
    return static_cast<std::int64_t>(v);
}

__int128 wide_mul(std::int64_t x, std::int64_t y) { return static_cast<__int128>(x) * y; }

__int128 wide_add(__int128 x, __int128 y) {
    __int128 r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("128-bit intermediate overflow");
    return r;
}

}  // namespace

std::int64_t norm(GaussInt x) {
    return checked::add(checked::mul(x.re, x.re), checked::mul(x.im, x.im));
}

GaussInt conj(GaussInt x) { return {x.re, checked::neg(x.im)}; }

GaussInt mul(GaussInt x, GaussInt y) {
    const __int128 re = static_cast<__int128>(x.re) * y.re - static_cast<__int128>(x.im) * y.im;
    const __int128 im = static_cast<__int128>(x.re) * y.im + static_cast<__int128>(x.im) * y.re;
    return {narrow(re), narrow(im)};
}

GaussInt onepi_pow(int k) {
    if (k < 0) throw DomainError("negative exponent");
    GaussInt r{1, 0};
    for (int e = 0; e < k; ++e) r = r * kOnePlusI;
    return r;
}

std::optional<GaussInt> div_exact(GaussInt x, GaussInt d) {
    if (d.is_zero()) throw DomainError("division by zero Gaussian integer");
    // x * conj(d) = q * Nm(d); each product fits in 127 bits, the sums are checked.
    const __int128 n = wide_add(wide_mul(d.re, d.re), wide_mul(d.im, d.im));
    const __int128 re = wide_add(wide_mul(x.re, d.re), wide_mul(x.im, d.im));
    const __int128 im = wide_add(wide_mul(x.im, d.re), -wide_mul(x.re, d.im));
    if (re % n != 0 || im % n != 0) return std::nullopt;
    return GaussInt{narrow(re / n), narrow(im / n)};
}

bool divides(GaussInt d, GaussInt x) { return div_exact(x, d).has_value(); }

int two_adic_val(GaussInt x) {
    if (x.is_zero()) throw DomainError("2-adic valuation of 0 is undefined");
    return std::countr_zero(magnitude(x.re) | magnitude(x.im));
}

int onepi_adic_val(GaussInt x) {
    const int j = two_adic_val(x);
    // After removing 2^j the coordinates are not both even; (1+i) divides iff both are odd.
    const bool re_odd = ((magnitude(x.re) >> j) & 1U) != 0;
    const bool im_odd = ((magnitude(x.im) >> j) & 1U) != 0;
    return 2 * j + ((re_odd && im_odd) ? 1 : 0);
}

GaussInt canonical_octant(GaussInt x) {
    const std::int64_t a = checked::abs(x.re);
    const std::int64_t b = checked::abs(x.im);
    return {std::max(a, b), std::min(a, b)};
}

std::array<GaussInt, 8> symmetries(GaussInt x) {
    const GaussInt c = conj(x);
    return {x, -x, kI * x, -(kI * x), c, -c, kI * c, -(kI * c)};
}

bool is_unit(GaussInt x) {
    return (x.im == 0 && (x.re == 1 || x.re == -1)) || (x.re == 0 && (x.im == 1 || x.im == -1));
}

std::string to_string(GaussInt x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, GaussInt x) {
    if (x.im == 0) return os << x.re;
    if (x.re != 0) os << x.re << (x.im < 0 ? "-" : "+");
    else if (x.im < 0) os << "-";
    const std::uint64_t b = magnitude(x.im);
    if (b != 1) os << b;
    return os << "i";
}

std::uint64_t pack32(GaussInt x) {
    constexpr std::int64_t lo = std::numeric_limits<std::int32_t>::min();
    constexpr std::int64_t hi = std::numeric_limits<std::int32_t>::max();
    if (x.re < lo || x.re > hi || x.im < lo || x.im > hi)
        throw OverflowError("coordinate does not fit the packed 32-bit key");
    const auto ur = static_cast<std::uint64_t>(x.re - lo);
    const auto ui = static_cast<std::uint64_t>(x.im - lo);
    return (ur << 32) | ui;
}

GaussInt unpack32(std::uint64_t key) {
    constexpr std::int64_t lo = std::numeric_limits<std::int32_t>::min();
    return {static_cast<std::int64_t>(key >> 32) + lo,
            static_cast<std::int64_t>(key & 0xFFFFFFFFULL) + lo};
}

}  // namespace gaussphi
