#pragma once

// Exact Gaussian integers a+bi with checked 64-bit coordinates.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include "gaussphi/errors.hpp"

namespace gaussphi {

namespace checked {

inline std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("int64 addition overflow");
    return r;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("int64 subtraction overflow");
    return r;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("int64 multiplication overflow");
    return r;
}

inline std::int64_t neg(std::int64_t x) { return sub(0, x); }

inline std::int64_t abs(std::int64_t x) { return x < 0 ? neg(x) : x; }

}  // namespace checked

struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussInt() = default;
    constexpr GaussInt(std::int64_t real, std::int64_t imag = 0) : re(real), im(imag) {}

    constexpr bool is_zero() const { return re == 0 && im == 0; }

    // Lexicographic on (re, im); the order used for every sorted output.
    friend constexpr auto operator<=>(const GaussInt&, const GaussInt&) = default;
    friend constexpr bool operator==(const GaussInt&, const GaussInt&) = default;

    GaussInt operator-() const { return {checked::neg(re), checked::neg(im)}; }

    friend GaussInt operator+(GaussInt x, GaussInt y) {
        return {checked::add(x.re, y.re), checked::add(x.im, y.im)};
    }
    friend GaussInt operator-(GaussInt x, GaussInt y) {
        return {checked::sub(x.re, y.re), checked::sub(x.im, y.im)};
    }
    friend GaussInt operator*(GaussInt x, GaussInt y);

    GaussInt& operator+=(GaussInt y) { return *this = *this + y; }
    GaussInt& operator-=(GaussInt y) { return *this = *this - y; }
    GaussInt& operator*=(GaussInt y) { return *this = *this * y; }
};

inline constexpr GaussInt kI{0, 1};
inline constexpr GaussInt kOnePlusI{1, 1};
inline constexpr std::array<GaussInt, 4> kUnits{GaussInt{1, 0}, GaussInt{-1, 0},
                                               GaussInt{0, 1}, GaussInt{0, -1}};

std::int64_t norm(GaussInt x);
GaussInt conj(GaussInt x);
GaussInt mul(GaussInt x, GaussInt y);
inline GaussInt operator*(GaussInt x, GaussInt y) { return mul(x, y); }

// (1+i)^k, checked.
GaussInt onepi_pow(int k);

// q with x = q*d, or nullopt when d does not divide x. Throws DomainError for d = 0.
std::optional<GaussInt> div_exact(GaussInt x, GaussInt d);

bool divides(GaussInt d, GaussInt x);

// j with 2^j | re, 2^j | im and not both divisible by 2^(j+1).
int two_adic_val(GaussInt x);

// Largest k with (1+i)^k | x.
int onepi_adic_val(GaussInt x);

// max(|a|,|b|) + min(|a|,|b|) i: the orbit representative under units and conjugation.
GaussInt canonical_octant(GaussInt x);

// All eight images u*x and u*conj(x), possibly with repeats.
std::array<GaussInt, 8> symmetries(GaussInt x);

bool is_unit(GaussInt x);

std::string to_string(GaussInt x);
std::ostream& operator<<(std::ostream& os, GaussInt x);

// Both coordinates packed into one 64-bit key; coordinates must fit in int32.
std::uint64_t pack32(GaussInt x);
GaussInt unpack32(std::uint64_t key);

}  // namespace gaussphi

template <>
struct std::hash<gaussphi::GaussInt> {
    std::size_t operator()(const gaussphi::GaussInt& x) const noexcept {
        auto h = static_cast<std::uint64_t>(x.re) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(x.im) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};
