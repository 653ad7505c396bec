#include "gaussphi/regions.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

#include "gaussphi/weights.hpp"

namespace gaussphi {

namespace {

struct Extent {
    std::int64_t max_coord;  // max(|re|, |im|)
    std::int64_t coord_sum;  // |re| + |im|
};

Extent extent(GaussInt x) {
    const std::int64_t a = checked::abs(x.re);
    const std::int64_t b = checked::abs(x.im);
    return {std::max(a, b), checked::add(a, b)};
}

bool in_octagon(GaussInt x, int n) {
    const Extent e = extent(x);
    return e.max_coord <= w(n) - 2 && e.coord_sum <= w(n + 1) - 3;
}

bool in_s(GaussInt x, int n) {
    if (x.is_zero() || !in_octagon(x, n)) return false;
    return (x.re % 2 != 0) || (x.im % 2 != 0);
}

bool in_d(GaussInt x, int n) {
    if (x.is_zero() || !in_octagon(x, n)) return false;
    return (x.re & 1) != (x.im & 1);
}

void check_level(int level) {
    if (level < 0) throw DomainError("region level must be nonnegative");
}

void check_cap(int level, int cap) {
    if (level > cap) throw CapExceeded("enumeration level", level, cap);
}

// Appends the distinct images of an octant point a >= b >= 0.
void push_orbit(std::vector<GaussInt>& out, std::int64_t a, std::int64_t b) {
    std::array<GaussInt, 8> orbit{GaussInt{a, b},  GaussInt{-a, b},  GaussInt{a, -b},
                                  GaussInt{-a, -b}, GaussInt{b, a},  GaussInt{-b, a},
                                  GaussInt{b, -a},  GaussInt{-b, -a}};
    std::sort(orbit.begin(), orbit.end());
    const auto end = std::unique(orbit.begin(), orbit.end());
    out.insert(out.end(), orbit.begin(), end);
}

template <class Pred>
std::vector<GaussInt> scan_octant(std::int64_t bound, Pred&& member) {
    std::vector<GaussInt> out;
    for (std::int64_t a = 0; a <= bound; ++a)
        for (std::int64_t b = 0; b <= a; ++b)
            if (member(GaussInt{a, b})) push_orbit(out, a, b);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::string_view to_string(RegionKind kind) {
    switch (kind) {
        case RegionKind::Oct: return "Oct";
        case RegionKind::S: return "S";
        case RegionKind::D: return "D";
        case RegionKind::B: return "B";
    }
    return "?";
}

RegionKind parse_region_kind(std::string_view text) {
    std::string lower;
    for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "oct") return RegionKind::Oct;
    if (lower == "s") return RegionKind::S;
    if (lower == "d") return RegionKind::D;
    if (lower == "b") return RegionKind::B;
    throw DomainError("unknown region kind '" + std::string(text) + "' (expected Oct, S, D or B)");
}

bool RegionSet::contains(GaussInt x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

bool in_region(RegionQuery q, GaussInt x) {
    check_level(q.level);
    switch (q.kind) {
        case RegionKind::Oct: return in_octagon(x, q.level);
        case RegionKind::S: return in_s(x, q.level);
        case RegionKind::D: return in_d(x, q.level);
        case RegionKind::B: return x.is_zero() || decompose(x, q.level).has_value();
    }
    return false;
}

RegionSet enumerate_region(RegionQuery q, int cap) {
    check_level(q.level);
    check_cap(q.level, cap);
    // Every kind is contained in Oct_n, so the octagon's box bounds the scan.
    const std::int64_t bound = w(q.level) - 2;
    return {q, scan_octant(bound, [q](GaussInt x) { return in_region(q, x); })};
}

std::optional<Decomposition> decompose(GaussInt x, int n) {
    check_level(n);
    if (x.is_zero()) throw DomainError("decompose is defined for nonzero elements only");
    const int j = two_adic_val(x);
    if (j > n / 2) return std::nullopt;
    const GaussInt reduced{x.re / (std::int64_t{1} << j), x.im / (std::int64_t{1} << j)};
    if (!in_s(reduced, n - 2 * j)) return std::nullopt;
    return Decomposition{j, reduced};
}

std::vector<GaussInt> preimage(int n, int cap) {
    check_level(n);
    check_cap(n, cap);
    auto current = enumerate_region({RegionKind::B, n}, cap).elements;
    if (n == 0) return current;
    const auto previous = enumerate_region({RegionKind::B, n - 1}, cap).elements;
    std::vector<GaussInt> out;
    out.reserve(current.size() - previous.size());
    std::set_difference(current.begin(), current.end(), previous.begin(), previous.end(),
                        std::back_inserter(out));
    return out;
}

std::vector<GaussInt> preimage_by_conditions(int n, int cap) {
    check_level(n);
    check_cap(n, cap);
    if (n == 0) return enumerate_region({RegionKind::B, 0}, cap).elements;

    const int k = n / 2;
    const bool even = n % 2 == 0;
    const std::int64_t wn = w(n);
    const std::int64_t wn_next = w(n + 1);
    const std::int64_t wn_prev = w(n - 1);

    auto member = [&](GaussInt x) {
        if (x.is_zero()) return false;
        const int j = two_adic_val(x);
        const Extent e = extent(x);
        if (even && j == k) {
            // The lone axis points {+-2^k, +-2^k i}.
            return e.max_coord == (std::int64_t{1} << k) && e.coord_sum == e.max_coord;
        }
        if (j > (even ? k - 1 : k)) return false;
        const std::int64_t p = std::int64_t{1} << j;
        if (e.max_coord > wn - 2 * p || e.coord_sum > wn_next - 3 * p) return false;
        return e.max_coord > wn_prev - 2 * p || e.coord_sum > wn - 3 * p;
    };
    return scan_octant(wn - 2, member);
}

}  // namespace gaussphi
