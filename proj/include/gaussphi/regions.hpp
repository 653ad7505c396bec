#pragma once

// The octagonal regions Oct_n, S_n, D_n and the digit sets B_n, their pre-image
// layers, and exact enumeration.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaussphi/gaussian.hpp"

namespace gaussphi {

enum class RegionKind { Oct, S, D, B };

std::string_view to_string(RegionKind kind);
// Accepts "Oct", "S", "D", "B" (case-insensitive). Throws DomainError otherwise.
RegionKind parse_region_kind(std::string_view text);

struct RegionQuery {
    RegionKind kind = RegionKind::B;
    int level = 0;
};

inline constexpr int kDefaultEnumerationCap = 30;

// Lattice points in lexicographic (re, im) order, each exactly once.
struct RegionSet {
    RegionQuery query;
    std::vector<GaussInt> elements;

    std::size_t size() const { return elements.size(); }
    bool contains(GaussInt x) const;
};

bool in_region(RegionQuery q, GaussInt x);
inline bool in_region(RegionKind kind, int level, GaussInt x) { return in_region({kind, level}, x); }

// Scans the octant re >= im >= 0 and expands each hit by the eight symmetries.
RegionSet enumerate_region(RegionQuery q, int cap = kDefaultEnumerationCap);

struct Decomposition {
    int j = 0;         // x = 2^j * reduced
    GaussInt reduced;  // member of S_{n-2j}
};

// The unique layer 2^j S_{n-2j} of B_n containing x, or nullopt when x is not in B_n.
// Throws DomainError for x = 0.
std::optional<Decomposition> decompose(GaussInt x, int n);

// phi^{-1}(n), as B_n minus B_{n-1} (B_0 for n = 0). Sorted.
std::vector<GaussInt> preimage(int n, int cap = kDefaultEnumerationCap);

// phi^{-1}(n) from the explicit per-layer bounds (max coordinate and coordinate sum
// inside level n but outside level n-1). Independent of B-membership. Sorted.
std::vector<GaussInt> preimage_by_conditions(int n, int cap = kDefaultEnumerationCap);

}  // namespace gaussphi
