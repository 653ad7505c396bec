#pragma once

// Brute-force Motzkin sets A_n built directly from coset surjections.
//
// A_0 = {0} + units, and A_j adds every beta such that each residue class modulo beta
// has a representative in A_{j-1}. Residues are labelled through the Hermite normal
// form of the lattice beta*Z[i] in Z^2, which works for every nonzero modulus.

#include <cstdint>
#include <span>
#include <vector>

#include "gaussphi/gaussian.hpp"

namespace gaussphi {

// Lattice m*Z[i] in upper-triangular form: basis (h11, h12), (0, h22) with
// h11 * h22 = Nm(m) and 0 <= h12 < h22.
class ResidueLattice {
public:
    explicit ResidueLattice(GaussInt modulus);

    GaussInt modulus() const { return modulus_; }
    std::int64_t index() const { return h11_ * h22_; }

    // The unique point congruent to x with 0 <= re < h11 and 0 <= im < h22.
    GaussInt reduce(GaussInt x) const;
    // reduce(x) flattened to [0, index()).
    std::int64_t label(GaussInt x) const;

private:
    GaussInt modulus_;
    std::int64_t h11_ = 1;
    std::int64_t h12_ = 0;
    std::int64_t h22_ = 1;
};

GaussInt canonical_residue(GaussInt x, GaussInt m);

// The square-plus-square domain for a canonical modulus a+bi with a > b >= 0:
// {0 <= x, y < a} together with {0 <= x < b, -b <= y < 0}.
struct CosetDomain {
    GaussInt modulus;
    std::vector<GaussInt> points;
};

CosetDomain coset_domain(GaussInt m);

// True iff every class of Z[i]/(m) has a representative in elements.
bool surjects(std::span<const GaussInt> elements, GaussInt m);

// Triangle criterion: with elements closed under units and (1+i) not dividing m, checks
// that every point of {x + yi : 0 <= x, y; x + y < max(|a|, |b|)} is congruent to an
// element. The modulus is first rotated by a unit so that re > 0, im >= 0, and must then
// satisfy re > im. Throws DomainError when a precondition fails.
bool surjects_via_triangle(std::span<const GaussInt> elements, GaussInt m);

struct MotzkinLevel {
    int level = 0;
    std::vector<GaussInt> elements;  // sorted

    bool contains(GaussInt x) const;
};

// Search statistics for one level step: octant candidates 0 <= b <= a with
// Nm(a+bi) <= norm_bound = |A_{j-1}|.
struct LevelSearch {
    int level = 0;
    std::int64_t norm_bound = 0;
    std::int64_t octant_candidates = 0;
    std::int64_t already_present = 0;
    std::int64_t examined = 0;
    std::int64_t cosets = 0;  // sum of Nm over the examined candidates
    std::int64_t added = 0;   // octant candidates accepted at this level
};

inline constexpr int kDefaultOracleCap = 8;

struct BuildOptions {
    int cap = kDefaultOracleCap;
    unsigned threads = 1;
};

// Levels 0..n_max.
std::vector<MotzkinLevel> build_levels(int n_max, const BuildOptions& options = {});
std::vector<MotzkinLevel> build_levels(int n_max, const BuildOptions& options,
                                       std::vector<LevelSearch>& searches);

// The candidate space one step beyond `previous`, without running any surjection check.
LevelSearch next_level_search_space(const MotzkinLevel& previous);

}  // namespace gaussphi
