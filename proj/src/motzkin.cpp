#include "gaussphi/motzkin.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>
#include <thread>

namespace gaussphi {

namespace {

struct ExtGcd {
    std::int64_t g, s, t;  // g = s*x + t*y, g >= 0
};

ExtGcd ext_gcd(std::int64_t x, std::int64_t y) {
    __int128 old_r = x, r = y;
    __int128 old_s = 1, s = 0;
    __int128 old_t = 0, t = 1;
    while (r != 0) {
        const __int128 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {static_cast<std::int64_t>(old_r), static_cast<std::int64_t>(old_s),
            static_cast<std::int64_t>(old_t)};
}

__int128 floor_div(__int128 x, __int128 d) {
    __int128 q = x / d;
    if ((x % d != 0) && ((x < 0) != (d < 0))) --q;
    return q;
}

__int128 floor_mod(__int128 x, __int128 d) { return x - floor_div(x, d) * d; }

GaussInt rotate_to_first_quadrant(GaussInt m) {
    for (int k = 0; k < 4; ++k) {
        if (m.re > 0 && m.im >= 0) return m;
        m = kI * m;
    }
    return m;
}

std::vector<GaussInt> sorted_copy(std::span<const GaussInt> elements) {
    std::vector<GaussInt> v(elements.begin(), elements.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void append_orbit(std::vector<GaussInt>& out, GaussInt x) {
    auto orbit = symmetries(x);
    std::sort(orbit.begin(), orbit.end());
    out.insert(out.end(), orbit.begin(), std::unique(orbit.begin(), orbit.end()));
}

struct Candidate {
    GaussInt beta;
    bool accepted = false;
};

// Octant points of norm <= bound not already in `previous`, with the search statistics.
std::vector<Candidate> collect_candidates(const MotzkinLevel& previous, LevelSearch& search) {
    const auto bound = static_cast<std::int64_t>(previous.elements.size());
    search.level = previous.level + 1;
    search.norm_bound = bound;
    std::vector<Candidate> out;
    for (std::int64_t a = 0; a * a <= bound; ++a) {
        for (std::int64_t b = 0; b <= a && a * a + b * b <= bound; ++b) {
            ++search.octant_candidates;
            const GaussInt beta{a, b};
            if (previous.contains(beta)) {
                ++search.already_present;
                continue;
            }
            ++search.examined;
            search.cosets += a * a + b * b;
            out.push_back({beta});
        }
    }
    return out;
}

void check_candidates(std::vector<Candidate>& candidates, std::span<const GaussInt> previous,
                      unsigned threads) {
    if (threads <= 1 || candidates.size() < 2) {
        for (auto& c : candidates) c.accepted = surjects(previous, c.beta);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < candidates.size(); k = next++)
            candidates[k].accepted = surjects(previous, candidates[k].beta);
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

}  // namespace

ResidueLattice::ResidueLattice(GaussInt modulus) : modulus_(modulus) {
    if (modulus.is_zero()) throw DomainError("residues modulo 0 are undefined");
    const std::int64_t n = norm(modulus);
    // Rows (a, b) and (-b, a) span m*Z[i]; eliminate the first coordinate.
    const ExtGcd e = ext_gcd(modulus.re, -modulus.im);
    h11_ = e.g;
    h22_ = n / e.g;
    const __int128 top = static_cast<__int128>(e.s) * modulus.im + static_cast<__int128>(e.t) * modulus.re;
    h12_ = static_cast<std::int64_t>(floor_mod(top, h22_));
}

GaussInt ResidueLattice::reduce(GaussInt x) const {
    const __int128 k = floor_div(x.re, h11_);
    const __int128 re = x.re - k * h11_;
    const __int128 im = floor_mod(x.im - k * h12_, h22_);
    return {static_cast<std::int64_t>(re), static_cast<std::int64_t>(im)};
}

std::int64_t ResidueLattice::label(GaussInt x) const {
    const GaussInt r = reduce(x);
    return r.re * h22_ + r.im;
}

GaussInt canonical_residue(GaussInt x, GaussInt m) { return ResidueLattice(m).reduce(x); }

CosetDomain coset_domain(GaussInt m) {
    if (!(m.re > m.im && m.im >= 0))
        throw DomainError("coset_domain needs a canonical modulus a+bi with a > b >= 0, got " + to_string(m));
    CosetDomain d{m, {}};
    const std::int64_t a = m.re;
    const std::int64_t b = m.im;
    d.points.reserve(static_cast<std::size_t>(a * a + b * b));
    for (std::int64_t x = 0; x < a; ++x)
        for (std::int64_t y = 0; y < a; ++y) d.points.push_back({x, y});
    for (std::int64_t x = 0; x < b; ++x)
        for (std::int64_t y = -b; y < 0; ++y) d.points.push_back({x, y});
    return d;
}

bool surjects(std::span<const GaussInt> elements, GaussInt m) {
    const ResidueLattice lattice(m);
    const std::int64_t classes = lattice.index();
    if (static_cast<std::int64_t>(elements.size()) < classes) return false;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(classes), 0);
    std::int64_t hit = 0;
    for (GaussInt x : elements) {
        auto& slot = seen[static_cast<std::size_t>(lattice.label(x))];
        if (!slot) {
            slot = 1;
            if (++hit == classes) return true;
        }
    }
    return false;
}

bool surjects_via_triangle(std::span<const GaussInt> elements, GaussInt m) {
    if (m.is_zero()) throw DomainError("surjects_via_triangle: zero modulus");
    if (divides(kOnePlusI, m)) throw DomainError("surjects_via_triangle: (1+i) divides " + to_string(m));
    const GaussInt rotated = rotate_to_first_quadrant(m);
    if (!(rotated.re > rotated.im))
        throw DomainError("surjects_via_triangle: modulus " + to_string(m) + " is not associate to a+bi with a > b >= 0");

    const auto sorted = sorted_copy(elements);
    for (GaussInt x : sorted)
        for (GaussInt u : kUnits)
            if (!std::binary_search(sorted.begin(), sorted.end(), u * x))
                throw DomainError("surjects_via_triangle: element set is not closed under units");

    const ResidueLattice lattice(rotated);
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(lattice.index()), 0);
    for (GaussInt x : sorted) seen[static_cast<std::size_t>(lattice.label(x))] = 1;

    const std::int64_t side = rotated.re;
    for (std::int64_t x = 0; x < side; ++x)
        for (std::int64_t y = 0; x + y < side; ++y)
            if (!seen[static_cast<std::size_t>(lattice.label({x, y}))]) return false;
    return true;
}

bool MotzkinLevel::contains(GaussInt x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

LevelSearch next_level_search_space(const MotzkinLevel& previous) {
    LevelSearch search;
    collect_candidates(previous, search);
    return search;
}

std::vector<MotzkinLevel> build_levels(int n_max, const BuildOptions& options) {
    std::vector<LevelSearch> ignored;
    return build_levels(n_max, options, ignored);
}

std::vector<MotzkinLevel> build_levels(int n_max, const BuildOptions& options,
                                       std::vector<LevelSearch>& searches) {
    if (n_max < 0) throw DomainError("build_levels requires n_max >= 0");
    if (n_max > options.cap) throw CapExceeded("Motzkin oracle level", n_max, options.cap);

    std::vector<MotzkinLevel> levels;
    levels.push_back({0, {{-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}}});
    searches.clear();

    for (int j = 1; j <= n_max; ++j) {
        const MotzkinLevel& previous = levels.back();
        LevelSearch search;
        auto candidates = collect_candidates(previous, search);
        check_candidates(candidates, previous.elements, options.threads);

        std::vector<GaussInt> fresh;
        for (const auto& c : candidates) {
            if (!c.accepted) continue;
            ++search.added;
            append_orbit(fresh, c.beta);
        }
        std::sort(fresh.begin(), fresh.end());
        fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());

        MotzkinLevel next{j, {}};
        next.elements.reserve(previous.elements.size() + fresh.size());
        std::merge(previous.elements.begin(), previous.elements.end(), fresh.begin(), fresh.end(),
                   std::back_inserter(next.elements));
        levels.push_back(std::move(next));
        searches.push_back(search);
    }
    return levels;
}

}  // namespace gaussphi
