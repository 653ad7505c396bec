#include "gaussphi/strategies.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <iomanip>
#include <map>

namespace gaussphi {

namespace {

using Keys = std::vector<std::uint64_t>;

// One step of the digit recursion. Translation preserves the packed key order, so the
// previous level and its four translates are five sorted runs merged without sorting.
Keys next_level(const Keys& previous, int n) {
    const GaussInt shift = onepi_pow(n);
    std::array<std::int64_t, 5> offsets{0};
    for (std::size_t u = 0; u < kUnits.size(); ++u) {
        const GaussInt t = kUnits[u] * shift;
        offsets[u + 1] = t.re * (std::int64_t{1} << 32) + t.im;
    }

    Keys out;
    out.reserve(previous.size() * 2);
    std::array<std::size_t, 5> pos{};
    const std::size_t size = previous.size();
    while (true) {
        bool any = false;
        std::uint64_t best = 0;
        for (std::size_t r = 0; r < 5; ++r) {
            if (pos[r] == size) continue;
            const std::uint64_t key = previous[pos[r]] + static_cast<std::uint64_t>(offsets[r]);
            if (!any || key < best) {
                best = key;
                any = true;
            }
        }
        if (!any) break;
        out.push_back(best);
        for (std::size_t r = 0; r < 5; ++r)
            if (pos[r] < size && previous[pos[r]] + static_cast<std::uint64_t>(offsets[r]) == best) ++pos[r];
    }
    return out;
}

Keys base_keys() {
    Keys k{pack32({0, 0}), pack32({1, 0}), pack32({-1, 0}), pack32({0, 1}), pack32({0, -1})};
    std::sort(k.begin(), k.end());
    return k;
}

// Keeps packed coordinates far from the 32-bit edge; |re|, |im| <= w_n - 2 < 2^30 here.
void check_recursive_level(int n) {
    if (n > 50) throw CapExceeded("recursive strategy level (packed keys)", n, 50);
}

}  // namespace

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::Naive: return "naive";
        case Strategy::Recursive: return "recursive";
        case Strategy::Formula: return "formula";
    }
    return "?";
}

std::vector<std::int64_t> recursive_b_sizes(int n_max) {
    if (n_max < 0) throw DomainError("recursive_b_sizes requires n_max >= 0");
    check_recursive_level(n_max);
    std::vector<std::int64_t> sizes;
    Keys level = base_keys();
    sizes.push_back(static_cast<std::int64_t>(level.size()));
    for (int n = 1; n <= n_max; ++n) {
        level = next_level(level, n);
        sizes.push_back(static_cast<std::int64_t>(level.size()));
    }
    return sizes;
}

std::vector<GaussInt> recursive_b_elements(int n) {
    if (n < 0) throw DomainError("recursive_b_elements requires n >= 0");
    check_recursive_level(n);
    Keys level = base_keys();
    for (int m = 1; m <= n; ++m) level = next_level(level, m);
    std::vector<GaussInt> out;
    out.reserve(level.size());
    for (auto key : level) out.push_back(unpack32(key));
    return out;
}

BigInt count_preimage(Strategy s, int n, const StrategyOptions& options) {
    if (n < 0) throw DomainError("count_preimage requires n >= 0");
    switch (s) {
        case Strategy::Naive: {
            if (n > options.naive_cap) throw CapExceeded("naive strategy level", n, options.naive_cap);
            const auto levels = build_levels(n, {options.naive_cap, options.threads});
            const auto top = static_cast<std::int64_t>(levels.back().elements.size());
            return n == 0 ? BigInt{top} : BigInt{top - static_cast<std::int64_t>(levels[n - 1].elements.size())};
        }
        case Strategy::Recursive: {
            if (n > options.recursive_cap)
                throw CapExceeded("recursive strategy level", n, options.recursive_cap);
            const auto sizes = recursive_b_sizes(n);
            return n == 0 ? BigInt{sizes[0]} : BigInt{sizes[n] - sizes[n - 1]};
        }
        case Strategy::Formula: return preimage_size(n);
    }
    return 0;
}

BenchReport bench(int n_max, const StrategyOptions& options) {
    if (n_max < 0) throw DomainError("bench requires n_max >= 0");
    using Clock = std::chrono::steady_clock;
    BenchReport report;
    std::map<int, BigInt> reference;

    auto record = [&](int n, Strategy s, auto&& compute) {
        const auto start = Clock::now();
        BigInt value = compute();
        const std::chrono::duration<double> elapsed = Clock::now() - start;
        auto [it, inserted] = reference.emplace(n, value);
        if (!inserted && it->second != value) report.consistent = false;
        report.rows.push_back({n, std::string(to_string(s)), elapsed.count(), std::move(value), std::nullopt});
    };

    for (int n = 0; n <= n_max; ++n) {
        if (n <= options.naive_cap) {
            std::vector<LevelSearch> searches;
            record(n, Strategy::Naive, [&] {
                const auto levels = build_levels(n, {options.naive_cap, options.threads}, searches);
                const auto top = static_cast<std::int64_t>(levels.back().elements.size());
                return n == 0 ? BigInt{top}
                              : BigInt{top - static_cast<std::int64_t>(levels[n - 1].elements.size())};
            });
            if (!searches.empty()) report.rows.back().search = searches.back();
        }
        if (n <= options.recursive_cap)
            record(n, Strategy::Recursive, [&] { return count_preimage(Strategy::Recursive, n, options); });
        record(n, Strategy::Formula, [&] { return count_preimage(Strategy::Formula, n, options); });
    }

    if (n_max <= options.naive_cap) {
        const auto start = Clock::now();
        const auto levels = build_levels(n_max, {options.naive_cap, options.threads});
        const LevelSearch frontier = next_level_search_space(levels.back());
        const std::chrono::duration<double> elapsed = Clock::now() - start;
        report.rows.push_back({n_max + 1, "naive-frontier", elapsed.count(), std::nullopt, frontier});
    }
    return report;
}

void write_bench_csv(std::ostream& os, const BenchReport& report) {
    os << "n,strategy,wall_time_s,result,norm_bound,octant_candidates,already_present,examined,cosets\n";
    const auto flags = os.flags();
    for (const auto& row : report.rows) {
        os << row.n << ',' << row.strategy << ',' << std::fixed << std::setprecision(6) << row.wall_time_s << ',';
        os.flags(flags);
        if (row.result) os << *row.result;
        os << ',';
        if (row.search) {
            const auto& s = *row.search;
            os << s.norm_bound << ',' << s.octant_candidates << ',' << s.already_present << ',' << s.examined
               << ',' << s.cosets;
        } else {
            os << ",,,,";
        }
        os << '\n';
    }
}

}  // namespace gaussphi
