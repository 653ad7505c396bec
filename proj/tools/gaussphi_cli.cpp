// gaussphi: command-line front end for the minimal Euclidean function on Z[i].
//
// Exit codes: 0 success, 1 domain or I/O error, 2 cap exceeded, 3 verification failure.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaussphi/counting.hpp"
#include "gaussphi/expansion.hpp"
#include "gaussphi/motzkin.hpp"
#include "gaussphi/regions.hpp"
#include "gaussphi/render.hpp"
#include "gaussphi/strategies.hpp"
#include "gaussphi/weights.hpp"

namespace {

using namespace gaussphi;

enum ExitCode { kOk = 0, kDomain = 1, kCap = 2, kVerification = 3 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "-" means stdout.
class Output {
public:
    explicit Output(const std::string& path, bool binary = false) {
        if (path == "-" || path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path, binary ? std::ios::binary : std::ios::out);
        if (!*file_) throw IoError("cannot open '" + path + "' for writing");
        path_ = path;
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    void close() {
        stream().flush();
        if (file_ && !*file_) throw IoError("write to '" + path_ + "' failed");
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::string path_;
};

void write_points(std::ostream& os, const std::vector<GaussInt>& points, const std::string& format) {
    if (format == "jsonl") {
        for (GaussInt x : points) {
            nlohmann::ordered_json j;
            j["re"] = x.re;
            j["im"] = x.im;
            os << j.dump() << '\n';
        }
    } else if (format == "csv") {
        os << "re,im\n";
        for (GaussInt x : points) os << x.re << ',' << x.im << '\n';
    } else {
        throw DomainError("unsupported format '" + format + "' for point sets (expected jsonl or csv)");
    }
}

struct Common {
    std::string out = "-";
    int cap = -1;  // -1: the command's default
    std::string format;

    int cap_or(int fallback) const { return cap >= 0 ? cap : fallback; }
};

void add_common(CLI::App* cmd, Common& c, bool with_cap, bool with_format) {
    cmd->add_option("--out", c.out, "Output path, '-' for stdout");
    if (with_cap) cmd->add_option("--cap", c.cap, "Override the level cap");
    if (with_format) cmd->add_option("--format", c.format, "Output format");
}

std::string kind_check_message() { return "region kind: Oct, S, D or B"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal Euclidean function on the Gaussian integers"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "gaussphi 0.1.0");

    std::int64_t a = 0, b = 0;
    int level = 0;
    std::string kind_text;
    Common common;

    auto* phi_cmd = app.add_subcommand("phi", "Print phi(a+bi)");
    phi_cmd->add_option("a", a)->required();
    phi_cmd->add_option("b", b)->required();

    bool backtrack = false;
    auto* expand_cmd = app.add_subcommand("expand", "Print a minimal (1+i)-ary expansion of a+bi");
    expand_cmd->add_option("a", a)->required();
    expand_cmd->add_option("b", b)->required();
    expand_cmd->add_flag("--backtrack", backtrack, "Use the backtracking search instead of the greedy one");

    auto* member_cmd = app.add_subcommand("member", "Test membership of a+bi in a region");
    member_cmd->add_option("kind", kind_text, kind_check_message())->required();
    member_cmd->add_option("n", level)->required();
    member_cmd->add_option("a", a)->required();
    member_cmd->add_option("b", b)->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List the points of a region, sorted by (re, im)");
    enumerate_cmd->add_option("kind", kind_text, kind_check_message())->required();
    enumerate_cmd->add_option("n", level)->required();
    enumerate_cmd->add_option("out_path", common.out, "Output path, '-' for stdout");
    add_common(enumerate_cmd, common, true, true);

    std::string method = "difference";
    auto* preimage_cmd = app.add_subcommand("preimage", "List phi^{-1}(n), sorted by (re, im)");
    preimage_cmd->add_option("n", level)->required();
    preimage_cmd->add_option("out_path", common.out, "Output path, '-' for stdout");
    preimage_cmd->add_option("--method", method, "difference (B_n minus B_{n-1}) or conditions")
        ->check(CLI::IsMember({"difference", "conditions"}));
    add_common(preimage_cmd, common, true, true);

    bool count_check = false;
    auto* count_cmd = app.add_subcommand("count", "Closed-form |S_n|, |B_n|, |phi^{-1}(n)| as one CSV row");
    count_cmd->add_option("n", level)->required();
    count_cmd->add_flag("--check", count_check, "Also enumerate the sets and compare");
    add_common(count_cmd, common, true, false);

    int n_max = 0;
    auto* table_cmd = app.add_subcommand("table", "CSV table of the closed-form counts for n = 0..n_max");
    table_cmd->add_option("n_max", n_max)->required();
    add_common(table_cmd, common, false, true);

    unsigned threads = 1;
    bool inject_fault = false;
    auto* verify_cmd = app.add_subcommand("verify-lenstra", "Compare brute-force Motzkin sets with B_n");
    verify_cmd->add_option("n_max", n_max)->required();
    verify_cmd->add_option("--threads", threads, "Worker threads for surjection checks (0: hardware)");
    verify_cmd->add_flag("--inject-fault", inject_fault, "Drop one oracle element to exercise the comparator")
        ->group("");
    add_common(verify_cmd, common, true, false);

    int recursive_cap = 20;
    auto* bench_cmd = app.add_subcommand("bench", "Time the naive, recursive and formula strategies");
    bench_cmd->add_option("n_max", n_max)->required();
    bench_cmd->add_option("--recursive-cap", recursive_cap, "Level cap for the recursive strategy");
    bench_cmd->add_option("--threads", threads, "Worker threads for the naive strategy (0: hardware)");
    add_common(bench_cmd, common, true, true);

    int cell_px = 8;
    auto* render_cmd = app.add_subcommand("render", "Draw a region as SVG or PGM");
    render_cmd->add_option("kind", kind_text, kind_check_message())->required();
    render_cmd->add_option("n", level)->required();
    render_cmd->add_option("--cell-px", cell_px, "Cell size in pixels (svg)");
    add_common(render_cmd, common, true, true);

    CLI11_PARSE(app, argc, argv);

    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());

    try {
        if (*phi_cmd) {
            std::cout << phi({a, b}) << '\n';
        } else if (*expand_cmd) {
            const auto e = expand_min({a, b}, backtrack ? ExpandMethod::Backtracking : ExpandMethod::Greedy);
            std::cout << format_digits(e) << '\n';
        } else if (*member_cmd) {
            std::cout << (in_region(parse_region_kind(kind_text), level, {a, b}) ? "true" : "false") << '\n';
        } else if (*enumerate_cmd) {
            const std::string format = common.format.empty() ? "jsonl" : common.format;
            const auto set = enumerate_region({parse_region_kind(kind_text), level},
                                              common.cap_or(kDefaultEnumerationCap));
            Output out(common.out);
            write_points(out.stream(), set.elements, format);
            out.close();
        } else if (*preimage_cmd) {
            const std::string format = common.format.empty() ? "jsonl" : common.format;
            const int cap = common.cap_or(kDefaultEnumerationCap);
            const auto points = method == "conditions" ? preimage_by_conditions(level, cap) : preimage(level, cap);
            Output out(common.out);
            write_points(out.stream(), points, format);
            out.close();
        } else if (*count_cmd) {
            const std::vector<CountRow> rows{{level, s_size(level), b_size(level), preimage_size(level)}};
            Output out(common.out);
            write_table_csv(out.stream(), rows);
            out.close();
            if (count_check) {
                const int cap = common.cap_or(kDefaultEnumerationCap);
                const auto s = enumerate_region({RegionKind::S, level}, cap).size();
                const auto bn = enumerate_region({RegionKind::B, level}, cap).size();
                const auto pre = preimage(level, cap).size();
                const bool ok = rows[0].s_size == s && rows[0].b_size == bn && rows[0].preimage_size == pre;
                std::cerr << "enumerated " << s << ',' << bn << ',' << pre << ": " << (ok ? "PASS" : "FAIL") << '\n';
                if (!ok) return kVerification;
            }
        } else if (*table_cmd) {
            if (!common.format.empty() && common.format != "csv")
                throw DomainError("table supports --format csv only");
            Output out(common.out);
            write_table_csv(out.stream(), table(n_max));
            out.close();
        } else if (*verify_cmd) {
            const int cap = common.cap_or(kDefaultOracleCap);
            auto levels = build_levels(n_max, {cap, threads});
            if (inject_fault && levels.back().elements.size() > 1) levels.back().elements.pop_back();
            Output out(common.out);
            bool all_ok = true;
            for (const auto& lvl : levels) {
                const auto expected = enumerate_region({RegionKind::B, lvl.level}, std::max(cap, lvl.level));
                const bool ok = expected.elements == lvl.elements;
                all_ok = all_ok && ok;
                out.stream() << "level " << lvl.level << ": |A| = " << lvl.elements.size()
                             << ", |B| = " << expected.size() << ' ' << (ok ? "PASS" : "FAIL") << '\n';
            }
            out.stream() << (all_ok ? "PASS" : "FAIL") << '\n';
            out.close();
            if (!all_ok) return kVerification;
        } else if (*bench_cmd) {
            if (!common.format.empty() && common.format != "csv")
                throw DomainError("bench supports --format csv only");
            StrategyOptions options;
            options.naive_cap = common.cap_or(options.naive_cap);
            options.recursive_cap = recursive_cap;
            options.threads = threads;
            const auto report = bench(n_max, options);
            Output out(common.out);
            write_bench_csv(out.stream(), report);
            out.close();
            if (!report.consistent) {
                std::cerr << "strategies disagree\n";
                return kVerification;
            }
        } else if (*render_cmd) {
            RenderSpec spec;
            spec.query = {parse_region_kind(kind_text), level};
            spec.format = parse_render_format(common.format.empty() ? "svg" : common.format);
            spec.cell_px = cell_px;
            const std::string figure = render(spec, common.cap_or(kDefaultRenderCap));
            Output out(common.out, spec.format == RenderFormat::Pgm);
            out.stream() << figure;
            out.close();
        }
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCap;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kOk;
}
