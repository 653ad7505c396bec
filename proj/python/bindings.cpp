#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gaussphi/counting.hpp"
#include "gaussphi/expansion.hpp"
#include "gaussphi/motzkin.hpp"
#include "gaussphi/regions.hpp"
#include "gaussphi/weights.hpp"

namespace py = pybind11;
using namespace gaussphi;

namespace {

using Pair = std::pair<std::int64_t, std::int64_t>;

GaussInt to_gauss(Pair p) { return {p.first, p.second}; }
Pair to_pair(GaussInt x) { return {x.re, x.im}; }

std::vector<Pair> to_pairs(const std::vector<GaussInt>& xs) {
    std::vector<Pair> out;
    out.reserve(xs.size());
    for (GaussInt x : xs) out.push_back(to_pair(x));
    return out;
}

std::vector<GaussInt> to_gauss_vec(const std::vector<Pair>& xs) {
    std::vector<GaussInt> out;
    out.reserve(xs.size());
    for (const auto& p : xs) out.push_back(to_gauss(p));
    return out;
}

py::int_ to_py(const BigInt& v) {
    const std::string s = v.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Euclidean minimum function on the Gaussian integers";

    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);

    m.def("w", &w, py::arg("n"));
    m.def("least_level", &least_level, py::arg("m"));
    m.def("phi", [](Pair x) { return phi(to_gauss(x)); }, py::arg("x"));

    m.def(
        "in_region",
        [](const std::string& kind, int n, Pair x) { return in_region(parse_region_kind(kind), n, to_gauss(x)); },
        py::arg("kind"), py::arg("n"), py::arg("x"));
    m.def(
        "enumerate_region",
        [](const std::string& kind, int n, int cap) {
            return to_pairs(enumerate_region({parse_region_kind(kind), n}, cap).elements);
        },
        py::arg("kind"), py::arg("n"), py::arg("cap") = kDefaultEnumerationCap);
    m.def(
        "decompose",
        [](Pair x, int n) -> std::optional<std::pair<int, Pair>> {
            const auto d = decompose(to_gauss(x), n);
            if (!d) return std::nullopt;
            return std::pair{d->j, to_pair(d->reduced)};
        },
        py::arg("x"), py::arg("n"));
    m.def(
        "preimage", [](int n, int cap) { return to_pairs(preimage(n, cap)); }, py::arg("n"),
        py::arg("cap") = kDefaultEnumerationCap);

    m.def(
        "expand",
        [](Pair x, bool backtrack) {
            return format_digits(
                expand_min(to_gauss(x), backtrack ? ExpandMethod::Backtracking : ExpandMethod::Greedy));
        },
        py::arg("x"), py::arg("backtrack") = false);
    m.def("evaluate", [](const std::string& digits) { return to_pair(evaluate(parse_digits(digits))); },
          py::arg("digits"));

    m.def("s_size", [](int n) { return to_py(s_size(n)); }, py::arg("n"));
    m.def("b_size", [](int n) { return to_py(b_size(n)); }, py::arg("n"));
    m.def("preimage_size", [](int n) { return to_py(preimage_size(n)); }, py::arg("n"));
    m.def(
        "table",
        [](int n_max) {
            py::list rows;
            for (const auto& r : table(n_max))
                rows.append(py::make_tuple(r.n, to_py(r.s_size), to_py(r.b_size), to_py(r.preimage_size)));
            return rows;
        },
        py::arg("n_max"));
    m.def(
        "table_csv",
        [](int n_max) {
            std::ostringstream os;
            write_table_csv(os, table(n_max));
            return os.str();
        },
        py::arg("n_max"));

    m.def("canonical_residue", [](Pair x, Pair mod) { return to_pair(canonical_residue(to_gauss(x), to_gauss(mod))); },
          py::arg("x"), py::arg("m"));
    m.def("coset_domain", [](Pair mod) { return to_pairs(coset_domain(to_gauss(mod)).points); }, py::arg("m"));
    m.def(
        "surjects",
        [](const std::vector<Pair>& xs, Pair mod) { return surjects(to_gauss_vec(xs), to_gauss(mod)); },
        py::arg("elements"), py::arg("m"));
    m.def(
        "build_levels",
        [](int n_max, int cap, unsigned threads) {
            std::vector<std::vector<Pair>> out;
            for (const auto& level : build_levels(n_max, {cap, threads})) out.push_back(to_pairs(level.elements));
            return out;
        },
        py::arg("n_max"), py::arg("cap") = kDefaultOracleCap, py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "check_weight_identities",
        [](int n_max) {
            std::vector<std::tuple<int, int, std::string>> out;
            for (const auto& v : check_weight_identities(n_max)) out.emplace_back(v.n, v.l, v.identity);
            return out;
        },
        py::arg("n_max"));
}
