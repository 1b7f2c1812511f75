#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "reiscfg/cli.hpp"
#include "reiscfg/counting.hpp"
#include "reiscfg/fib.hpp"
#include "reiscfg/fixtures.hpp"
#include "reiscfg/identities.hpp"
#include "reiscfg/numtheory.hpp"
#include "reiscfg/oracle.hpp"
#include "reiscfg/word.hpp"

namespace py = pybind11;
using namespace reiscfg;

namespace {

// Exact conversion: arbitrary-precision counts cross the boundary as Python
// ints, never floats.
py::int_ to_py(const BigCount& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object to_exact(const DyadicRational& v) {
    if (v.is_integer()) return to_py(v.to_integer());
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(v.numerator()), to_py(BigCount(1) << (-v.exponent())));
}

Engine parse_engine(const std::string& e) {
    if (e == "auto") return Engine::Auto;
    if (e == "naive") return Engine::Naive;
    if (e == "seed") return Engine::Seed;
    throw DomainError("engine must be 'auto', 'naive' or 'seed'");
}

Query make_query(int n, int alphabet, long long gap, std::optional<long long> k,
                 bool rotsym, bool diameter) {
    Query q;
    q.n = n;
    q.alphabet = alphabet;
    q.min_gap = gap;
    q.k = k;
    q.require_rotsym = rotsym;
    q.require_reflective = diameter;
    return q;
}

const char* kind_name(AxisKind k) {
    switch (k) {
        case AxisKind::PointPoint: return "point-point";
        case AxisKind::PointGap: return "point-gap";
        case AxisKind::GapGap: return "gap-gap";
    }
    return "?";
}

py::dict profile_dict(const CyclicWord& w) {
    SymmetryProfile p = symmetry_profile(w);
    py::list axes;
    for (const AxisInfo& a : p.axes) {
        py::dict d;
        d["kind"] = kind_name(a.kind);
        d["c"] = a.c;
        py::list points, values;
        for (int x : a.points)
            if (x >= 0) points.append(x);
        for (int x : a.values)
            if (x >= 0) values.append(x);
        d["points"] = points;
        d["values"] = values;
        d["description"] = axis_description(a, w.n);
        axes.append(d);
    }
    py::dict out;
    out["stabilizer_order"] = p.stabilizer_order;
    out["minimal_period"] = p.minimal_period;
    out["axes"] = axes;
    out["reflective"] = p.reflective();
    out["rotation_symmetric"] = p.rotation_symmetric();
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Exact counting and enumeration of cyclic (0,1)/(0,1,2) configurations "
        "under rotation and reflection";

    // exception mapping: caller errors -> ValueError, violated exactness
    // guarantees -> ArithmeticError; the cap gets its own subtype
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);
    py::register_exception<IntegralityError>(m, "IntegralityError",
                                             PyExc_ArithmeticError);

    m.attr("MAX_WORD_LEN") = kMaxWordLen;
    m.attr("ALL_ZERO_RUN") = kAllZeroRun;
    m.attr("EXIT_OK") = kExitOk;
    m.attr("EXIT_MISMATCH") = kExitMismatch;
    m.attr("EXIT_USAGE") = kExitUsage;

    // ---- arithmetic primitives ----
    m.def("divisors", &divisors, py::arg("n"), "All divisors of n, increasing.");
    m.def("euler_phi", [](long long n) { return to_py(euler_phi(n)); }, py::arg("n"));
    m.def("mobius", &mobius, py::arg("n"));
    m.def(
        "binomial", [](long long a, long long b) { return to_py(binomial(a, b)); },
        py::arg("a"), py::arg("b"),
        "C(a,b); 0 outside 0 <= b <= a.");

    // ---- Fibonacci families ----
    m.def("fib_type1", [](long long m_, long long n) { return to_py(fib_type1(m_, n)); },
          py::arg("m"), py::arg("n"));
    m.def("fib_type2", [](long long m_, long long n) { return to_py(fib_type2(m_, n)); },
          py::arg("m"), py::arg("n"));
    m.def("fib_type1_binomial",
          [](long long m_, long long n) { return to_py(fib_type1_binomial(m_, n)); },
          py::arg("m"), py::arg("n"));
    m.def("fib_type2_binomial",
          [](long long m_, long long n) { return to_py(fib_type2_binomial(m_, n)); },
          py::arg("m"), py::arg("n"));

    // ---- counting closed forms ----
    m.def("gupta_R", [](long long n, long long k) { return to_py(gupta_R(n, k)); },
          py::arg("n"), py::arg("k"),
          "Dihedral classes of n binary points with exactly k ones.");
    m.def("reflective_R1",
          [](long long n, long long k) { return to_py(reflective_R1(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("lambda_total", [](long long n) { return to_py(lambda_total(n)); },
          py::arg("n"), "Total nonzero binary classes.");
    m.def("alpha_total", [](long long n) { return to_exact(alpha_total(n)); },
          py::arg("n"));
    m.def("beta_refl", [](long long n) { return to_exact(beta_refl(n)); }, py::arg("n"));
    m.def("count_rotsym", [](long long n) { return to_py(count_rotsym(n)); },
          py::arg("n"));
    m.def("count_rotsym_refl", [](long long n) { return to_py(count_rotsym_refl(n)); },
          py::arg("n"));
    m.def("count_rotsym_k",
          [](long long n, long long k) { return to_py(count_rotsym_k(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("count_rotsym_refl_k",
          [](long long n, long long k) { return to_py(count_rotsym_refl_k(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("gap_total",
          [](long long n, long long m_) { return to_py(gap_total(n, m_)); },
          py::arg("n"), py::arg("m"));
    m.def("gap_total_k",
          [](long long n, long long m_, long long k) {
              return to_py(gap_total_k(n, m_, k));
          },
          py::arg("n"), py::arg("m"), py::arg("k"));
    m.def("gap_refl_total",
          [](long long n, long long m_) { return to_py(gap_refl_total(n, m_)); },
          py::arg("n"), py::arg("m"));
    m.def("gap_refl_total_k",
          [](long long n, long long m_, long long k) {
              return to_py(gap_refl_total_k(n, m_, k));
          },
          py::arg("n"), py::arg("m"), py::arg("k"));
    m.def("alpha_gap",
          [](long long n, long long m_) { return to_exact(alpha_gap(n, m_)); },
          py::arg("n"), py::arg("m"));
    m.def("count_rotsym_gap",
          [](long long n, long long m_) { return to_py(count_rotsym_gap(n, m_)); },
          py::arg("n"), py::arg("m"));
    m.def("count_rotsym_refl_gap",
          [](long long n, long long m_) { return to_py(count_rotsym_refl_gap(n, m_)); },
          py::arg("n"), py::arg("m"));
    m.def("count_rotsym_gap_k",
          [](long long n, long long m_, long long k) {
              return to_py(count_rotsym_gap_k(n, m_, k));
          },
          py::arg("n"), py::arg("m"), py::arg("k"));
    m.def("count_rotsym_refl_gap_k",
          [](long long n, long long m_, long long k) {
              return to_py(count_rotsym_refl_gap_k(n, m_, k));
          },
          py::arg("n"), py::arg("m"), py::arg("k"));
    m.def("ternary_rotsym_formula",
          [](long long n) { return to_py(ternary_rotsym_formula(n)); }, py::arg("n"),
          "Literal ternary closed form; known to diverge from the true counts.");
    m.def("ternary_rotsym_refl_formula",
          [](long long n) { return to_py(ternary_rotsym_refl_formula(n)); },
          py::arg("n"));
    m.def("ternary_rotsym_heuristic",
          [](long long n) { return to_py(ternary_rotsym_heuristic(n)); }, py::arg("n"));
    m.def("ternary_rotsym_refl_heuristic",
          [](long long n) { return to_py(ternary_rotsym_refl_heuristic(n)); },
          py::arg("n"));

    // ---- words ----
    m.def(
        "canonical_form",
        [](const std::string& word) {
            return canonical_form(CyclicWord::parse(word)).digits();
        },
        py::arg("word"),
        "Lexicographically least word in the dihedral orbit, as digits.");
    m.def(
        "symmetry_profile",
        [](const std::string& word) { return profile_dict(CyclicWord::parse(word)); },
        py::arg("word"));
    m.def(
        "satisfies_gap",
        [](const std::string& word, long long m_) {
            return satisfies_gap(CyclicWord::parse(word), m_);
        },
        py::arg("word"), py::arg("m"));
    m.def(
        "min_zero_run",
        [](const std::string& word) { return min_zero_run(CyclicWord::parse(word)); },
        py::arg("word"), "Minimal circular zero run; ALL_ZERO_RUN for all-zero words.");

    // ---- oracle ----
    m.def(
        "count",
        [](int n, int alphabet, long long gap, std::optional<long long> k, bool rotsym,
           bool diameter, const std::string& engine) {
            return to_py(count_classes(make_query(n, alphabet, gap, k, rotsym, diameter),
                                       parse_engine(engine)));
        },
        py::arg("n"), py::arg("alphabet") = 2, py::arg("gap") = 0,
        py::arg("k") = std::nullopt, py::arg("rotsym") = false,
        py::arg("diameter") = false, py::arg("engine") = "auto",
        "Exhaustive-search class count for the query.");
    m.def(
        "enumerate_classes",
        [](int n, int alphabet, long long gap, std::optional<long long> k, bool rotsym,
           bool diameter, const std::string& engine) {
            std::vector<std::string> out;
            for (const CyclicWord& w : enumerate_classes(
                     make_query(n, alphabet, gap, k, rotsym, diameter),
                     parse_engine(engine)))
                out.push_back(w.digits());
            return out;
        },
        py::arg("n"), py::arg("alphabet") = 2, py::arg("gap") = 0,
        py::arg("k") = std::nullopt, py::arg("rotsym") = false,
        py::arg("diameter") = false, py::arg("engine") = "auto",
        "Sorted canonical representatives matching the query.");
    m.def(
        "axis_breakdown",
        [](int n, int alphabet, long long gap, std::optional<long long> k, bool rotsym,
           bool diameter, const std::string& engine) {
            AxisBreakdown b =
                axis_breakdown(make_query(n, alphabet, gap, k, rotsym, diameter),
                               parse_engine(engine));
            py::dict out;
            out["no_axis"] = to_py(b.no_axis);
            out["gap_gap_only"] = to_py(b.gap_gap_only);
            out["point_axis"] = to_py(b.point_axis);
            py::dict pairs;
            for (const auto& [pr, cnt] : b.point_pairs)
                pairs[py::make_tuple(pr.first, pr.second)] = to_py(cnt);
            out["point_pairs"] = pairs;
            py::dict pg;
            for (const auto& [val, cnt] : b.point_gap_values)
                pg[py::int_(val)] = to_py(cnt);
            out["point_gap_values"] = pg;
            return out;
        },
        py::arg("n"), py::arg("alphabet") = 2, py::arg("gap") = 0,
        py::arg("k") = std::nullopt, py::arg("rotsym") = false,
        py::arg("diameter") = false, py::arg("engine") = "auto");

    // ---- identities ----
    m.def(
        "check_identity",
        [](const std::string& name, const std::vector<long long>& params) {
            return check_identity(name, params);
        },
        py::arg("name"), py::arg("params") = std::vector<long long>{});
    m.def("identity_names", &identity_names);

    // ---- fixtures ----
    m.def(
        "table_fixture",
        [](int which) {
            std::vector<std::string> rows;
            for (const CyclicWord& w : table_fixture(which).rows)
                rows.push_back(w.digits());
            return rows;
        },
        py::arg("which"), "Golden table rows as digit strings (1 or 2).");
    m.def("fixture_text", [](int which) { return fixture_text(which); },
          py::arg("which"));

    // ---- command line ----
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"),
        "Run one CLI invocation in-process; returns (exit_code, stdout, stderr).");
}
