#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lucaszeck/core_sequences.hpp"
#include "lucaszeck/density_analysis.hpp"
#include "lucaszeck/fixed_term_sets.hpp"
#include "lucaszeck/partition_engine.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
namespace lz = lucaszeck;

namespace {

lz::CountMode parse_mode(const std::string& mode) {
    if (mode == "formula") return lz::CountMode::formula;
    if (mode == "enum" || mode == "enumeration") return lz::CountMode::enumeration;
    throw py::value_error("mode must be 'formula' or 'enum'");
}

// Partitions as plain lists of indices.
std::vector<std::vector<int>> partitions_of(lz::Int n, const lz::RecurrenceSpec& spec) {
    std::vector<std::vector<int>> out;
    for (auto& p : lz::enumerate_partitions(n, spec).partitions) out.push_back(std::move(p.indices));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Non-consecutive partitions over the Lucas and Fibonacci sequences.";

    py::class_<lz::RecurrenceSpec>(m, "RecurrenceSpec")
        .def(py::init<lz::Int, lz::Int, lz::Int, lz::Int>(), py::arg("p"), py::arg("q"),
             py::arg("a0"), py::arg("a1"))
        .def_readwrite("p", &lz::RecurrenceSpec::p)
        .def_readwrite("q", &lz::RecurrenceSpec::q)
        .def_readwrite("a0", &lz::RecurrenceSpec::a0)
        .def_readwrite("a1", &lz::RecurrenceSpec::a1)
        .def_static("lucas", &lz::RecurrenceSpec::lucas)
        .def_static("fibonacci", &lz::RecurrenceSpec::fibonacci)
        .def("__eq__", [](const lz::RecurrenceSpec& a, const lz::RecurrenceSpec& b) { return a == b; })
        .def("__repr__", [](const lz::RecurrenceSpec& s) {
            return "RecurrenceSpec(p=" + std::to_string(s.p) + ", q=" + std::to_string(s.q) +
                   ", a0=" + std::to_string(s.a0) + ", a1=" + std::to_string(s.a1) + ")";
        });

    m.def("term", &lz::term, py::arg("spec"), py::arg("index"));
    m.def("lucas", &lz::lucas, py::arg("index"));
    m.def("fibonacci", &lz::fibonacci, py::arg("index"));
    m.def("floor_div_phi", &lz::floor_div_phi, py::arg("m"));
    m.def("b_count", &lz::b_count, py::arg("n"));
    m.def("golden_char", &lz::golden_char, py::arg("j"));
    m.def("golden_prefix", &lz::golden_prefix, py::arg("n"));

    m.def("enumerate_partitions", &partitions_of, py::arg("n"),
          py::arg("spec") = lz::RecurrenceSpec::lucas(),
          "All non-consecutive partitions of n as ascending index lists.");
    m.def("canonical_partition", [](lz::Int n) { return lz::canonical_partition(n).indices; },
          py::arg("n"));
    m.def("fibonacci_zeckendorf", [](lz::Int n) { return lz::fibonacci_zeckendorf(n).indices; },
          py::arg("n"));
    m.def("achievable_sums", [](int m) { return lz::achievable_sums(m).achievable; }, py::arg("m"));
    m.def("verify_lemma3", &lz::verify_lemma3, py::arg("m"));
    m.def("verify_lemma5", &lz::verify_lemma5, py::arg("m"));
    m.def("max_partition_count", &lz::max_partition_count, py::arg("bound"),
          py::call_guard<py::gil_scoped_release>());

    m.def("z_set", [](int k, std::size_t count) { return lz::z_set(k, count); }, py::arg("k"),
          py::arg("count"));
    m.def("q_sequence", [](int k, std::size_t count) { return lz::q_sequence(k, count).values; },
          py::arg("k"), py::arg("count"));
    m.def("k_set", [](std::size_t count) { return lz::k_set(count).values; }, py::arg("count"));
    m.def("contains_summand", &lz::contains_summand, py::arg("n"), py::arg("k"));
    m.def("verify_gap_lemma", &lz::verify_gap_lemma, py::arg("k"), py::arg("count"),
          py::call_guard<py::gil_scoped_release>());

    m.def("c_of",
          [](lz::Int bound, const std::string& mode) {
              const auto parsed = parse_mode(mode);
              py::gil_scoped_release release;
              return lz::c_of(bound, parsed);
          },
          py::arg("bound"), py::arg("mode") = "formula");
    m.def("beta_of",
          [](lz::Int bound, const std::string& mode) {
              const auto parsed = parse_mode(mode);
              lz::DensityReport r;
              {
                  py::gil_scoped_release release;
                  r = lz::beta_of(bound, parsed);
              }
              py::dict d;
              d["N"] = r.bound;
              d["c"] = r.c;
              d["beta"] = py::make_tuple(r.beta_numerator, r.beta_denominator);
              d["beta_decimal"] = r.beta;
              d["percent"] = r.percent;
              d["alpha_gap"] = r.alpha_gap;
              return d;
          },
          py::arg("bound"), py::arg("mode") = "formula");
    m.def("alpha", &lz::alpha, py::arg("precision") = 12);
    m.def("error_bound_check", &lz::error_bound_check, py::arg("bound"));

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
