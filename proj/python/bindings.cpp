#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "valuata/app.hpp"
#include "valuata/dsl.hpp"
#include "valuata/error.hpp"

namespace py = pybind11;
using namespace valuata;

namespace {

SeriesSpec series(int p, const std::string& group, const std::string& residue, const std::string& precision) {
  return {p, group, residue, precision};
}

}  // namespace

PYBIND11_MODULE(_valuata, m) {
  m.doc() = "Best generators of degree-p Artin-Schreier and Kummer extensions";

  auto base = py::register_exception<Error>(m, "ValuataError");
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<MathAssertion>(m, "MathAssertion", base.ptr());
  py::register_exception<InsufficientPrecision>(m, "InsufficientPrecision", base.ptr());
  py::register_exception<ZeroToPrecision>(m, "ZeroToPrecision", base.ptr());
  py::register_exception<DivisionByZero>(m, "DivisionByZero", base.ptr());

  m.def("analyze_as", [](const std::string& f, int p, const std::string& group, const std::string& residue,
                         const std::string& precision) { return dump(analyze_as(series(p, group, residue, precision), f)); },
        py::arg("f"), py::arg("p") = 2, py::arg("group") = "int", py::arg("residue") = "", py::arg("precision") = "");

  m.def("normalize_as",
        [](const std::string& f, int p, const std::string& group, const std::string& residue,
           const std::string& precision, int budget, int probes, std::uint64_t seed) {
          return dump(normalize_as(series(p, group, residue, precision), f, budget, probes, seed));
        },
        py::arg("f"), py::arg("p") = 2, py::arg("group") = "int", py::arg("residue") = "", py::arg("precision") = "",
        py::arg("budget") = 10, py::arg("probes") = 0, py::arg("seed") = 0);

  m.def("classify_kummer",
        [](const std::string& h, int p, int mm, bool with_y, int N) {
          return dump(classify_kummer({p, mm, with_y, N}, h));
        },
        py::arg("h"), py::arg("p") = 2, py::arg("m") = 1, py::arg("with_y") = false, py::arg("N") = 0);

  m.def("normalize_kummer",
        [](const std::string& h, int p, int mm, bool with_y, int N, int budget, int probes, std::uint64_t seed) {
          return dump(normalize_kummer({p, mm, with_y, N}, h, budget, probes, seed));
        },
        py::arg("h"), py::arg("p") = 2, py::arg("m") = 1, py::arg("with_y") = false, py::arg("N") = 0,
        py::arg("budget") = 10, py::arg("probes") = 0, py::arg("seed") = 0);

  m.def("verify_norm_ideal",
        [](const std::string& f, int p, const std::string& group, const std::string& residue,
           const std::string& precision, const std::vector<std::string>& b, int samples, std::uint64_t seed) {
          return dump(verify_norm_ideal(series(p, group, residue, precision), f, b, samples, seed));
        },
        py::arg("f"), py::arg("p") = 2, py::arg("group") = "int", py::arg("residue") = "", py::arg("precision") = "",
        py::arg("b") = std::vector<std::string>{}, py::arg("samples") = 20, py::arg("seed") = 0);

  m.def("run_corpus", [](int probes, std::uint64_t seed) { return dump(run_corpus(probes, seed)); },
        py::arg("probes") = 200, py::arg("seed") = 0);

  m.def("corpus_names", [] {
    std::vector<std::string> names;
    for (const auto& e : corpus()) names.push_back(e.name);
    return names;
  });

  m.def("format_series", [](const std::string& text, int p, const std::string& group, const std::string& residue) {
    SeriesField K = series(p, group, residue, "").build();
    return K.str(parse_series(K, text));
  }, py::arg("text"), py::arg("p") = 2, py::arg("group") = "int", py::arg("residue") = "");

  m.def("format_cyclo", [](const std::string& text, int p, int mm, bool with_y) {
    CycloField F(p, mm, with_y);
    return F.str(parse_cyclo(F, text));
  }, py::arg("text"), py::arg("p") = 2, py::arg("m") = 1, py::arg("with_y") = false);
}
