// Python bindings. Structured results cross the boundary as JSON strings;
// the adoq package parses them into plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>

#include "ado/jones.hpp"
#include "ado/json_io.hpp"
#include "ado/recursion.hpp"
#include "ado/statesum.hpp"
#include "ado/tangle.hpp"

namespace py = pybind11;
using namespace ado;

namespace {

TangleProgram program_from(const std::string& knot, const std::string& text) {
  if (!text.empty()) {
    TangleProgram p = parse_tangle(text);
    auto errs = validate(p, nullptr);
    if (!errs.empty()) throw std::invalid_argument(errs.front().message);
    return p;
  }
  return builtin_tangle(knot);
}

LaurentC family_member(const std::string& knot, long r) {
  // closed form for 4_1 at large r; exact agreement with the state sum is
  // covered by the test suite
  if (knot == "4_1" && r > 8) return murakami_41(r).hat;
  return ado_invariant(builtin_tangle(knot), r).hat;
}

}  // namespace

PYBIND11_MODULE(_adoq, m) {
  m.doc() = "exact ADO / colored Jones invariants and q-holonomic tools";

  m.def(
      "ado_hat",
      [](const std::string& knot, long r, const std::string& tangle_text) {
        return poly_to_json(ado_invariant(program_from(knot, tangle_text), r).hat);
      },
      py::arg("knot") = "3_1", py::arg("r") = 2, py::arg("tangle_text") = "",
      "hat-normalized ADO invariant at zeta_2r as a polynomial JSON string");

  m.def(
      "ado_hat_latex",
      [](const std::string& knot, long r, const std::string& tangle_text) {
        return latex_xn_row(ado_invariant(program_from(knot, tangle_text), r).hat);
      },
      py::arg("knot") = "3_1", py::arg("r") = 2, py::arg("tangle_text") = "",
      "same row in the X^(n) := x^n - x^{-n} LaTeX form");

  m.def(
      "colored_jones",
      [](const std::string& knot, int N) {
        return colored_jones(knot, N).to_string();
      },
      py::arg("knot"), py::arg("N"),
      "colored Jones polynomial (unknot-normalized to [N]_q)");

  m.def(
      "verify_recursion",
      [](const std::string& knot, long rmin, long rmax, int Nmin, int Nmax) {
        std::ostringstream ss;
        ss << '[' << certificate_to_json(verify_jones(knot, Nmin, Nmax)) << ','
           << certificate_to_json(verify_ado(knot, rmin, rmax)) << ']';
        return ss.str();
      },
      py::arg("knot"), py::arg("rmin") = 2, py::arg("rmax") = 11,
      py::arg("Nmin") = 2, py::arg("Nmax") = 15,
      "Jones- and ADO-side recursion certificates as a JSON array");

  m.def(
      "residue_check",
      [](const std::string& knot, long r, int N) {
        return certificate_to_json(residue_check(knot, r, N));
      },
      py::arg("knot"), py::arg("r"), py::arg("N"));

  m.def(
      "kashaev_check",
      [](const std::string& knot, long r) {
        return certificate_to_json(kashaev_check(knot, r));
      },
      py::arg("knot"), py::arg("r"));

  m.def(
      "guess",
      [](const std::string& knot, int y_order, int x_deg, int q_deg,
         const std::vector<long>& train, const std::vector<long>& test) {
        std::map<long, LaurentC> family;
        for (long r : train) family[r] = family_member(knot, r);
        for (long r : test) family[r] = family_member(knot, r);
        GuessAnsatz ansatz;
        ansatz.y_order = y_order;
        ansatz.x_degree = x_deg;
        ansatz.q_degree = q_deg;
        GuessResult g = guess_operator(family, ansatz, train, test);
        std::ostringstream ss;
        ss << "{\"certificate\":" << certificate_to_json(g.cert)
           << ",\"candidates\":[";
        for (size_t i = 0; i < g.candidates.size(); ++i)
          ss << (i ? "," : "") << weyl_to_json(g.candidates[i]);
        ss << "]}";
        return ss.str();
      },
      py::arg("knot") = "3_1", py::arg("y_order") = 2, py::arg("x_deg") = 11,
      py::arg("q_deg") = 20,
      py::arg("train") = std::vector<long>{2, 3, 4, 5, 6, 7, 8, 9},
      py::arg("test") = std::vector<long>{10, 11, 12},
      "search for an annihilator of the ADO family; JSON result");

  m.def(
      "tangle_info",
      [](const std::string& text) {
        TangleProgram p = parse_tangle(text);
        TangleInfo info;
        auto errs = validate(p, &info);
        std::ostringstream ss;
        if (!errs.empty()) throw std::invalid_argument(errs.front().message);
        ss << "{\"name\":\"" << p.name << "\",\"crossings\":" << info.crossings
           << ",\"positive_crossings\":" << info.positive_crossings
           << ",\"negative_crossings\":" << info.negative_crossings
           << ",\"components\":" << info.components
           << ",\"closed_curves\":" << info.closed_curves << "}";
        return ss.str();
      },
      py::arg("text"), "validate a tangle program and report its statistics");
}
