#include "ado/json_io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ado {

namespace {

using nlohmann::json;

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_parse(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

json cyc_obj(const Cyc& c) {
  json coeffs = json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(rat_str(r));
  return json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Cyc cyc_parse(const json& j) {
  const long m = j.at("conductor").get<long>();
  std::vector<Rat> coeffs;
  for (const auto& s : j.at("coeffs")) coeffs.push_back(rat_parse(s.get<std::string>()));
  return Cyc::from_coeffs(m, std::move(coeffs));
}

template <class L, class CoeffOut>
json poly_obj(const L& p, CoeffOut&& coeff_out) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"exp2", e}, {"coeff", coeff_out(c)}});
  return json{{"vars", p.vars()}, {"terms", terms}};
}

// Format a cyclotomic coefficient as an integer polynomial in q using the
// power-basis exponents (used by the LaTeX emitter).
std::string coeff_latex(const Cyc& c) {
  std::vector<std::pair<int, Rat>> mono;  // (q exponent, coefficient)
  for (size_t i = 0; i < c.coeffs().size(); ++i)
    if (c.coeffs()[i] != 0) mono.push_back({(int)i, c.coeffs()[i]});
  if (mono.empty()) return "0";
  auto atom = [](const Rat& r, int e, bool lead) {
    std::string s;
    Rat a = r;
    if (a < 0) {
      s += "-";
      a = -a;
    } else if (!lead) {
      s += "+";
    }
    if (e == 0) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str();
      s += (e == 1) ? "q" : "q^" + std::to_string(e);
    }
    return s;
  };
  if (mono.size() == 1) return atom(mono[0].second, mono[0].first, true);
  // multi-term: descending powers, leading minus factored out
  std::sort(mono.rbegin(), mono.rend());
  const bool neg = mono[0].second < 0;
  std::string body;
  for (size_t k = 0; k < mono.size(); ++k)
    body += atom(neg ? -mono[k].second : mono[k].second, mono[k].first, k == 0);
  return neg ? "-(" + body + ")" : "(" + body + ")";
}

}  // namespace

std::string cyc_to_json(const Cyc& c) { return cyc_obj(c).dump(); }

Cyc cyc_from_json(const std::string& j) { return cyc_parse(json::parse(j)); }

std::string poly_to_json(const LaurentC& p) {
  return poly_obj(p, [](const Cyc& c) { return cyc_obj(c); }).dump();
}

std::string poly_to_json(const LaurentQ& p) {
  return poly_obj(p, [](const QFrac& c) { return json(c.to_string()); }).dump();
}

LaurentC laurentc_from_json(const std::string& s) {
  const json j = json::parse(s);
  LaurentC p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("exp2").get<std::vector<int>>(), cyc_parse(t.at("coeff")));
  return p;
}

LaurentQ laurentq_from_json(const std::string& s) {
  const json j = json::parse(s);
  LaurentQ p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("exp2").get<std::vector<int>>(),
               QFrac::from_string(t.at("coeff").get<std::string>()));
  return p;
}

std::string weyl_to_json(const WeylElement& a) {
  if (a.hatted() != 0)
    throw std::invalid_argument("weyl_to_json: hatted pairs are not serialized");
  const int n = a.pairs();
  json terms = json::array();
  for (const auto& [key, coef] : a.terms()) {
    std::vector<int> xe(key.begin(), key.begin() + n);
    std::vector<int> ye(key.begin() + n, key.begin() + 2 * n);
    terms.push_back(
        json{{"xexp", xe}, {"yexp", ye}, {"coeff", coef.to_string()}});
  }
  return json{{"pairs", n}, {"terms", terms}}.dump();
}

WeylElement weyl_from_json(const std::string& s) {
  const json j = json::parse(s);
  const int n = j.at("pairs").get<int>();
  WeylElement a(n, 0);
  for (const auto& t : j.at("terms")) {
    auto xe = t.at("xexp").get<std::vector<int>>();
    auto ye = t.at("yexp").get<std::vector<int>>();
    if ((int)xe.size() != n || (int)ye.size() != n)
      throw std::invalid_argument("weyl_from_json: exponent arity mismatch");
    WeylElement::Key key = xe;
    key.insert(key.end(), ye.begin(), ye.end());
    a.add_term(key, QFrac::from_string(t.at("coeff").get<std::string>()));
  }
  return a;
}

std::string latex_xn_row(const LaurentC& hat) {
  if (hat.vars().size() != 1)
    throw std::domain_error("latex_xn_row: expects a univariate polynomial");
  // collect X^(n) coefficients from positive exponents, then check that the
  // negative side mirrors them (antisymmetry) and nothing is left over
  std::vector<std::pair<int, Cyc>> xn;  // (n, coeff), n descending
  LaurentC rest = hat;
  for (auto it = hat.terms().rbegin(); it != hat.terms().rend(); ++it) {
    const int e2 = it->first[0];
    if (e2 <= 0) break;
    if (e2 % 2 != 0)
      throw std::domain_error("latex_xn_row: non-integer exponent");
    const Cyc c = it->second;
    xn.push_back({e2 / 2, c});
    rest.add_term({e2}, -c);
    rest.add_term({-e2}, c);
  }
  if (!rest.is_zero())
    throw std::domain_error("latex_xn_row: polynomial is not antisymmetric");
  if (xn.empty()) return "0";
  std::string out;
  for (const auto& [n, c] : xn) {
    std::string cs = coeff_latex(c);
    if (cs == "1")
      cs = "";
    else if (cs == "-1")
      cs = "-";
    if (!out.empty() && !cs.starts_with("-")) out += "+";
    out += cs + "X^{(" + std::to_string(n) + ")}";
  }
  return out;
}

}  // namespace ado
