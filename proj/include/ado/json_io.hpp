#pragma once

#include <string>

#include "ado/laurent.hpp"
#include "ado/weyl.hpp"

namespace ado {

// Cyclotomic number: {"conductor": m, "coeffs": ["p/q", ...]} with
// phi(m) power-basis coordinates in lowest terms.
std::string cyc_to_json(const Cyc& c);
Cyc cyc_from_json(const std::string& j);

// Laurent polynomial: {"vars": [...], "terms": [{"exp2": [...],
// "coeff": <CycNum object>}]} (cyclotomic coefficients) or with
// "p(q)/q(q)" coefficient strings (rational-in-q coefficients).
std::string poly_to_json(const LaurentC& p);
std::string poly_to_json(const LaurentQ& p);
LaurentC laurentc_from_json(const std::string& j);
LaurentQ laurentq_from_json(const std::string& j);

// Weyl operator: {"pairs": n, "terms": [{"xexp": [...], "yexp": [...],
// "coeff": "p(q)/q(q)"}]}; hatted pairs are not serialized.
std::string weyl_to_json(const WeylElement& a);
WeylElement weyl_from_json(const std::string& j);

// LaTeX row in the X^{(n)} := x^n - x^{-n} abbreviation, e.g.
// "q^2X^{(5)}+qX^{(1)}". Requires a univariate antisymmetric polynomial
// (throws std::domain_error otherwise); output is deterministic.
std::string latex_xn_row(const LaurentC& hat);

}  // namespace ado
