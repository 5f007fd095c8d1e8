#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ado/cyc.hpp"
#include "ado/qfrac.hpp"

namespace ado {

inline Cyc one_like(const Cyc& c) { return Cyc::one(c.conductor()); }
inline QFrac one_like(const QFrac&) { return QFrac(Rat(1)); }

// Multivariate Laurent polynomial with exponents in (1/2)Z, stored doubled.
// Coefficient ring C is Cyc (cyclotomic regime) or QFrac (rational-in-q
// regime); C must be a field with is_zero(), inv(), pow(), ==.
template <class C>
class Laurent {
 public:
  using Exp = std::vector<int>;  // doubled exponents, one per variable

  Laurent() = default;
  explicit Laurent(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Laurent monomial(std::vector<std::string> vars, Exp e2, C coeff) {
    Laurent p(std::move(vars));
    if (e2.size() != p.vars_.size())
      throw std::invalid_argument("monomial: exponent arity mismatch");
    if (!coeff.is_zero()) p.t_.emplace(std::move(e2), std::move(coeff));
    return p;
  }
  static Laurent constant(std::vector<std::string> vars, C coeff) {
    Exp e(vars.size(), 0);
    return monomial(std::move(vars), std::move(e), std::move(coeff));
  }

  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return (int)vars_.size(); }
  const std::map<Exp, C>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }

  int var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable " + name);
    return (int)(it - vars_.begin());
  }

  void add_term(Exp e2, const C& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(std::move(e2), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  Laurent operator-() const {
    Laurent r(vars_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
  }
  Laurent operator+(const Laurent& o) const {
    check(o);
    Laurent r(*this);
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
  }
  Laurent operator-(const Laurent& o) const {
    check(o);
    Laurent r(*this);
    for (const auto& [e, c] : o.t_) r.add_term(e, -c);
    return r;
  }
  Laurent operator*(const Laurent& o) const {
    check(o);
    Laurent r(vars_);
    for (const auto& [e1, c1] : t_)
      for (const auto& [e2, c2] : o.t_) {
        Exp e = e1;
        for (size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
        r.add_term(std::move(e), c1 * c2);
      }
    return r;
  }
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent operator*(const C& s) const {
    Laurent r(vars_);
    for (const auto& [e, c] : t_) r.add_term(e, c * s);
    return r;
  }
  bool operator==(const Laurent& o) const { return vars_ == o.vars_ && t_ == o.t_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // multiply by the monomial x_v^(e2/2)
  Laurent shift(int v, int e2) const {
    Laurent r(vars_);
    for (const auto& [e, c] : t_) {
      Exp ne = e;
      ne[v] += e2;
      r.t_.emplace(std::move(ne), c);
    }
    return r;
  }

  // Multiply each term carrying x_v^(e2/2) by factor(e2); realizes
  // substitutions x -> u*x for scalar units u (u possibly exponent-dependent,
  // e.g. a root of unity power).
  Laurent scale_var(int v, const std::function<C(int)>& factor) const {
    Laurent r(vars_);
    for (const auto& [e, c] : t_) r.add_term(e, c * factor(e[v]));
    return r;
  }

  // Substitute x_v -> coeff * monomial(f2); the monomial may involve any of
  // the variables including x_v itself. Half powers of x_v are allowed only
  // when coeff = 1 and the resulting exponents stay on the half grid.
  Laurent substitute(int v, const C& coeff, const Exp& f2) const {
    Laurent r(vars_);
    const C one = one_like(coeff);
    for (const auto& [e, c] : t_) {
      const int e2 = e[v];
      Exp ne = e;
      ne[v] = 0;
      for (size_t k = 0; k < ne.size(); ++k) {
        long add = (long)f2[k] * e2;
        if (add % 2 != 0) throw std::domain_error("substitute: non-integral exponent");
        ne[k] += (int)(add / 2);
      }
      C nc = c;
      if (e2 % 2 != 0) {
        if (!(coeff == one))
          throw std::domain_error("substitute: half power of non-trivial coefficient");
      } else if (e2 != 0) {
        nc = nc * coeff.pow(e2 / 2);
      }
      r.add_term(std::move(ne), nc);
    }
    return r;
  }

  // Evaluate x_v at a scalar value (requires integer exponents in x_v).
  Laurent eval_var(int v, const C& value) const {
    Laurent r(vars_);
    for (const auto& [e, c] : t_) {
      if (e[v] % 2 != 0) throw std::domain_error("eval_var: half-integer exponent");
      Exp ne = e;
      ne[v] = 0;
      r.add_term(std::move(ne), c * value.pow(e[v] / 2));
    }
    return r;
  }

  // d/dx_v (exponents may be half-integers; uses C * Rat scaling)
  Laurent derivative(int v) const {
    Laurent r(vars_);
    for (const auto& [e, c] : t_) {
      if (e[v] == 0) continue;
      Exp ne = e;
      ne[v] -= 2;
      Rat scale(e[v], 2);
      scale.canonicalize();
      r.add_term(std::move(ne), c * scale);
    }
    return r;
  }

  int min_exp2(int v) const {
    bool first = true;
    int m = 0;
    for (const auto& [e, c] : t_) {
      if (first || e[v] < m) m = e[v];
      first = false;
    }
    return m;
  }
  int max_exp2(int v) const {
    bool first = true;
    int m = 0;
    for (const auto& [e, c] : t_) {
      if (first || e[v] > m) m = e[v];
      first = false;
    }
    return m;
  }

  bool has_term(const Exp& e2) const { return t_.count(e2) > 0; }
  // coefficient of a monomial (zero coefficient returned as default C)
  C coeff_or_zero(const Exp& e2, const C& zero) const {
    auto it = t_.find(e2);
    return it == t_.end() ? zero : it->second;
  }

  // mirror x_v -> x_v^{-1}
  Laurent invert_var(int v) const {
    Laurent r(vars_);
    for (const auto& [e, c] : t_) {
      Exp ne = e;
      ne[v] = -ne[v];
      r.t_.emplace(std::move(ne), c);
    }
    return r;
  }

 private:
  void check(const Laurent& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("variable set mismatch");
  }
  std::vector<std::string> vars_;
  std::map<Exp, C> t_;
};

// (base; step)_n with the empty-product convention: 1 for n = 0, 0 for n < 0.
template <class C>
Laurent<C> pochhammer(const Laurent<C>& base, const Laurent<C>& step, long n,
                      const C& one) {
  if (n < 0) return Laurent<C>(base.vars());  // zero
  Laurent<C> acc = Laurent<C>::constant(base.vars(), one);
  Laurent<C> cur = base;
  for (long k = 0; k < n; ++k) {
    acc = acc * (Laurent<C>::constant(base.vars(), one) - cur);
    if (k + 1 < n) cur = cur * step;
  }
  return acc;
}

// Exact division organized along variable v; the divisor's leading
// v-coefficient must be a single term. Returns the quotient if the remainder
// vanishes, otherwise nullopt (remainder available via remainder_out).
template <class C>
std::optional<Laurent<C>> exact_div(const Laurent<C>& num, const Laurent<C>& den,
                                    int v, Laurent<C>* remainder_out = nullptr) {
  if (den.is_zero()) throw std::domain_error("exact_div: zero divisor");
  if (num.is_zero()) return Laurent<C>(num.vars());
  const int dlead = den.max_exp2(v);
  Laurent<C> dleadpart(den.vars());
  for (const auto& [e, c] : den.terms())
    if (e[v] == dlead) dleadpart.add_term(e, c);
  if (dleadpart.size() != 1)
    throw std::domain_error(
        "exact_div: leading coefficient in the division variable must be a "
        "single term");
  const auto& lede = dleadpart.terms().begin()->first;
  const C ledc_inv = dleadpart.terms().begin()->second.inv();
  // any exact quotient has v-exponents within [qmin, num.max - dlead]
  const int qmin = num.min_exp2(v) - den.min_exp2(v);

  Laurent<C> rem = num, quot(num.vars());
  while (!rem.is_zero()) {
    const int rlead = rem.max_exp2(v);
    if (rlead - dlead < qmin) break;
    Laurent<C> qpart(rem.vars());
    for (const auto& [e, c] : rem.terms()) {
      if (e[v] != rlead) continue;
      typename Laurent<C>::Exp qe = e;
      for (size_t k = 0; k < qe.size(); ++k) qe[k] -= lede[k];
      qpart.add_term(std::move(qe), c * ledc_inv);
    }
    rem = rem - qpart * den;
    quot = quot + qpart;
  }
  if (!rem.is_zero()) {
    if (remainder_out) *remainder_out = rem;
    return std::nullopt;
  }
  return quot;
}

using LaurentC = Laurent<Cyc>;
using LaurentQ = Laurent<QFrac>;

}  // namespace ado
