// Acceptance run: one line per criterion, "PASS"/"FAIL" plus elapsed time.
// Every check is exact (tolerance zero); timing caps are part of the
// criterion where stated. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ado/jones.hpp"
#include "ado/recursion.hpp"
#include "ado/statesum.hpp"
#include "ado/tangle.hpp"
#include "random_tangle.hpp"
#include "reference_data.hpp"

using namespace ado;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, double secs,
            double cap = 0.0) {
  bool timed_out = cap > 0 && secs > cap;
  bool pass = ok && !timed_out;
  if (!pass) ++failures;
  std::printf("criterion %2d %-28s %s  (%.1fs%s)\n", idx, name.c_str(),
              pass ? "PASS" : "FAIL", secs,
              timed_out ? ", over time cap" : "");
  std::fflush(stdout);
}

template <typename Fn>
void run(int idx, const std::string& name, double cap, Fn fn) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    std::printf("criterion %2d exception: %s\n", idx, e.what());
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0).count();
  report(idx, name, ok, secs, cap);
}

// ---- criteria 1-3: frozen invariant tables ----

bool table_3_1() {
  for (long r = 2; r <= 11; ++r)
    if (ado_invariant(builtin_tangle("3_1"), r).hat !=
        refdata::build_row(2 * r, refdata::row_3_1(r)))
      return false;
  return true;
}

bool table_5_2() {
  for (long r = 2; r <= 11; ++r)
    if (ado_invariant(builtin_tangle("5_2"), r).hat !=
        refdata::build_row(2 * r, refdata::row_5_2(r)))
      return false;
  return true;
}

bool table_4_1() {
  for (long r = 2; r <= 5; ++r)
    if (ado_invariant(builtin_tangle("4_1"), r).hat != refdata::row_4_1(r))
      return false;
  // state sum vs independent closed-form oracle
  for (long r = 2; r <= 12; ++r)
    if (ado_invariant(builtin_tangle("4_1"), r).hat != murakami_41(r).hat)
      return false;
  return true;
}

// ---- criterion 4: colored Jones reference values ----

QPoly qpoly_from(const std::vector<std::pair<int, int>>& terms) {
  QPoly p;
  for (auto [c, e] : terms) p.add_term(2 * e, Rat(c));
  return p;
}

bool jones_values() {
  if (colored_jones("4_1", 1) != QPoly(Rat(1))) return false;
  if (colored_jones("4_1", 2) != qpoly_from({{1, 5}, {1, -5}})) return false;
  if (colored_jones("4_1", 3) !=
      qpoly_from({{1, 14}, {-1, 10}, {1, 2}, {1, 0}, {1, -2}, {-1, -10},
                  {1, -14}}))
    return false;
  if (colored_jones("4_1", 4) !=
      qpoly_from({{1, 27}, {-1, 23}, {-1, 21}, {1, 17}, {1, 11}, {1, 9},
                  {1, -9}, {1, -11}, {1, -17}, {-1, -21}, {-1, -23},
                  {1, -27}}))
    return false;
  // unknot normalization: J_N = [N]_q = q^{N-1} + q^{N-3} + ... + q^{1-N}
  for (int N = 1; N <= 20; ++N) {
    QPoly bracket;
    for (int k = 0; k < N; ++k) bracket.add_term(2 * (N - 1 - 2 * k), Rat(1));
    if (colored_jones("unknot", N) != bracket) return false;
  }
  return true;
}

// ---- criteria 5-8: verification sweeps ----

bool jones_recursions() {
  for (const char* knot : {"3_1", "4_1", "5_2"})
    if (!verify_jones(knot, 2, 15).pass) return false;
  return true;
}

bool ado_recursions() {
  std::map<std::string, std::vector<Rat>> expected = {
      {"3_1", {Rat(1), Rat(-1), Rat(1)}},
      {"4_1", {Rat(-1), Rat(3), Rat(-1)}},
      {"5_2", {Rat(2), Rat(-3), Rat(2)}},
  };
  int sigma = 0;
  for (const auto& [knot, pattern] : expected) {
    Certificate cert = verify_ado(knot, 2, knot == "4_1" ? 20 : 11);
    if (!cert.pass || cert.prefactor.size() != 3) return false;
    // fitted prefactor proportional to the expected pattern
    for (int i = 0; i < 3; ++i)
      if (cert.prefactor[i] * pattern[(i + 1) % 3] !=
          cert.prefactor[(i + 1) % 3] * pattern[i])
        return false;
    // the resolved y-sign convention is shared across knots and all r
    if (sigma == 0) sigma = cert.sigma;
    if (cert.sigma != sigma || sigma == 0) return false;
  }
  return true;
}

bool residue_relation() {
  for (const char* knot : {"3_1", "4_1", "5_2"})
    for (long r = 2; r <= 8; ++r)
      for (int N = 1; N <= 2 * r; ++N) {
        if (N % r == 0) continue;
        if (!residue_check(knot, r, N).pass) return false;
      }
  return true;
}

bool kashaev_points() {
  for (const char* knot : {"3_1", "4_1", "5_2"})
    for (long r = 2; r <= 10; ++r)
      if (!kashaev_check(knot, r).pass) return false;
  return true;
}

// ---- criterion 9: q -> 1 limit against the A-polynomial ----

bool unit_monomial_multiple(const LaurentQ& a, const LaurentQ& b) {
  if (a.terms().size() != b.terms().size()) return false;
  if (a.terms().empty()) return true;
  auto ita = a.terms().begin();
  auto itb = b.terms().begin();
  std::vector<int> shift(ita->first.size());
  for (size_t k = 0; k < shift.size(); ++k)
    shift[k] = ita->first[k] - itb->first[k];
  QFrac ratio = ita->second / itb->second;
  for (; itb != b.terms().end(); ++ita, ++itb) {
    for (size_t k = 0; k < shift.size(); ++k)
      if (ita->first[k] - itb->first[k] != shift[k]) return false;
    if (ita->second != ratio * itb->second) return false;
  }
  return true;
}

bool aj_limit() {
  OperatorPair op = builtin_operators("4_1");
  WeylElement H = homogenize(op.A, op.B);
  LaurentQ quot(std::vector<std::string>{"m", "l"});
  if (!q1_divisibility(H, a_polynomial("4_1"), &quot).pass) return false;
  // displayed quotient factor: (m + m^-1)(m^2 - m^-2)^3, up to unit monomial
  auto ml = [](int me, int le) {
    return LaurentQ::monomial({"m", "l"}, {2 * me, 2 * le}, QFrac(Rat(1)));
  };
  LaurentQ s = ml(2, 0) - ml(-2, 0);
  LaurentQ factor = (ml(1, 0) + ml(-1, 0)) * s * s * s;
  return unit_monomial_multiple(quot, factor);
}

// ---- criterion 10: guessing pipeline ----

bool guesser_roundtrip() {
  std::map<long, LaurentC> family;
  for (long r = 2; r <= 12; ++r)
    family[r] = ado_invariant(builtin_tangle("3_1"), r).hat;
  GuessAnsatz ansatz;  // defaults: y_order 2, x_degree 11, q_degree 20
  GuessResult g = guess_operator(family, ansatz, {2, 3, 4, 5, 6, 7, 8, 9},
                                 {10, 11, 12});
  if (!g.cert.pass) return false;
  OperatorPair op = builtin_operators("3_1");
  WeylElement H = homogenize(op.A, op.B);
  const WeylElement* match = nullptr;
  for (const auto& cand : g.candidates)
    if (proportional_up_to_unit(cand, H)) {
      match = &cand;
      break;
    }
  if (!match) return false;
  // transfer the guessed hat-annihilator to the Jones window
  WeylElement unhat = reparameterize(*match, QFrac::q_power(2), -1);
  return thm_jones_crosscheck(unhat, "3_1", 2, 15, 0).pass;
}

// ---- criterion 11: discrete annihilator battery ----

DiscreteTable make_table(
    std::vector<std::string> xvars, std::vector<std::pair<long, long>> window,
    const std::function<DiscreteTable::Value(const std::vector<long>&)>& fn) {
  DiscreteTable t;
  t.xvars = std::move(xvars);
  std::vector<long> pt(window.size());
  std::function<void(size_t)> rec = [&](size_t d) {
    if (d == window.size()) {
      t.vals.emplace(pt, fn(pt));
      return;
    }
    for (pt[d] = window[d].first; pt[d] <= window[d].second; ++pt[d]) rec(d + 1);
  };
  rec(0);
  return t;
}

DiscreteTable::Value scalar_value(const std::vector<std::string>& xvars,
                                  QFrac v) {
  return {LaurentQ::constant(xvars, std::move(v)),
          LaurentQ::constant(xvars, QFrac(Rat(1)))};
}

DiscreteTable::Value pochhammer_value(long a, int step2) {
  std::vector<std::string> xv{"x"};
  LaurentQ one = LaurentQ::constant(xv, QFrac(Rat(1)));
  if (a < 0) return {LaurentQ(xv), one};
  LaurentQ num = one;
  for (long k = 0; k < a; ++k)
    num *= one - LaurentQ::monomial(xv, {2}, QFrac::q_power((int)(k * step2)));
  return {num, one};
}

bool annihilates(const WeylElement& op, const DiscreteTable& tab) {
  DiscreteTable r = act_discrete(op, tab);
  return !r.vals.empty() && table_is_zero(r);
}

bool discrete_battery() {
  std::vector<std::string> none, xv{"x"};
  auto qp = [](int e2) { return QFrac::q_power(e2); };

  // constant: yh - 1
  auto ctab = make_table(none, {{-4, 4}}, [&](const std::vector<long>&) {
    return scalar_value(none, QFrac(Rat(1)));
  });
  if (!annihilates(WeylElement::yhat(0, 1, 0) - WeylElement::one(0, 1), ctab))
    return false;

  // discrete delta: xh - 1
  auto dtab = make_table(none, {{-5, 5}}, [&](const std::vector<long>& a) {
    return scalar_value(none, QFrac(Rat(a[0] == 0 ? 1 : 0)));
  });
  if (!annihilates(WeylElement::xhat(0, 1, 0) - WeylElement::one(0, 1), dtab))
    return false;

  // indicator theta_{a1 <= a2}
  auto half = make_table(none, {{-4, 4}, {-4, 4}},
                         [&](const std::vector<long>& a) {
                           return scalar_value(none,
                                               QFrac(Rat(a[0] <= a[1] ? 1 : 0)));
                         });
  auto xh2 = [&](int j) { return WeylElement::xhat(0, 2, j); };
  auto yh2 = [&](int j) { return WeylElement::yhat(0, 2, j); };
  auto id2 = WeylElement::one(0, 2);
  if (!annihilates((xh2(1) - xh2(0) * qp(-2)) * (yh2(1) - id2), half))
    return false;
  if (!annihilates((xh2(1) - xh2(0)) * (yh2(0) - id2), half)) return false;

  // linear exponential q^a: yh - q
  auto lin = make_table(none, {{-4, 4}}, [&](const std::vector<long>& a) {
    return scalar_value(none, QFrac::q_power((int)(2 * a[0])));
  });
  if (!annihilates(
          WeylElement::yhat(0, 1, 0) - WeylElement::one(0, 1) * qp(2), lin))
    return false;

  // quadratic exponential q^{a^2}: yh - q xh^2
  auto quad = make_table(none, {{-4, 4}}, [&](const std::vector<long>& a) {
    return scalar_value(none, QFrac::q_power((int)(2 * a[0] * a[0])));
  });
  if (!annihilates(WeylElement::yhat(0, 1, 0) -
                       WeylElement::xhat(0, 1, 0, 2) * qp(2),
                   quad))
    return false;

  // four q-factorial variants
  auto id11 = WeylElement::one(1, 1);
  auto x11 = WeylElement::x(1, 1, 0);
  auto y11 = WeylElement::y(1, 1, 0);
  auto xh11 = [&](int e) { return WeylElement::xhat(1, 1, 0, e); };
  auto yh11 = WeylElement::yhat(1, 1, 0);
  auto poch1 = make_table(xv, {{-4, 8}}, [&](const std::vector<long>& a) {
    return pochhammer_value(a[0], 2);
  });
  auto poch2 = make_table(xv, {{-4, 8}}, [&](const std::vector<long>& a) {
    return pochhammer_value(a[0], 4);
  });
  if (!annihilates(
          (xh11(1) - id11 * qp(-2)) * (yh11 + xh11(1) * x11 - id11), poch1))
    return false;
  if (!annihilates((id11 - x11) * y11 + xh11(1) * x11 - id11, poch1))
    return false;
  if (!annihilates(
          (xh11(1) - id11 * qp(-2)) * (yh11 + xh11(2) * x11 - id11), poch2))
    return false;
  if (!annihilates((id11 - x11) * WeylElement::y(1, 1, 0, 2) +
                       xh11(2) * x11 - id11,
                   poch2))
    return false;
  return true;
}

// ---- criterion 12: property suites under the fixed default seed ----

Cyc random_cyc(long m, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Rat> co;
  Cyc probe = Cyc::one(m);
  size_t phi = probe.coeffs().size();
  for (size_t i = 0; i < phi; ++i) co.emplace_back(d(rng));
  return Cyc::from_coeffs(m, co);
}

bool field_axioms(std::mt19937& rng) {
  for (long m : {5L, 8L, 12L}) {
    for (int it = 0; it < 20; ++it) {
      Cyc a = random_cyc(m, rng), b = random_cyc(m, rng), c = random_cyc(m, rng);
      if ((a + b) * c != a * c + b * c) return false;
      if (a * (b * c) != (a * b) * c) return false;
      if (a + (-a) != Cyc::zero(m)) return false;
      if (!a.is_zero() && a * a.inv() != Cyc::one(m)) return false;
    }
  }
  return true;
}

bool pochhammer_multiplicativity() {
  using L = Laurent<QFrac>;
  std::vector<std::string> vars{"x"};
  L x = L::monomial(vars, {2}, QFrac(Rat(1)));
  QFrac q1 = QFrac::q_power(2);
  L q1c = L::constant(vars, q1);
  QFrac one(Rat(1));
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      // (x;q)_{a+b} = (x;q)_a (q^a x;q)_b
      L lhs = pochhammer(x, q1c, a + b, one);
      L rhs = pochhammer(x, q1c, a, one) *
              pochhammer(L::constant(vars, q1.pow(a)) * x, q1c, b, one);
      if (lhs != rhs) return false;
    }
  return true;
}

bool weyl_action_compatibility(std::mt19937& rng) {
  // (A * B) . P == A . (B . P) for the evaluation action at zeta_2r
  std::uniform_int_distribution<int> ed(-2, 2), cd(-3, 3);
  for (long r : {3L, 5L}) {
    const long m = 2 * r;
    for (int it = 0; it < 10; ++it) {
      auto rand_op = [&]() {
        WeylElement w(1, 0);
        for (int t = 0; t < 3; ++t)
          w.add_term({ed(rng), std::abs(ed(rng))},
                     QFrac::q_power(2 * ed(rng)) * QFrac(Rat(cd(rng))));
        return w;
      };
      WeylElement A = rand_op(), B = rand_op();
      LaurentC P(std::vector<std::string>{"x"});
      for (int t = 0; t < 4; ++t)
        P += LaurentC::monomial({"x"}, {2 * ed(rng)}, random_cyc(m, rng));
      if (act_on_laurent(A * B, P, r, m) !=
          act_on_laurent(A, act_on_laurent(B, P, r, m), r, m))
        return false;
    }
  }
  return true;
}

bool nullspace_exactness(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  for (int it = 0; it < 10; ++it) {
    int rows = 5, cols = 8;
    RatMatrix M(rows, RatRow(cols));
    for (auto& row : M)
      for (auto& e : row) {
        e = Rat(d(rng), 1 + std::abs(d(rng)));
        e.canonicalize();
      }
    auto K = nullspace(M);
    if (K.empty()) return false;  // 5 x 8 always has a kernel
    for (const auto& v : K)
      for (const auto& row : M) {
        Rat dot(0);
        for (int j = 0; j < cols; ++j) dot += row[j] * v[j];
        if (dot != 0) return false;
      }
  }
  return true;
}

bool arc_count_formula(std::mt19937& rng) {
  int built = 0;
  while (built < 50) {
    TangleProgram p = refdata::random_program(rng);
    TangleInfo info;
    if (!validate(p, &info).empty()) return false;
    if (info.arcs != 2 * info.crossings + info.closed_curves + 1) return false;
    ++built;
  }
  return true;
}

bool property_suites() {
  std::mt19937 rng(20240601);  // fixed default seed
  return field_axioms(rng) && pochhammer_multiplicativity() &&
         weyl_action_compatibility(rng) && nullspace_exactness(rng) &&
         arc_count_formula(rng);
}

}  // namespace

int main() {
  run(1, "ado-table-3_1", 30.0, table_3_1);
  run(2, "ado-table-5_2", 120.0, table_5_2);
  run(3, "ado-table-4_1-cross-oracle", 0.0, table_4_1);
  run(4, "colored-jones-values", 0.0, jones_values);
  run(5, "jones-recursions", 0.0, jones_recursions);
  run(6, "ado-recursions", 300.0, ado_recursions);
  run(7, "residue-relation", 0.0, residue_relation);
  run(8, "kashaev-points", 0.0, kashaev_points);
  run(9, "aj-limit", 0.0, aj_limit);
  run(10, "guesser-roundtrip", 300.0, guesser_roundtrip);
  run(11, "discrete-battery", 0.0, discrete_battery);
  run(12, "property-suites", 0.0, property_suites);
  std::printf("%s (%d/12)\n", failures == 0 ? "ALL PASS" : "FAILURES",
              12 - failures);
  return failures;
}
