#include <functional>
#include <random>

#include "ado/weyl.hpp"
#include "doctest.h"

using namespace ado;

namespace {

// one continuous pair shortcuts
WeylElement X(int e = 1) { return WeylElement::x(1, 0, 0, e); }
WeylElement Y(int e = 1) { return WeylElement::y(1, 0, 0, e); }
WeylElement One() { return WeylElement::one(1, 0); }
QFrac qp(int e2) { return QFrac::q_power(e2); }

LaurentC cx_mono(int e2, Cyc c) {
  return LaurentC::monomial({"x"}, {e2}, std::move(c));
}

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

DiscreteTable::Value scalar_value(const std::vector<std::string>& xvars, QFrac v) {
  return {LaurentQ::constant(xvars, std::move(v)),
          LaurentQ::constant(xvars, QFrac(Rat(1)))};
}

void check_annihilates(const WeylElement& op, const DiscreteTable& tab) {
  INFO("operator: ", op.to_string());
  DiscreteTable r = act_discrete(op, tab);
  CHECK(!r.vals.empty());
  CHECK(table_is_zero(r));
}

// q-Pochhammer (x;q^step2)_a per the zero-at-negative convention, as a value
// over the single continuous variable x.
DiscreteTable::Value pochhammer_value(long a, int step2) {
  std::vector<std::string> xv{"x"};
  LaurentQ one = LaurentQ::constant(xv, QFrac(Rat(1)));
  if (a < 0) return {LaurentQ(xv), one};
  LaurentQ num = one;
  for (long k = 0; k < a; ++k)
    num *= one - LaurentQ::monomial(xv, {2}, QFrac::q_power((int)(2 * k * step2 / 2)));
  return {num, one};
}

}  // namespace

TEST_CASE("Weyl multiplication: defining relations") {
  CHECK(Y() * X() == WeylElement::term(1, 0, {1, 1}, qp(2)));
  CHECK(Y(2) * X() == WeylElement::term(1, 0, {1, 2}, qp(4)));
  CHECK(X() * Y() == WeylElement::term(1, 0, {1, 1}, QFrac(Rat(1))));
  // negative powers: y^{-1} x = q^{-1} x y^{-1}
  CHECK(Y(-1) * X() == WeylElement::term(1, 0, {1, -1}, qp(-2)));
  // distinct pairs commute
  WeylElement y1x2 = WeylElement::y(2, 0, 0) * WeylElement::x(2, 0, 1);
  WeylElement x2y1 = WeylElement::x(2, 0, 1) * WeylElement::y(2, 0, 0);
  CHECK(y1x2 == x2y1);
  // hatted pair obeys the same relation
  WeylElement yh_xh = WeylElement::yhat(0, 1, 0) * WeylElement::xhat(0, 1, 0);
  CHECK(yh_xh == WeylElement::term(0, 1, {1, 1}, qp(2)));
}

TEST_CASE("Weyl multiplication: associativity on random elements") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> de(-2, 2), dc(-3, 3);
  auto rnd = [&]() {
    WeylElement a = WeylElement::zero(1, 0);
    for (int t = 0; t < 3; ++t)
      a.add_term({de(rng), de(rng)}, QFrac(Rat(dc(rng))) * qp(2 * de(rng)));
    return a;
  };
  for (int trial = 0; trial < 10; ++trial) {
    WeylElement a = rnd(), b = rnd(), c = rnd();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("act_on_laurent") {
  const long r = 2, m = 4;
  Cyc i4 = Cyc::root_power(4, 1);
  LaurentC x3 = cx_mono(6, Cyc::one(4));
  // y: x^3 -> zeta_4^3 x^3 = -zeta_4 x^3
  CHECK(act_on_laurent(Y(), x3, r, m) == cx_mono(6, -i4));
  // q^3 x^6 y applied to -(x^3 - x^{-3}) gives x^9 + x^3
  WeylElement A = WeylElement::term(1, 0, {6, 1}, qp(6));
  LaurentC P = cx_mono(6, -Cyc::one(4)) + cx_mono(-6, Cyc::one(4));
  CHECK(act_on_laurent(A, P, r, m) ==
        cx_mono(18, Cyc::one(4)) + cx_mono(6, Cyc::one(4)));
  // identity acts trivially
  CHECK(act_on_laurent(One(), P, r, m) == P);

  // composition = action of product; q-commutation shows up as zeta factor
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> de(-2, 2), dc(-3, 3);
  for (long rr : {2L, 3L, 5L}) {
    long mm = 2 * rr;
    LaurentC Q(std::vector<std::string>{"x"});
    for (int k = -2; k <= 2; ++k)
      Q += LaurentC::monomial({"x"}, {2 * k}, Cyc(mm, Rat(dc(rng))));
    WeylElement A1 = WeylElement::zero(1, 0), B1 = WeylElement::zero(1, 0);
    for (int t = 0; t < 3; ++t) {
      A1.add_term({de(rng), de(rng)}, qp(2 * de(rng)) * QFrac(Rat(dc(rng))));
      B1.add_term({de(rng), de(rng)}, qp(2 * de(rng)) * QFrac(Rat(dc(rng))));
    }
    CHECK(act_on_laurent(A1 * B1, Q, rr, mm) ==
          act_on_laurent(A1, act_on_laurent(B1, Q, rr, mm), rr, mm));
    LaurentC lhs = act_on_laurent(Y() * X(), Q, rr, mm);
    LaurentC rhs = act_on_laurent(X() * Y(), Q, rr, mm) *
                   Cyc::root_power(mm, 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("act_on_sequence") {
  SequenceFunction J;
  for (long N = -2; N <= 8; ++N) J.values[N] = QFrac(Rat(1));
  CHECK(act_on_sequence(Y() - One(), J, 3).is_zero());
  SequenceFunction K;
  for (long N = -2; N <= 8; ++N) K.values[N] = qp(2 * (int)N) + QFrac(Rat(N));
  for (long N : {0L, 2L, 5L})
    CHECK(act_on_sequence(X(), K, N) == qp(2 * (int)N) * K.values[N]);
  // window underflow is reported with the missing index
  CHECK_THROWS_AS(act_on_sequence(Y(3), K, 7), std::out_of_range);
}

TEST_CASE("homogenize") {
  // homogenize(1, B=x) = x y - q x
  LaurentQ B = LaurentQ::monomial({"x"}, {2}, QFrac(Rat(1)));
  WeylElement H = homogenize(One(), B);
  WeylElement expect =
      WeylElement::term(1, 0, {1, 1}, QFrac(Rat(1))) - (X() * qp(2));
  CHECK(H == expect);
}

TEST_CASE("reparameterize") {
  WeylElement xy = X() * Y();
  WeylElement r1 = reparameterize(xy, qp(-2), -1);
  CHECK(r1 == xy * (-qp(-2)));
  // inverse data restores the original on a random element
  std::mt19937 rng(808);
  std::uniform_int_distribution<int> de(-2, 2), dc(-3, 3);
  WeylElement a = WeylElement::zero(1, 0);
  for (int t = 0; t < 4; ++t)
    a.add_term({de(rng), de(rng)}, QFrac(Rat(dc(rng))) * qp(2 * de(rng)));
  CHECK(reparameterize(reparameterize(a, qp(-2), -1), qp(2), -1) == a);
  // automorphism: multiplicative on samples
  WeylElement b = X(2) * Y(-1) + Y() * qp(4);
  CHECK(reparameterize(a * b, qp(2), -1) ==
        reparameterize(a, qp(2), -1) * reparameterize(b, qp(2), -1));
}

TEST_CASE("discrete battery: constants and deltas") {
  std::vector<std::string> none;
  // constant function of two discrete variables: yh_j - 1 annihilate
  auto ctab = make_table(none, {{-4, 4}, {-4, 4}}, [&](const std::vector<long>&) {
    return scalar_value(none, QFrac(Rat(1)));
  });
  for (int j = 0; j < 2; ++j)
    check_annihilates(WeylElement::yhat(0, 2, j) - WeylElement::one(0, 2), ctab);

  // delta_{a,0}: annihilated by xh - 1
  auto dtab = make_table(none, {{-5, 5}}, [&](const std::vector<long>& a) {
    return scalar_value(none, QFrac(Rat(a[0] == 0 ? 1 : 0)));
  });
  check_annihilates(WeylElement::xhat(0, 1, 0) - WeylElement::one(0, 1), dtab);
}

TEST_CASE("discrete battery: indicator functions") {
  std::vector<std::string> none;
  auto one01 = [&](bool cond) { return scalar_value(none, QFrac(Rat(cond ? 1 : 0))); };
  // theta_{[a2,a3]}(a1) on a window of width >= 8 in each variable
  auto theta = make_table(none, {{-4, 4}, {-4, 4}, {-4, 4}},
                          [&](const std::vector<long>& a) {
                            return one01(a[1] <= a[0] && a[0] <= a[2]);
                          });
  const int M = 3;
  auto xh = [&](int j) { return WeylElement::xhat(0, M, j); };
  auto yh = [&](int j) { return WeylElement::yhat(0, M, j); };
  auto id = WeylElement::one(0, M);
  auto q1 = [&](int e2) { return id * QFrac::q_power(e2); };
  check_annihilates((xh(0) - xh(2) * qp(2)) * (yh(2) - id), theta);
  check_annihilates((xh(0) - xh(1)) * (yh(1) - id), theta);
  check_annihilates((xh(0) - xh(2)) * (xh(0) - xh(1) * qp(-2)) * (yh(0) - id),
                    theta);
  (void)q1;

  // half-infinite indicator theta_{a1 <= a2}
  auto half = make_table(none, {{-4, 4}, {-4, 4}}, [&](const std::vector<long>& a) {
    return one01(a[0] <= a[1]);
  });
  auto xh2 = [&](int j) { return WeylElement::xhat(0, 2, j); };
  auto yh2 = [&](int j) { return WeylElement::yhat(0, 2, j); };
  auto id2 = WeylElement::one(0, 2);
  check_annihilates((xh2(1) - xh2(0) * qp(-2)) * (yh2(1) - id2), half);
  check_annihilates((xh2(1) - xh2(0)) * (yh2(0) - id2), half);
}

TEST_CASE("discrete battery: linear exponentials") {
  std::vector<std::string> none, xv{"x"};
  // f(a) = q^a: annihilated by yh - q
  auto f = make_table(none, {{-4, 4}}, [&](const std::vector<long>& a) {
    return scalar_value(none, QFrac::q_power((int)(2 * a[0])));
  });
  check_annihilates(WeylElement::yhat(0, 1, 0) - WeylElement::one(0, 1) * qp(2), f);

  // general q^{Ah a/2} x^{A/2} in V_{1,1}; try even and odd data
  for (int Ah : {2, 3})
    for (int A : {4, 5}) {
      auto g = make_table(xv, {{-4, 4}}, [&](const std::vector<long>& a) {
        return DiscreteTable::Value{
            LaurentQ::monomial(xv, {A}, QFrac::q_power((int)(Ah * a[0]))),
            LaurentQ::constant(xv, QFrac(Rat(1)))};
      });
      WeylElement ygen =
          (A % 2 == 0)
              ? WeylElement::y(1, 1, 0) - WeylElement::one(1, 1) * qp(A)
              : WeylElement::y(1, 1, 0, 2) - WeylElement::one(1, 1) * qp(2 * A);
      WeylElement yhgen =
          (Ah % 2 == 0)
              ? WeylElement::yhat(1, 1, 0) - WeylElement::one(1, 1) * qp(Ah)
              : WeylElement::yhat(1, 1, 0, 2) - WeylElement::one(1, 1) * qp(2 * Ah);
      check_annihilates(ygen, g);
      check_annihilates(yhgen, g);
    }
}

TEST_CASE("discrete battery: quadratic exponentials") {
  std::vector<std::string> none, xv{"x"};
  // q^{a^2}: yh - q xh^2
  auto f = make_table(none, {{-4, 4}}, [&](const std::vector<long>& a) {
    return scalar_value(none, QFrac::q_power((int)(2 * a[0] * a[0])));
  });
  check_annihilates(
      WeylElement::yhat(0, 1, 0) - WeylElement::xhat(0, 1, 0, 2) * qp(2), f);
  // q^{a^2/2}: yh^2 - q^2 xh^2
  auto g = make_table(none, {{-4, 4}}, [&](const std::vector<long>& a) {
    return scalar_value(none, QFrac::q_power((int)(a[0] * a[0])));
  });
  check_annihilates(
      WeylElement::yhat(0, 1, 0, 2) - WeylElement::xhat(0, 1, 0, 2) * qp(4), g);
  // mixed x^a in V_{1,1}: y - xh and yh - x
  auto h = make_table(xv, {{-4, 4}}, [&](const std::vector<long>& a) {
    return DiscreteTable::Value{
        LaurentQ::monomial(xv, {(int)(2 * a[0])}, QFrac(Rat(1))),
        LaurentQ::constant(xv, QFrac(Rat(1)))};
  });
  check_annihilates(WeylElement::y(1, 1, 0) - WeylElement::xhat(1, 1, 0), h);
  check_annihilates(WeylElement::yhat(1, 1, 0) - WeylElement::x(1, 1, 0), h);
}

TEST_CASE("discrete battery: q-factorials") {
  std::vector<std::string> none, xv{"x"};
  auto id11 = WeylElement::one(1, 1);
  auto x11 = WeylElement::x(1, 1, 0);
  auto y11 = WeylElement::y(1, 1, 0);
  auto xh11 = [&](int e) { return WeylElement::xhat(1, 1, 0, e); };
  auto yh11 = WeylElement::yhat(1, 1, 0);

  // (x;q)_a: (xh - q^{-1})(yh + xh x - 1) and (1-x)y + xh x - 1
  auto poch1 = make_table(xv, {{-4, 8}}, [&](const std::vector<long>& a) {
    return pochhammer_value(a[0], 2);
  });
  check_annihilates((xh11(1) - id11 * qp(-2)) * (yh11 + xh11(1) * x11 - id11),
                    poch1);
  check_annihilates((id11 - x11) * y11 + xh11(1) * x11 - id11, poch1);

  // (x;q^2)_a: (xh - q^{-1})(yh + xh^2 x - 1) and (1-x)y^2 + xh^2 x - 1
  // (the q^2 ladder needs two steps of x -> qx on the continuous side)
  auto poch2 = make_table(xv, {{-4, 8}}, [&](const std::vector<long>& a) {
    return pochhammer_value(a[0], 4);
  });
  check_annihilates((xh11(1) - id11 * qp(-2)) * (yh11 + xh11(2) * x11 - id11),
                    poch2);
  check_annihilates((id11 - x11) * WeylElement::y(1, 1, 0, 2) + xh11(2) * x11 - id11,
                    poch2);

  // (q^{a2};q^2)_{a1} in V_{0,2}
  auto pochq = make_table(none, {{-2, 8}, {-4, 4}}, [&](const std::vector<long>& a) {
    // substitute x -> q^{a2} inside (x;q^2)_{a1}
    if (a[0] < 0) return scalar_value(none, QFrac(Rat(0)));
    QFrac v(Rat(1));
    for (long k = 0; k < a[0]; ++k)
      v *= QFrac(Rat(1)) - QFrac::q_power((int)(2 * a[1] + 4 * k));
    return scalar_value(none, v);
  });
  auto xq = [&](int j, int e) { return WeylElement::xhat(0, 2, j, e); };
  auto yq = [&](int j) { return WeylElement::yhat(0, 2, j); };
  auto idq = WeylElement::one(0, 2);
  check_annihilates((xq(0, 1) - idq * qp(-2)) * (yq(0) + xq(0, 2) * xq(1, 1) - idq),
                    pochq);
  check_annihilates(
      (idq - xq(1, 1)) * WeylElement::yhat(0, 2, 1, 2) + xq(0, 2) * xq(1, 1) - idq,
      pochq);

  // 1/(x;q^2)_a on a >= 0: (xh - q^{-1})((1 - xh^2 x) yh - 1), (1 - xh^2 x)y + x - 1
  auto rpoch = make_table(xv, {{0, 8}}, [&](const std::vector<long>& a) {
    auto p = pochhammer_value(a[0], 4);
    return DiscreteTable::Value{p.den, p.num};
  });
  check_annihilates((xh11(1) - id11 * qp(-2)) * ((id11 - xh11(2) * x11) * yh11 - id11),
                    rpoch);
  check_annihilates(
      (id11 - xh11(2) * x11) * WeylElement::y(1, 1, 0, 2) + x11 - id11, rpoch);

  // 1/(q^2;q^2)_a on a >= 0: (xh - q^{-1})((1 - q^2 xh^2) yh - 1)
  auto rq = make_table(none, {{0, 8}}, [&](const std::vector<long>& a) {
    QFrac v(Rat(1));
    for (long k = 1; k <= a[0]; ++k)
      v *= (QFrac(Rat(1)) - QFrac::q_power((int)(4 * k))).inv();
    return scalar_value(none, v);
  });
  auto xh01 = [&](int e) { return WeylElement::xhat(0, 1, 0, e); };
  auto yh01 = WeylElement::yhat(0, 1, 0);
  auto id01 = WeylElement::one(0, 1);
  check_annihilates((xh01(1) - id01 * qp(-2)) * ((id01 - xh01(2) * qp(4)) * yh01 - id01),
                    rq);
}
