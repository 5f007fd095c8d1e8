#pragma once

#include <map>

#include "ado/laurent.hpp"
#include "ado/qfrac.hpp"

namespace ado {

// Element of the q-Weyl algebra E_{n+m}: n pairs (x_i, y_i) acting on
// continuous variables and m hatted pairs (xh_j, yh_j) acting on discrete
// ones. Monomials are stored normal-ordered (all x-type factors to the left
// of all y-type factors) with exponent key layout
//   [xe_1..xe_n, xhe_1..xhe_m, ye_1..ye_n, yhe_1..yhe_m]
// and rational-in-q coefficients. The defining relations are
//   y_i x_i = q x_i y_i,  yh_j xh_j = q xh_j yh_j,
// with all other generator pairs commuting.
class WeylElement {
 public:
  using Key = std::vector<int>;

  WeylElement(int n, int nhat = 0) : n_(n), nhat_(nhat) {}

  static WeylElement zero(int n, int nhat = 0) { return WeylElement(n, nhat); }
  static WeylElement one(int n, int nhat = 0) {
    return term(n, nhat, Key(2 * (n + nhat), 0), QFrac(Rat(1)));
  }
  static WeylElement term(int n, int nhat, Key key, QFrac coeff);
  // generators within E_{n+m}; i is 0-based
  static WeylElement x(int n, int nhat, int i, int e = 1);
  static WeylElement y(int n, int nhat, int i, int e = 1);
  static WeylElement xhat(int n, int nhat, int j, int e = 1);
  static WeylElement yhat(int n, int nhat, int j, int e = 1);

  int pairs() const { return n_; }
  int hatted() const { return nhat_; }
  const std::map<Key, QFrac>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  // exponent accessors for a term key
  int xe(const Key& k, int i) const { return k[i]; }
  int xhe(const Key& k, int j) const { return k[n_ + j]; }
  int ye(const Key& k, int i) const { return k[n_ + nhat_ + i]; }
  int yhe(const Key& k, int j) const { return k[2 * n_ + nhat_ + j]; }

  void add_term(Key key, const QFrac& c);

  WeylElement operator-() const;
  WeylElement operator+(const WeylElement& o) const;
  WeylElement operator-(const WeylElement& o) const;
  WeylElement operator*(const WeylElement& o) const;  // normal-ordered product
  WeylElement operator*(const QFrac& s) const;
  WeylElement& operator+=(const WeylElement& o) { return *this = *this + o; }
  WeylElement& operator-=(const WeylElement& o) { return *this = *this - o; }
  WeylElement& operator*=(const WeylElement& o) { return *this = *this * o; }
  bool operator==(const WeylElement& o) const {
    return n_ == o.n_ && nhat_ == o.nhat_ && t_ == o.t_;
  }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

  WeylElement pow(long e) const;  // e >= 0

  int max_y_degree(int i) const;  // max over terms of ye_i
  int min_y_degree(int i) const;

  std::string to_string() const;

 private:
  void check(const WeylElement& o) const {
    if (n_ != o.n_ || nhat_ != o.nhat_)
      throw std::invalid_argument("Weyl arity mismatch");
  }
  int n_, nhat_;
  std::map<Key, QFrac> t_;
};

// A finite window of a q-series sequence N -> J_N(q).
struct SequenceFunction {
  std::map<long, QFrac> values;
};

// Symbolic action at q = zeta_{2r} on a Laurent polynomial over Q(zeta_m)
// (2r | m): x_i multiplies by x_i, y_i substitutes x_i -> zeta_{2r} x_i.
// A must have no hatted pairs and P must carry (at least) A's n variables,
// matched by position.
LaurentC act_on_laurent(const WeylElement& A, const LaurentC& P, long r, long m);

// Action on a sequence: x -> multiplication by q^N, y -> shift N -> N+1.
// Requires n = 1, nhat = 0. Throws std::out_of_range naming any index that
// falls outside the window of J.
QFrac act_on_sequence(const WeylElement& A, const SequenceFunction& J, long N);

// Table of rational-in-x values over a window of discrete points; values are
// unreduced fractions num/den of Laurent polynomials in the continuous
// variables (den must be nonzero).
struct DiscreteTable {
  struct Value {
    LaurentQ num, den;
  };
  std::vector<std::string> xvars;  // continuous variable names (n of them)
  std::map<std::vector<long>, Value> vals;
};

// Action on a discrete table:
//   (xh_j f)(a) = q^{a_j} f(a),  (yh_j f)(a) = f(a + e_j),
//   (x_i f)     = x_i f,         (y_i f)(x)  = f(..., q x_i, ...).
// The result is defined on the sub-window where every yh shift stays inside
// the input window; throws std::out_of_range if that sub-window is empty.
DiscreteTable act_discrete(const WeylElement& A, const DiscreteTable& f);

bool table_is_zero(const DiscreteTable& t);

// (B(x) y - B(qx)) * A for B a Laurent polynomial in one variable with
// integer exponents; A must have n = 1, nhat = 0.
WeylElement homogenize(const WeylElement& A, const LaurentQ& B);

// Substitute x_i -> c(q) x_i and y_i -> sign * y_i in every term (same scale
// for all pairs); c must be invertible (a nonzero monomial in practice).
WeylElement reparameterize(const WeylElement& A, const QFrac& c, int sign);

}  // namespace ado
