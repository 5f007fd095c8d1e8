#pragma once

#include <functional>
#include <map>
#include <string>

#include "ado/cyc.hpp"

namespace ado {

// Sparse univariate Laurent polynomial in q over Q. Exponents are stored
// doubled so that half-integer powers of q are exact.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(const Rat& c) {
    if (c != 0) t_[0] = c;
  }
  // c * q^(e2/2)
  static QPoly monomial(const Rat& c, int e2) {
    QPoly p;
    if (c != 0) p.t_[e2] = c;
    return p;
  }

  const std::map<int, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0);
  }
  int min_exp2() const { return t_.empty() ? 0 : t_.begin()->first; }
  int max_exp2() const { return t_.empty() ? 0 : t_.rbegin()->first; }

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  bool operator==(const QPoly& o) const { return t_ == o.t_; }

  void add_term(int e2, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(e2, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  // q -> q^s (exponent scaling by integer s, e.g. s=-2 realizes q -> q^-2)
  QPoly exponent_scale(int s) const;

  // Evaluate at q = zeta_{2r} inside Q(zeta_m); m must make every
  // (possibly half-integer) power land on the zeta_m grid.
  Cyc eval_root(long r, long m) const;
  Rat eval_one() const;

  std::string to_string() const;

 private:
  std::map<int, Rat> t_;  // doubled exponent -> nonzero coefficient
};

// Exact fraction of q-Laurent polynomials, reduced to coprime form with an
// integer-primitive, positive-leading, nonzero-constant-term denominator.
class QFrac {
 public:
  QFrac() : num_(), den_(Rat(1)) {}
  QFrac(const Rat& c) : num_(c), den_(Rat(1)) {}
  QFrac(QPoly num) : num_(std::move(num)), den_(Rat(1)) {}
  QFrac(QPoly num, QPoly den);

  static QFrac q_power(int e2) { return QFrac(QPoly::monomial(Rat(1), e2)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  QFrac operator-() const;
  QFrac operator+(const QFrac& o) const;
  QFrac operator-(const QFrac& o) const;
  QFrac operator*(const QFrac& o) const;
  QFrac operator/(const QFrac& o) const;
  QFrac& operator+=(const QFrac& o) { return *this = *this + o; }
  QFrac& operator-=(const QFrac& o) { return *this = *this - o; }
  QFrac& operator*=(const QFrac& o) { return *this = *this * o; }
  bool operator==(const QFrac& o) const;
  bool operator!=(const QFrac& o) const { return !(*this == o); }

  QFrac inv() const;
  QFrac pow(long e) const;
  QFrac operator*(const Rat& s) const { return *this * QFrac(s); }

  QFrac exponent_scale(int s) const {
    return QFrac(num_.exponent_scale(s), den_.exponent_scale(s));
  }

  // q = zeta_{2r} in Q(zeta_m); throws on a vanishing denominator
  // (evaluation pole), reporting r.
  Cyc eval_root(long r, long m) const;
  Rat eval_one() const;  // q = 1; throws on pole

  std::string to_string() const;
  static QFrac from_string(const std::string& s);

 private:
  void reduce();
  QPoly num_, den_;
};

// gcd over Q[q] of the underlying polynomials (unit-normalized, monic-free:
// integer-primitive with positive leading coefficient); Laurent units q^k
// are quotiented out.
QPoly qpoly_gcd(const QPoly& a, const QPoly& b);

}  // namespace ado
