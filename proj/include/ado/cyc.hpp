#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ado {

using Int = mpz_class;
using Rat = mpq_class;

// Parse "p/q" (or "p") into a canonical rational.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

long euler_phi(long m);

// Monic m-th cyclotomic polynomial, ascending integer coefficients,
// size phi(m)+1.
const std::vector<Int>& cyclotomic_polynomial(long m);

// Element of Q(zeta_m) in the power basis 1, z, ..., z^{phi(m)-1},
// reduced mod Phi_m. Fixed-conductor arithmetic: mixed-conductor
// operations require an explicit embed().
class Cyc {
 public:
  Cyc() : m_(1), c_(1, Rat(0)) {}  // zero at conductor 1
  explicit Cyc(long m) : m_(m), c_(euler_phi(m), Rat(0)) { check_m(); }
  Cyc(long m, const Rat& value);

  static Cyc zero(long m) { return Cyc(m); }
  static Cyc one(long m) { return Cyc(m, Rat(1)); }
  // zeta_m^e (e arbitrary, reduced mod m)
  static Cyc root_power(long m, long e);
  // from power-basis coefficients (length phi(m))
  static Cyc from_coeffs(long m, std::vector<Rat> coeffs);

  long conductor() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // requires is_rational()

  Cyc operator-() const;
  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
  Cyc operator*(const Rat& s) const;
  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  // Multiplicative inverse by linear solve against the multiplication
  // matrix; throws std::domain_error on zero.
  Cyc inv() const;
  Cyc pow(long e) const;

  // Ring homomorphism into Q(zeta_{m2}), zeta_m -> zeta_{m2}^{m2/m};
  // requires m | m2.
  Cyc embed(long m2) const;

  // Numerical image under zeta_m -> exp(2*pi*i/m).
  std::complex<double> to_complex() const;

  std::string to_string() const;

 private:
  void check_m() const {
    if (m_ < 1) throw std::invalid_argument("conductor must be >= 1");
  }
  long m_;
  std::vector<Rat> c_;  // length phi(m_)
};

inline Cyc operator*(const Rat& s, const Cyc& a) { return a * s; }

}  // namespace ado
