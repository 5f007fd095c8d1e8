#include "ado/cyc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace ado {

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

long euler_phi(long m) {
  long result = m, n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact division of monic-divisor polynomials over Z; both ascending.
// Returns quotient, requires exact divisibility.
std::vector<Int> exact_poly_div(std::vector<Int> num, const std::vector<Int>& den) {
  if (den.empty() || den.back() != 1)
    throw std::logic_error("exact_poly_div: divisor must be monic");
  if (num.size() < den.size()) {
    for (const auto& c : num)
      if (c != 0) throw std::logic_error("exact_poly_div: not divisible");
    return {Int(0)};
  }
  std::vector<Int> q(num.size() - den.size() + 1, Int(0));
  for (long k = (long)q.size() - 1; k >= 0; --k) {
    Int coef = num[k + den.size() - 1];
    q[k] = coef;
    if (coef == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[k + j] -= coef * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("exact_poly_div: not divisible");
  return q;
}

std::vector<Int> compute_cyclotomic(long m) {
  // Phi_m = (z^m - 1) / prod_{d|m, d<m} Phi_d
  std::vector<Int> num(m + 1, Int(0));
  num[0] = -1;
  num[m] = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = exact_poly_div(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

struct ConductorTable {
  long phi;
  std::vector<Int> phi_poly;             // monic, size phi+1
  std::vector<std::vector<Int>> reduce;  // reduce[k] = z^{phi+k} in basis, k=0..phi-2
};

std::mutex g_table_mutex;
std::map<long, std::vector<Int>> g_phi_polys;
std::map<long, ConductorTable> g_tables;

const ConductorTable& table_for(long m) {
  // Fetch Phi_m first: cyclotomic_polynomial takes g_table_mutex itself.
  const auto& phi_poly = cyclotomic_polynomial(m);
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto it = g_tables.find(m);
  if (it != g_tables.end()) return it->second;
  ConductorTable t;
  t.phi_poly = phi_poly;
  t.phi = (long)t.phi_poly.size() - 1;
  // z^phi = -(lower part of Phi); z^{phi+k} computed iteratively.
  std::vector<Int> cur(t.phi);  // coordinates of z^{phi+k-?}: start with z^phi
  for (long j = 0; j < t.phi; ++j) cur[j] = -t.phi_poly[j];
  t.reduce.push_back(cur);
  for (long k = 1; k <= t.phi - 2; ++k) {
    // multiply cur by z, reduce the overflow term via reduce[0]
    std::vector<Int> nxt(t.phi, Int(0));
    for (long j = 0; j + 1 < t.phi; ++j) nxt[j + 1] = cur[j];
    const Int top = cur[t.phi - 1];
    if (top != 0)
      for (long j = 0; j < t.phi; ++j) nxt[j] += top * t.reduce[0][j];
    t.reduce.push_back(nxt);
    cur = std::move(nxt);
  }
  return g_tables.emplace(m, std::move(t)).first->second;
}

// Reduce an arbitrary-degree dense rational polynomial mod Phi_m.
std::vector<Rat> reduce_mod_phi(std::vector<Rat> v, long m) {
  const auto& t = table_for(m);
  const long phi = t.phi;
  if ((long)v.size() > 2 * phi - 1) {
    // long division by monic Phi
    for (long k = (long)v.size() - 1; k >= phi; --k) {
      Rat coef = v[k];
      if (coef == 0) continue;
      v[k] = 0;
      for (long j = 0; j <= phi; ++j) {
        Rat d(t.phi_poly[j]);
        v[k - phi + j] -= coef * d;
      }
    }
  } else {
    for (long k = (long)v.size() - 1; k >= phi; --k) {
      Rat coef = v[k];
      if (coef == 0) continue;
      v[k] = 0;
      const auto& row = t.reduce[k - phi];
      for (long j = 0; j < phi; ++j) v[j] += coef * Rat(row[j]);
    }
  }
  v.resize(phi);
  return v;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m >= 1");
  {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = g_phi_polys.find(m);
    if (it != g_phi_polys.end()) return it->second;
  }
  auto poly = compute_cyclotomic(m);
  std::lock_guard<std::mutex> lock(g_table_mutex);
  return g_phi_polys.emplace(m, std::move(poly)).first->second;
}

Cyc::Cyc(long m, const Rat& value) : m_(m), c_(euler_phi(m), Rat(0)) {
  check_m();
  c_[0] = value;
}

Cyc Cyc::root_power(long m, long e) {
  e %= m;
  if (e < 0) e += m;
  std::vector<Rat> v(e + 1, Rat(0));
  v[e] = 1;
  return from_coeffs(m, reduce_mod_phi(std::move(v), m));
}

Cyc Cyc::from_coeffs(long m, std::vector<Rat> coeffs) {
  if ((long)coeffs.size() != euler_phi(m))
    throw std::invalid_argument("from_coeffs: wrong length");
  Cyc a(m);
  a.c_ = std::move(coeffs);
  return a;
}

bool Cyc::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool Cyc::is_rational() const {
  for (size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return false;
  return true;
}

Rat Cyc::rational_value() const {
  if (!is_rational()) throw std::domain_error("not rational: " + to_string());
  return c_[0];
}

Cyc Cyc::operator-() const {
  Cyc r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc Cyc::operator+(const Cyc& o) const {
  if (m_ != o.m_) throw std::invalid_argument("conductor mismatch in +");
  Cyc r(*this);
  for (size_t j = 0; j < c_.size(); ++j) r.c_[j] += o.c_[j];
  return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
  if (m_ != o.m_) throw std::invalid_argument("conductor mismatch in -");
  Cyc r(*this);
  for (size_t j = 0; j < c_.size(); ++j) r.c_[j] -= o.c_[j];
  return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
  if (m_ != o.m_) throw std::invalid_argument("conductor mismatch in *");
  const long phi = (long)c_.size();
  std::vector<Rat> prod(2 * phi - 1, Rat(0));
  for (long i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (long j = 0; j < phi; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  return from_coeffs(m_, reduce_mod_phi(std::move(prod), m_));
}

Cyc Cyc::operator*(const Rat& s) const {
  Cyc r(*this);
  for (auto& x : r.c_) x *= s;
  return r;
}

bool Cyc::operator==(const Cyc& o) const { return m_ == o.m_ && c_ == o.c_; }

Cyc Cyc::inv() const {
  if (is_zero()) throw std::domain_error("cyclotomic division by zero");
  const long phi = (long)c_.size();
  if (is_rational()) return Cyc(m_, Rat(1) / c_[0]);
  // Solve (mult-by-a) x = 1. Columns of M are a * z^j reduced.
  std::vector<std::vector<Rat>> M(phi, std::vector<Rat>(phi + 1, Rat(0)));
  for (long j = 0; j < phi; ++j) {
    std::vector<Rat> col(phi + j, Rat(0));
    for (long i = 0; i < phi; ++i) col[i + j] = c_[i];
    col = reduce_mod_phi(std::move(col), m_);
    for (long i = 0; i < phi; ++i) M[i][j] = col[i];
  }
  M[0][phi] = 1;  // rhs e0
  // Gaussian elimination with partial (first nonzero) pivoting.
  std::vector<long> where(phi, -1);
  long row = 0;
  for (long col = 0; col < phi && row < phi; ++col) {
    long piv = -1;
    for (long i = row; i < phi; ++i)
      if (M[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(M[piv], M[row]);
    Rat d = M[row][col];
    for (long j = col; j <= phi; ++j) M[row][j] /= d;
    for (long i = 0; i < phi; ++i) {
      if (i == row || M[i][col] == 0) continue;
      Rat f = M[i][col];
      for (long j = col; j <= phi; ++j) M[i][j] -= f * M[row][j];
    }
    where[col] = row++;
  }
  std::vector<Rat> x(phi, Rat(0));
  for (long col = 0; col < phi; ++col)
    if (where[col] >= 0) x[col] = M[where[col]][phi];
  Cyc r = from_coeffs(m_, std::move(x));
  if (!((*this) * r == one(m_)))
    throw std::logic_error("inv: verification failed (singular multiplication matrix?)");
  return r;
}

Cyc Cyc::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Cyc base(*this), acc = one(m_);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Cyc Cyc::embed(long m2) const {
  if (m2 % m_ != 0)
    throw std::invalid_argument("embed: conductor " + std::to_string(m_) +
                                " does not divide " + std::to_string(m2));
  if (m2 == m_) return *this;
  const long k = m2 / m_;
  std::vector<Rat> v((c_.size() - 1) * k + 1, Rat(0));
  for (size_t j = 0; j < c_.size(); ++j) v[j * k] = c_[j];
  return from_coeffs(m2, reduce_mod_phi(std::move(v), m2));
}

std::complex<double> Cyc::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  const double two_pi = 2.0 * std::numbers::pi;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    double arg = two_pi * (double)j / (double)m_;
    acc += c_[j].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return acc;
}

std::string Cyc::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    if (!first) os << " + ";
    os << c_[j].get_str();
    if (j > 0) os << "*z" << m_ << "^" << j;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace ado
