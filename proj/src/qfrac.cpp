#include "ado/qfrac.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <vector>

namespace ado {

QPoly QPoly::operator-() const {
  QPoly r;
  for (const auto& [e, c] : t_) r.t_[e] = -c;
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r(*this);
  for (const auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
  QPoly r(*this);
  for (const auto& [e, c] : o.t_) r.add_term(e, -c);
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  QPoly r;
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

QPoly QPoly::exponent_scale(int s) const {
  QPoly r;
  for (const auto& [e, c] : t_) r.add_term(e * s, c);
  return r;
}

Cyc QPoly::eval_root(long r, long m) const {
  Cyc acc = Cyc::zero(m);
  for (const auto& [e2, c] : t_) {
    long num = (long)e2 * m;
    if (num % (4 * r) != 0)
      throw std::domain_error("q-power q^(" + std::to_string(e2) +
                              "/2) does not land in Q(zeta_" + std::to_string(m) + ")");
    acc += Cyc::root_power(m, num / (4 * r)) * c;
  }
  return acc;
}

Rat QPoly::eval_one() const {
  Rat acc(0);
  for (const auto& [e, c] : t_) acc += c;
  return acc;
}

std::string QPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    Rat c = it->second;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      os << "-";
      c = -c;
    }
    const int e2 = it->first;
    if (e2 == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << "q";
      if (e2 != 2) {
        os << "^";
        if (e2 % 2 == 0)
          os << e2 / 2;
        else
          os << "(" << e2 << "/2)";
      }
    }
    first = false;
  }
  return os.str();
}

namespace {

// dense ascending coefficients over the shifted (min exponent 0) support,
// on the doubled-exponent grid divided by its gcd step
struct Dense {
  std::vector<Rat> c;
  int shift;  // doubled exponent of c[0]
  int step;   // doubled-exponent stride between consecutive entries
};

Dense to_dense(const QPoly& p, int step) {
  Dense d;
  d.step = step;
  d.shift = p.min_exp2();
  d.c.assign((p.max_exp2() - d.shift) / step + 1, Rat(0));
  for (const auto& [e, coef] : p.terms()) d.c[(e - d.shift) / step] = coef;
  return d;
}

QPoly from_dense(const std::vector<Rat>& c, int shift, int step) {
  QPoly p;
  for (size_t i = 0; i < c.size(); ++i)
    p.add_term(shift + (int)i * step, c[i]);
  return p;
}

void trim(std::vector<Rat>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// primitive integer form with positive leading coefficient
std::vector<Rat> make_primitive(std::vector<Rat> v) {
  trim(v);
  if (v.empty()) return v;
  Int lcm_den(1), gcd_num(0);
  for (const auto& r : v) {
    if (r == 0) continue;
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), r.get_den().get_mpz_t());
  }
  for (auto& r : v) r *= Rat(lcm_den);
  for (const auto& r : v) {
    if (r == 0) continue;
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), r.get_num().get_mpz_t());
  }
  if (gcd_num == 0) gcd_num = 1;
  Rat scale = Rat(gcd_num);
  if (v.back() < 0) scale = -scale;
  for (auto& r : v) {
    r /= scale;
    r.canonicalize();
  }
  return v;
}

std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
    trim(a);
    if (a.empty()) break;
    if (a.size() >= b.size() && a.back() == 0) trim(a);
  }
  return a;
}

int common_step(const QPoly& a, const QPoly& b) {
  // gcd of all exponent gaps from the respective minima, so densification
  // stays small for sparse even/odd-graded inputs
  auto gcd_gaps = [](const QPoly& p, int g) {
    int lo = p.min_exp2();
    for (const auto& [e, c] : p.terms()) g = (int)std::gcd((long)g, (long)(e - lo));
    return g;
  };
  int g = 0;
  g = gcd_gaps(a, g);
  g = gcd_gaps(b, g);
  return g == 0 ? 1 : g;
}

}  // namespace

QPoly qpoly_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int step = common_step(a, b);
  std::vector<Rat> x = to_dense(a, step).c, y = to_dense(b, step).c;
  trim(x);
  trim(y);
  while (!y.empty()) {
    auto r = poly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return from_dense(make_primitive(std::move(x)), 0, step);
}

QFrac::QFrac(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QFrac: zero denominator");
  reduce();
}

void QFrac::reduce() {
  if (num_.is_zero()) {
    den_ = QPoly(Rat(1));
    return;
  }
  QPoly g = qpoly_gcd(num_, den_);
  if (!(g.terms().size() == 1 && g.min_exp2() == 0 && g.terms().begin()->second == 1)) {
    // exact division by the gcd (dense long division, remainder must vanish)
    const int step = common_step(num_ + den_, g);
    auto divide = [&](const QPoly& p) {
      Dense dp = to_dense(p, step), dg = to_dense(g, step);
      std::vector<Rat> q(dp.c.size() - dg.c.size() + 1, Rat(0));
      std::vector<Rat> rem = dp.c;
      for (long k = (long)q.size() - 1; k >= 0; --k) {
        q[k] = rem[k + dg.c.size() - 1] / dg.c.back();
        if (q[k] == 0) continue;
        for (size_t j = 0; j < dg.c.size(); ++j) rem[k + j] -= q[k] * dg.c[j];
      }
      for (const auto& r : rem)
        if (r != 0) throw std::logic_error("QFrac reduce: gcd does not divide");
      return from_dense(q, dp.shift - dg.shift, step);
    };
    num_ = divide(num_);
    den_ = divide(den_);
  }
  // shift denominator to constant-term form, absorb the unit into num
  int s = den_.min_exp2();
  if (s != 0) {
    den_ = den_.exponent_scale(1);  // copy
    QPoly shifted;
    for (const auto& [e, c] : den_.terms()) shifted.add_term(e - s, c);
    den_ = shifted;
    QPoly n2;
    for (const auto& [e, c] : num_.terms()) n2.add_term(e - s, c);
    num_ = n2;
  }
  // primitive positive-leading denominator
  Dense dd = to_dense(den_, common_step(den_, den_));
  auto before = dd.c;
  auto prim = make_primitive(dd.c);
  if (!prim.empty()) {
    // scale factor = before.back()/prim.back()
    Rat f = before.back() / prim.back();
    den_ = from_dense(prim, dd.shift, dd.step);
    QPoly n2;
    for (const auto& [e, c] : num_.terms()) n2.add_term(e, c / f);
    num_ = n2;
  }
}

QFrac QFrac::operator-() const {
  QFrac r(*this);
  r.num_ = -r.num_;
  return r;
}

QFrac QFrac::operator+(const QFrac& o) const {
  return QFrac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QFrac QFrac::operator-(const QFrac& o) const {
  return QFrac(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QFrac QFrac::operator*(const QFrac& o) const {
  return QFrac(num_ * o.num_, den_ * o.den_);
}

QFrac QFrac::operator/(const QFrac& o) const {
  if (o.is_zero()) throw std::domain_error("QFrac division by zero");
  return QFrac(num_ * o.den_, den_ * o.num_);
}

bool QFrac::operator==(const QFrac& o) const {
  return (num_ * o.den_) == (o.num_ * den_);
}

QFrac QFrac::inv() const {
  if (is_zero()) throw std::domain_error("QFrac inversion of zero");
  return QFrac(den_, num_);
}

QFrac QFrac::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  QFrac acc(Rat(1)), base(*this);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Cyc QFrac::eval_root(long r, long m) const {
  Cyc d = den_.eval_root(r, m);
  if (d.is_zero())
    throw std::domain_error("evaluation pole at q = zeta_" + std::to_string(2 * r) +
                            " (r=" + std::to_string(r) + "): " + den_.to_string());
  return num_.eval_root(r, m) * d.inv();
}

Rat QFrac::eval_one() const {
  Rat d = den_.eval_one();
  if (d == 0) throw std::domain_error("evaluation pole at q = 1: " + den_.to_string());
  return num_.eval_one() / d;
}

std::string QFrac::to_string() const {
  if (is_polynomial()) {
    Rat d = den_.terms().empty() ? Rat(1) : den_.terms().begin()->second;
    if (d == 1) return num_.to_string();
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

// Minimal parser for "p(q)" and "p(q)/q(q)" with terms like
// "-3*q^2", "q^-1", "5/7", "q^(1/2)" (half powers via (e/2)).
struct Parser {
  const std::string& s;
  size_t i = 0;
  explicit Parser(const std::string& str) : s(str) {}
  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  long integer() {
    skip();
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    size_t k = j;
    while (k < s.size() && std::isdigit((unsigned char)s[k])) ++k;
    if (k == j) throw std::invalid_argument("expected integer in: " + s);
    long v = std::stol(s.substr(i, k - i));
    i = k;
    return v;
  }
  // exponent: integer, or (a/2)
  int exponent2() {
    if (eat('(')) {
      long a = integer();
      if (!eat('/')) throw std::invalid_argument("bad exponent in: " + s);
      long b = integer();
      if (!eat(')')) throw std::invalid_argument("bad exponent in: " + s);
      if (b == 1) return (int)(2 * a);
      if (b == 2) return (int)a;
      throw std::invalid_argument("exponent denominator must be 1 or 2");
    }
    return (int)(2 * integer());
  }
  QPoly term() {
    Rat coef(1);
    int e2 = 0;
    bool any = false;
    bool neg = false;
    skip();
    while (peek() == '+' || peek() == '-') {
      if (eat('-')) neg = !neg;
      else eat('+');
    }
    while (true) {
      skip();
      if (i < s.size() && (s[i] == 'q')) {
        ++i;
        if (eat('^'))
          e2 += exponent2();
        else
          e2 += 2;
        any = true;
      } else if (i < s.size() && (std::isdigit((unsigned char)s[i]))) {
        long a = integer();
        size_t save = i;
        if (eat('/')) {
          skip();
          if (i < s.size() && std::isdigit((unsigned char)s[i])) {
            long b = integer();
            coef *= Rat(a, b);
          } else {
            i = save;  // the '/' was the fraction bar of the QFrac
            coef *= Rat(a);
          }
        } else {
          coef *= Rat(a);
        }
        coef.canonicalize();
        any = true;
      } else {
        break;
      }
      if (!eat('*')) break;
    }
    if (!any) throw std::invalid_argument("bad term in: " + s);
    if (neg) coef = -coef;
    return QPoly::monomial(coef, e2);
  }
  QPoly poly() {
    QPoly p = term();
    while (true) {
      skip();
      if (i < s.size() && (s[i] == '+' || s[i] == '-'))
        p = p + term();
      else
        break;
    }
    return p;
  }
};

}  // namespace

QFrac QFrac::from_string(const std::string& s) {
  // split top-level "num/den" where den begins with '(' or the rest parses
  // as a polynomial; parenthesized forms "(...)/(...)" preferred
  auto strip = [](std::string t) {
    while (!t.empty() && std::isspace((unsigned char)t.front())) t.erase(t.begin());
    while (!t.empty() && std::isspace((unsigned char)t.back())) t.pop_back();
    return t;
  };
  std::string text = strip(s);
  if (!text.empty() && text.front() == '(') {
    // find matching close paren
    int depth = 0;
    size_t pos = 0;
    for (; pos < text.size(); ++pos) {
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')' && --depth == 0) break;
    }
    std::string rest = strip(text.substr(pos + 1));
    if (!rest.empty() && rest.front() == '/') {
      std::string denpart = strip(rest.substr(1));
      if (!denpart.empty() && denpart.front() == '(' && denpart.back() == ')')
        denpart = denpart.substr(1, denpart.size() - 2);
      Parser pn(text);
      pn.i = 1;
      QPoly num = pn.poly();
      Parser pd(denpart);
      QPoly den = pd.poly();
      return QFrac(num, den);
    }
  }
  Parser p(text);
  QPoly num = p.poly();
  p.skip();
  if (p.i < text.size() && text[p.i] == '/') {
    ++p.i;
    QPoly den = p.poly();
    return QFrac(num, den);
  }
  if (p.i < text.size())
    throw std::invalid_argument("trailing junk in coefficient: " + s);
  return QFrac(num);
}

}  // namespace ado
