#include "ado/weyl.hpp"

#include <sstream>

namespace ado {

WeylElement WeylElement::term(int n, int nhat, Key key, QFrac coeff) {
  if ((int)key.size() != 2 * (n + nhat))
    throw std::invalid_argument("Weyl term: key arity mismatch");
  WeylElement a(n, nhat);
  a.add_term(std::move(key), coeff);
  return a;
}

namespace {
WeylElement generator(int n, int nhat, int slot, int e) {
  WeylElement::Key k(2 * (n + nhat), 0);
  k[slot] = e;
  return WeylElement::term(n, nhat, std::move(k), QFrac(Rat(1)));
}
}  // namespace

WeylElement WeylElement::x(int n, int nhat, int i, int e) {
  return generator(n, nhat, i, e);
}
WeylElement WeylElement::xhat(int n, int nhat, int j, int e) {
  return generator(n, nhat, n + j, e);
}
WeylElement WeylElement::y(int n, int nhat, int i, int e) {
  return generator(n, nhat, n + nhat + i, e);
}
WeylElement WeylElement::yhat(int n, int nhat, int j, int e) {
  return generator(n, nhat, 2 * n + nhat + j, e);
}

void WeylElement::add_term(Key key, const QFrac& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

WeylElement WeylElement::operator-() const {
  WeylElement r(n_, nhat_);
  for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
  check(o);
  WeylElement r(*this);
  for (const auto& [k, c] : o.t_) r.add_term(k, c);
  return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
  check(o);
  WeylElement r(*this);
  for (const auto& [k, c] : o.t_) r.add_term(k, -c);
  return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  check(o);
  const int nv = n_ + nhat_;
  WeylElement r(n_, nhat_);
  for (const auto& [ka, ca] : t_)
    for (const auto& [kb, cb] : o.t_) {
      // move o's x-block (exponents kb[0..nv-1]) left past our y-block
      // (exponents ka[nv..2nv-1]): each same-index pairing contributes q.
      long cross = 0;
      for (int v = 0; v < nv; ++v) cross += (long)ka[nv + v] * kb[v];
      Key k(2 * nv);
      for (int v = 0; v < 2 * nv; ++v) k[v] = ka[v] + kb[v];
      r.add_term(std::move(k), ca * cb * QFrac::q_power(2 * cross));
    }
  return r;
}

WeylElement WeylElement::operator*(const QFrac& s) const {
  WeylElement r(n_, nhat_);
  for (const auto& [k, c] : t_) r.add_term(k, c * s);
  return r;
}

WeylElement WeylElement::pow(long e) const {
  if (e < 0) throw std::invalid_argument("WeylElement::pow: negative power");
  WeylElement acc = one(n_, nhat_), base(*this);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

int WeylElement::max_y_degree(int i) const {
  int m = 0;
  bool first = true;
  for (const auto& [k, c] : t_) {
    int d = ye(k, i);
    if (first || d > m) m = d;
    first = false;
  }
  return m;
}

int WeylElement::min_y_degree(int i) const {
  int m = 0;
  bool first = true;
  for (const auto& [k, c] : t_) {
    int d = ye(k, i);
    if (first || d < m) m = d;
    first = false;
  }
  return m;
}

std::string WeylElement::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool firstterm = true;
  for (const auto& [k, c] : t_) {
    if (!firstterm) os << " + ";
    firstterm = false;
    os << "(" << c.to_string() << ")";
    auto emit = [&](const char* base, int idx, int e, bool hat) {
      if (e == 0) return;
      os << "*" << base;
      if (hat) os << "h";
      if (n_ + nhat_ > 1) os << (idx + 1);
      if (e != 1) os << "^" << e;
    };
    for (int i = 0; i < n_; ++i) emit("x", i, xe(k, i), false);
    for (int j = 0; j < nhat_; ++j) emit("x", j, xhe(k, j), true);
    for (int i = 0; i < n_; ++i) emit("y", i, ye(k, i), false);
    for (int j = 0; j < nhat_; ++j) emit("y", j, yhe(k, j), true);
  }
  return os.str();
}

LaurentC act_on_laurent(const WeylElement& A, const LaurentC& P, long r, long m) {
  if (A.hatted() != 0)
    throw std::invalid_argument("act_on_laurent: hatted pairs not allowed");
  if (A.pairs() > P.nvars())
    throw std::invalid_argument("act_on_laurent: not enough variables in P");
  if (m % (2 * r) != 0)
    throw std::invalid_argument("act_on_laurent: conductor must be a multiple of 2r");
  LaurentC out(P.vars());
  for (const auto& [k, c] : A.terms()) {
    LaurentC piece = P;
    for (int i = 0; i < A.pairs(); ++i) {
      const int b = A.ye(k, i);
      if (b != 0) {
        piece = piece.scale_var(i, [&](int e2) {
          long num = (long)b * e2 * m;
          if (num % (4 * r) != 0)
            throw std::domain_error("act_on_laurent: zeta power off the grid");
          return Cyc::root_power(m, num / (4 * r));
        });
      }
      const int a = A.xe(k, i);
      if (a != 0) piece = piece.shift(i, 2 * a);
    }
    out += piece * c.eval_root(r, m);
  }
  return out;
}

QFrac act_on_sequence(const WeylElement& A, const SequenceFunction& J, long N) {
  if (A.pairs() != 1 || A.hatted() != 0)
    throw std::invalid_argument("act_on_sequence: expects one (x, y) pair");
  QFrac out(Rat(0));
  for (const auto& [k, c] : A.terms()) {
    const long idx = N + A.ye(k, 0);
    auto it = J.values.find(idx);
    if (it == J.values.end())
      throw std::out_of_range("sequence window missing N=" + std::to_string(idx));
    out += c * QFrac::q_power(2 * N * A.xe(k, 0)) * it->second;
  }
  return out;
}

namespace {

DiscreteTable::Value frac_add(const DiscreteTable::Value& a,
                              const DiscreteTable::Value& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

}  // namespace

bool table_is_zero(const DiscreteTable& t) {
  for (const auto& [a, v] : t.vals)
    if (!v.num.is_zero()) return false;
  return true;
}

DiscreteTable act_discrete(const WeylElement& A, const DiscreteTable& f) {
  const int n = A.pairs(), m = A.hatted();
  if ((int)f.xvars.size() != n)
    throw std::invalid_argument("act_discrete: continuous arity mismatch");
  DiscreteTable out;
  out.xvars = f.xvars;
  for (const auto& [a, unused] : f.vals) {
    (void)unused;
    bool ok = true;
    DiscreteTable::Value acc{LaurentQ(f.xvars), LaurentQ::constant(f.xvars, QFrac(Rat(1)))};
    for (const auto& [k, c] : A.terms()) {
      std::vector<long> shifted = a;
      for (int j = 0; j < m; ++j) shifted[j] += A.yhe(k, j);
      auto it = f.vals.find(shifted);
      if (it == f.vals.end()) {
        ok = false;
        break;
      }
      DiscreteTable::Value v = it->second;
      // continuous pairs: y_i substitutes x_i -> q x_i, then x_i multiplies
      for (int i = 0; i < n; ++i) {
        const int b = A.ye(k, i);
        if (b != 0) {
          auto scale = [&](int e2) { return QFrac::q_power((long)b * e2); };
          v.num = v.num.scale_var(i, scale);
          v.den = v.den.scale_var(i, scale);
        }
        const int xa = A.xe(k, i);
        if (xa != 0) v.num = v.num.shift(i, 2 * xa);
      }
      // hatted x's and the q-coefficient
      long qexp2 = 0;
      for (int j = 0; j < m; ++j) qexp2 += 2L * A.xhe(k, j) * a[j];
      QFrac s = c * QFrac::q_power(qexp2);
      v.num = v.num * s;
      acc = frac_add(acc, v);
    }
    if (ok) out.vals.emplace(a, std::move(acc));
  }
  if (out.vals.empty())
    throw std::out_of_range("act_discrete: window too small for the shifts");
  return out;
}

WeylElement homogenize(const WeylElement& A, const LaurentQ& B) {
  if (A.pairs() != 1 || A.hatted() != 0)
    throw std::invalid_argument("homogenize: expects one (x, y) pair");
  if (B.is_zero()) throw std::invalid_argument("homogenize: B must be nonzero");
  WeylElement H = WeylElement::zero(1, 0);
  for (const auto& [e, c] : B.terms()) {
    const int e2 = e[0];
    if (e2 % 2 != 0)
      throw std::invalid_argument("homogenize: B must have integer exponents");
    H.add_term({e2 / 2, 1}, c);                                // B(x) y
    H.add_term({e2 / 2, 0}, -(c * QFrac::q_power(e2)));        // -B(qx)
  }
  return H * A;
}

WeylElement reparameterize(const WeylElement& A, const QFrac& c, int sign) {
  if (c.is_zero()) throw std::invalid_argument("reparameterize: zero scale");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("reparameterize: sign must be +-1");
  WeylElement r = WeylElement::zero(A.pairs(), A.hatted());
  for (const auto& [k, coeff] : A.terms()) {
    QFrac nc = coeff;
    long ysum = 0;
    for (int i = 0; i < A.pairs(); ++i) {
      const int a = A.xe(k, i);
      if (a != 0) nc *= c.pow(a);
      ysum += A.ye(k, i);
    }
    if (sign == -1 && (ysum % 2 != 0)) nc = -nc;
    r.add_term(k, nc);
  }
  return r;
}

}  // namespace ado
