#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ado/recursion.hpp"
#include "ado/weyl.hpp"

namespace ado {

namespace {

// ---------------------------------------------------------------------------
// Exact rational RREF.
// ---------------------------------------------------------------------------

// Reduce M in place to reduced row echelon form; returns pivot columns.
std::vector<int> rref(RatMatrix& M) {
  std::vector<int> pivots;
  if (M.empty()) return pivots;
  const int rows = (int)M.size(), cols = (int)M[0].size();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (M[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(M[r], M[sel]);
    const Rat pv = M[r][c];
    for (int k = c; k < cols; ++k) M[r][k] /= pv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      const Rat f = M[i][c];
      for (int k = c; k < cols; ++k) M[i][k] -= f * M[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// ---------------------------------------------------------------------------
// Modular arithmetic (single 61-bit Mersenne prime) with rational
// reconstruction; exact re-verification downstream guards against both an
// unlucky prime and a failed lift.
// ---------------------------------------------------------------------------

constexpr uint64_t kP = (uint64_t(1) << 61) - 1;

uint64_t mulm(uint64_t a, uint64_t b) {
  return (uint64_t)((__uint128_t)a * b % kP);
}

uint64_t powm(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  a %= kP;
  while (e) {
    if (e & 1) r = mulm(r, a);
    a = mulm(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t invm(uint64_t a) { return powm(a, kP - 2); }

uint64_t rat_mod(const Rat& x) {
  const mpz_class pz((unsigned long)kP);
  mpz_class num = x.get_num() % pz;
  if (num < 0) num += pz;
  mpz_class den = x.get_den() % pz;
  if (den == 0) throw std::runtime_error("rat_mod: denominator divisible by p");
  return mulm(num.get_ui(), invm(den.get_ui()));
}

// Lift v in [0, p) to a fraction a/b with |a|, b <= sqrt(p/2); returns false
// when no such representative exists.
bool rat_reconstruct(uint64_t v, Rat& out) {
  const long long bound = 1073741824;  // 2^30 < sqrt(p/2)
  long long r0 = (long long)kP, r1 = (long long)v;
  long long t0 = 0, t1 = 1;
  while (r1 > bound) {
    const long long q = r0 / r1;
    long long tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || std::abs(t1) > bound) return false;
  Rat res(mpz_class((long)r1), mpz_class((long)t1));
  res.canonicalize();
  out = res;
  return true;
}

// Online dense modular eliminator: feeds rows one at a time, keeps only the
// independent ones fully reduced against each other.
class ModKernel {
 public:
  explicit ModKernel(int cols) : cols_(cols) {}

  void add_row(std::vector<uint64_t> row) {
    for (size_t i = 0; i < piv_.size(); ++i) {
      const uint64_t f = row[pivcol_[i]];
      if (!f) continue;
      const auto& pr = piv_[i];
      for (int c = 0; c < cols_; ++c)
        if (pr[c]) row[c] = (row[c] + kP - mulm(f, pr[c])) % kP;
    }
    int lead = -1;
    for (int c = 0; c < cols_; ++c)
      if (row[c]) {
        lead = c;
        break;
      }
    if (lead < 0) return;
    const uint64_t fi = invm(row[lead]);
    for (int c = 0; c < cols_; ++c) row[c] = mulm(row[c], fi);
    // keep stored rows reduced against the new pivot
    for (size_t i = 0; i < piv_.size(); ++i) {
      const uint64_t f = piv_[i][lead];
      if (!f) continue;
      for (int c = 0; c < cols_; ++c)
        if (row[c]) piv_[i][c] = (piv_[i][c] + kP - mulm(f, row[c])) % kP;
    }
    piv_.push_back(std::move(row));
    pivcol_.push_back(lead);
  }

  int rank() const { return (int)piv_.size(); }

  // kernel basis vectors (one per free column), entries mod p
  std::vector<std::vector<uint64_t>> kernel() const {
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivcol_) is_pivot[c] = true;
    std::vector<std::vector<uint64_t>> out;
    for (int f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<uint64_t> v(cols_, 0);
      v[f] = 1;
      for (size_t i = 0; i < piv_.size(); ++i)
        v[pivcol_[i]] = (kP - piv_[i][f]) % kP;
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  int cols_;
  std::vector<std::vector<uint64_t>> piv_;
  std::vector<int> pivcol_;
};

// Normalize a Weyl element to integer-primitive coefficients with the
// leading (map-order first) coefficient positive.
WeylElement normalize_content(const WeylElement& a) {
  mpz_class lcm_den(1), gcd_num(0);
  for (const auto& [key, coef] : a.terms()) {
    if (!coef.is_polynomial())
      throw std::runtime_error("normalize_content: non-polynomial coefficient");
    for (const auto& [e2, c] : coef.num().terms()) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
              c.get_den().get_mpz_t());
      mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(),
              c.get_num().get_mpz_t());
    }
  }
  if (gcd_num == 0) return a;
  Rat scale(lcm_den, gcd_num);
  scale.canonicalize();
  // sign: first term's lowest-q coefficient positive
  const auto& first = a.terms().begin()->second.num().terms().begin()->second;
  if (first * scale < 0) scale = -scale;
  WeylElement out(a.pairs(), a.hatted());
  for (const auto& [key, coef] : a.terms()) out.add_term(key, coef * scale);
  return out;
}

}  // namespace

std::vector<RatRow> nullspace(const RatMatrix& M) {
  std::vector<RatRow> basis;
  if (M.empty()) return basis;
  const int cols = (int)M[0].size();
  for (const auto& row : M)
    if ((int)row.size() != cols)
      throw std::invalid_argument("nullspace: ragged matrix");
  RatMatrix R = M;
  const std::vector<int> pivots = rref(R);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatRow v(cols, Rat(0));
    v[f] = Rat(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -R[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

GuessResult guess_operator(const std::map<long, LaurentC>& family,
                           const GuessAnsatz& ansatz,
                           const std::vector<long>& train,
                           const std::vector<long>& test) {
  GuessResult res;
  res.cert.identity = "guess";
  {
    std::string rng = "train=";
    for (long r : train) rng += std::to_string(r) + ",";
    rng += " test=";
    for (long r : test) rng += std::to_string(r) + ",";
    res.cert.range = rng;
  }
  if (train.empty()) throw std::invalid_argument("guess_operator: empty train set");
  if (ansatz.y_order < 0 || ansatz.x_degree < 0 || ansatz.q_degree < 0)
    throw std::invalid_argument("guess_operator: degenerate ansatz");
  long rmin = *std::min_element(train.begin(), train.end());
  // Structural guard: a window of y-powers reaching 2r picks up the trivial
  // quasi-periodicity relation of the family at the smallest trained root.
  if (ansatz.y_order >= 2 * rmin)
    throw std::invalid_argument(
        "guess_operator: y_order must stay below 2*min(train) to exclude "
        "quasi-periodic relations");

  const int NS = ansatz.q_degree + 1, NT = ansatz.x_degree + 1,
            NJ = ansatz.y_order + 1;
  const int NV = NS * NT * NJ;
  auto vidx = [&](int j, int s, int t) { return (j * NT + t) * NS + s; };

  ModKernel elim(NV);
  for (long r : train) {
    auto it = family.find(r);
    if (it == family.end())
      throw std::invalid_argument("guess_operator: family lacks train r=" +
                                  std::to_string(r));
    const LaurentC& hat = it->second;
    const long m = 2 * r;
    // Row key: (x-exponent of the image, power-basis coordinate). Column
    // entries are the rational power-basis coordinates of the contribution
    // of each ansatz monomial q^s x^t y^j acting on hat.
    std::map<std::pair<int, size_t>, std::vector<uint64_t>> eqs;
    for (const auto& [e, c] : hat.terms()) {
      const int n = e[0] / 2;  // stored exponents are doubled
      Cyc base = c.conductor() == m ? c : c.embed(m);
      for (int j = 0; j < NJ; ++j) {
        for (int s = 0; s < NS; ++s) {
          // zeta_m^(s + j*n), with negative powers wrapped mod m
          long pw = ((long)s + (long)j * n) % m;
          if (pw < 0) pw += m;
          const Cyc coeff = base * Cyc::root_power(m, pw);
          for (int t = 0; t < NT; ++t) {
            const int col = vidx(j, s, t);
            const int ee = e[0] + 2 * t;
            for (size_t i = 0; i < coeff.coeffs().size(); ++i) {
              if (coeff.coeffs()[i] == 0) continue;
              auto& row = eqs[{ee, i}];
              if (row.empty()) row.assign(NV, 0);
              row[col] = (row[col] + rat_mod(coeff.coeffs()[i])) % kP;
            }
          }
        }
      }
    }
    for (auto& [key, row] : eqs) elim.add_row(std::move(row));
  }

  auto kernel = elim.kernel();
  if (kernel.empty()) {
    res.cert.pass = false;
    res.cert.residual = "empty kernel";
    res.cert.notes = "modular rank " + std::to_string(elim.rank()) + " of " +
                     std::to_string(NV);
    return res;
  }

  int lifted = 0;
  for (const auto& vec : kernel) {
    // rational lift
    std::vector<Rat> rv(NV);
    bool ok = true;
    for (int k = 0; k < NV && ok; ++k)
      if (!rat_reconstruct(vec[k], rv[k])) ok = false;
    if (!ok) continue;
    ++lifted;
    WeylElement cand(1, 0);
    for (int j = 0; j < NJ; ++j)
      for (int t = 0; t < NT; ++t) {
        QPoly coeff;
        for (int s = 0; s < NS; ++s)
          coeff.add_term(2 * s, rv[vidx(j, s, t)]);
        if (!coeff.is_zero()) cand.add_term({t, j}, QFrac(coeff));
      }
    if (cand.is_zero()) continue;
    cand = normalize_content(cand);
    // exact re-verification on train and test
    bool exact = true;
    for (const std::vector<long>* set : {&train, &test}) {
      for (long r : *set) {
        auto it = family.find(r);
        if (it == family.end())
          throw std::invalid_argument("guess_operator: family lacks r=" +
                                      std::to_string(r));
        if (!act_on_laurent(cand, it->second, r, 2 * r).is_zero()) {
          exact = false;
          break;
        }
      }
      if (!exact) break;
    }
    if (exact) res.candidates.push_back(std::move(cand));
  }

  res.cert.pass = !res.candidates.empty();
  res.cert.notes = "modular kernel dim " + std::to_string(kernel.size()) +
                   ", lifted " + std::to_string(lifted) + ", exact survivors " +
                   std::to_string(res.candidates.size());
  if (!res.cert.pass)
    res.cert.residual = lifted ? "no candidate survived exact verification"
                               : "rational reconstruction failed";
  return res;
}

bool proportional_up_to_unit(const WeylElement& a, const WeylElement& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.pairs() != b.pairs() || a.hatted() != b.hatted()) return false;
  if (a.terms().size() != b.terms().size()) return false;
  if (a.pairs() != 1 || a.hatted() != 0)
    throw std::invalid_argument("proportional_up_to_unit: expects one (x, y) pair");
  // candidate x-offset: match the terms of minimal y-degree, minimal x
  auto min_key = [](const WeylElement& w) {
    std::pair<int, int> best{INT32_MAX, INT32_MAX};  // (ye, xe)
    for (const auto& [k, c] : w.terms())
      best = std::min(best, {k[1], k[0]});
    return best;
  };
  const auto ka = min_key(a), kb = min_key(b);
  if (ka.first != kb.first) return false;
  const int toff = ka.second - kb.second;
  QFrac ratio;
  bool have_ratio = false;
  for (const auto& [k, cb] : b.terms()) {
    const WeylElement::Key want{k[0] + toff, k[1]};
    auto it = a.terms().find(want);
    if (it == a.terms().end()) return false;
    const QFrac r = it->second / cb;
    if (!have_ratio) {
      ratio = r;
      have_ratio = true;
      // the unit must be a single monomial c q^s
      if (ratio.num().terms().size() != 1 || ratio.den().terms().size() != 1)
        return false;
    } else if (r != ratio) {
      return false;
    }
  }
  return true;
}

}  // namespace ado
