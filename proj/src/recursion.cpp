#include "ado/recursion.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "ado/jones.hpp"

namespace ado {

namespace {

const std::vector<std::string> kX{"x"};
const std::vector<std::string> kML{"m", "l"};

// c * q^qe * x^xe as a one-variable Laurent polynomial over Q(q)
LaurentQ xq(int xe, int qe, long c = 1) {
  return LaurentQ::monomial(kX, {2 * xe}, QFrac::q_power(2 * qe) * Rat(c));
}

QFrac qp(int qe, long c = 1) { return QFrac::q_power(2 * qe) * Rat(c); }

// attach coeff(x) * y^ydeg to A (coefficients must already be normal-ordered,
// i.e. written as c(q, x) y^j)
void add_block(WeylElement& A, const LaurentQ& coeff, int ydeg) {
  for (const auto& [e, c] : coeff.terms()) {
    if (e[0] % 2 != 0)
      throw std::invalid_argument("operator coefficients need integer x powers");
    A.add_term({e[0] / 2, ydeg}, c);
  }
}

QFrac eval_at_qN(const LaurentQ& B, long N) {
  QFrac out;
  for (const auto& [e, c] : B.terms()) out += c * QFrac::q_power(N * e[0]);
  return out;
}

LaurentC at_root(const LaurentQ& B, long r, long m) {
  LaurentC out(B.vars());
  for (const auto& [e, c] : B.terms()) out.add_term(e, c.eval_root(r, m));
  return out;
}

Cyc eval_at_power(const LaurentC& P, long m, long e) {
  Cyc v = Cyc::zero(m);
  for (const auto& [ex, c] : P.terms()) {
    if (ex[0] % 2 != 0) throw std::logic_error("eval_at_power: half power");
    v = v + c * Cyc::root_power(m, e * (ex[0] / 2));
  }
  return v;
}

Certificate make_cert(std::string identity, std::string range) {
  Certificate c;
  c.identity = std::move(identity);
  c.range = std::move(range);
  c.pass = true;
  return c;
}

// Solve M k = b exactly (least structure: Gaussian elimination); returns
// false when the system is inconsistent. M is column-major small.
bool solve_exact(std::vector<std::vector<Rat>> rows, std::vector<Rat> rhs,
                 std::vector<Rat>& out, int ncols) {
  const int nrows = (int)rows.size();
  int rank = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < ncols && rank < nrows; ++c) {
    int p = -1;
    for (int i = rank; i < nrows; ++i)
      if (rows[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[p], rows[rank]);
    std::swap(rhs[p], rhs[rank]);
    for (int i = 0; i < nrows; ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      Rat f = rows[i][c] / rows[rank][c];
      f.canonicalize();
      for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
      rhs[i] -= f * rhs[rank];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (int i = rank; i < nrows; ++i)
    if (rhs[i] != 0) return false;
  out.assign(ncols, Rat(0));
  for (int i = 0; i < rank; ++i) {
    Rat v = rhs[i] / rows[i][pivot_col[i]];
    v.canonicalize();
    out[pivot_col[i]] = v;
  }
  return true;
}

}  // namespace

OperatorPair builtin_operators(const std::string& knot) {
  OperatorPair op;
  op.knot = knot;
  op.A = WeylElement::zero(1, 0);
  if (knot == "3_1") {
    // A = q^3 x^6 y + 1,  B = q^2 x (q^2 x^4 - 1)
    op.A.add_term({6, 1}, qp(3));
    op.A.add_term({0, 0}, qp(0, 1));
    op.B = xq(5, 4) - xq(1, 2);
    return op;
  }
  if (knot == "4_1") {
    // A = (x^2/q - q x^-2) y
    //     - (x^2 - x^-2)(x^4 - x^2 - (q^2 + q^-2) - x^-2 + x^-4)
    //     + (q x^2 - q^-1 x^-2) y^-1
    // B = (x + x^-1)(q x^2 - q^-1 x^-2)(x^2/q - q x^-2)
    // The y^-1 coefficient is printed garbled; it is pinned against the
    // exact Jones values (see the operator transcription tests).
    LaurentQ c1 = xq(2, -1) - xq(-2, 1);
    LaurentQ mid = xq(4, 0) - xq(2, 0) - xq(0, 2) - xq(0, -2) - xq(-2, 0) +
                   xq(-4, 0);
    LaurentQ c0 = (xq(2, 0) - xq(-2, 0)) * mid * QFrac(Rat(-1));
    LaurentQ cm1 = xq(2, 1) - xq(-2, -1);
    add_block(op.A, c1, 1);
    add_block(op.A, c0, 0);
    add_block(op.A, cm1, -1);
    op.B = (xq(1, 0) + xq(-1, 0)) * (xq(2, 1) - xq(-2, -1)) * c1;
    return op;
  }
  if (knot == "5_2") {
    LaurentQ one = xq(0, 0);
    auto brk = [&](int qe, int xe) { return one - xq(xe, qe); };  // 1 - q^qe x^xe
    LaurentQ y3 = xq(14, 28, -1) * brk(2, 4) * brk(4, 4);
    LaurentQ inner2 = one - xq(2, 4) -
                      (xq(4, 4) - xq(4, 6) - xq(4, 8) + xq(4, 10)) +
                      xq(6, 8) + xq(6, 14) + xq(8, 14, 2) - xq(10, 18);
    LaurentQ y2 = xq(4, 5, -1) * brk(2, 4) * brk(8, 4) * inner2;
    LaurentQ inner1 = one - xq(2, 2, 2) - (xq(4, 2) + xq(4, 8)) +
                      (xq(6, 4) - xq(6, 6) - xq(6, 8) + xq(6, 10)) + xq(8, 10) -
                      xq(10, 12);
    LaurentQ y1 = brk(4, 4) * brk(10, 4) * inner1;
    LaurentQ y0 = xq(0, 1, -1) * brk(8, 4) * brk(10, 4);
    add_block(op.A, y3, 3);
    add_block(op.A, y2, 2);
    add_block(op.A, y1, 1);
    add_block(op.A, y0, 0);
    // [6]_q/[1]... the balanced ratio (q^6 - q^-6)/(q - q^-1)
    LaurentQ ratio(kX);
    for (int e : {5, 3, 1, -1, -3, -5}) ratio += xq(0, e);
    op.B = xq(3, 5) + xq(5, 7) + xq(5, 9) - xq(7, 7) - xq(7, 15) +
           ratio * (xq(13, 20) - xq(9, 14)) + xq(15, 19) + xq(15, 27) -
           xq(17, 25) - xq(17, 27) - xq(19, 29);
    return op;
  }
  throw std::invalid_argument("builtin_operators: unknown knot " + knot);
}

LaurentQ a_polynomial(const std::string& knot) {
  if (knot != "4_1")
    throw std::invalid_argument("a_polynomial: only 4_1 is built in");
  auto ml = [](int me, int le, long c = 1) {
    return LaurentQ::monomial(kML, {2 * me, 2 * le}, QFrac(Rat(c)));
  };
  // (l - 1)(l - (m^4 - m^2 - 2 - m^-2 + m^-4) + l^-1)
  LaurentQ mid = ml(4, 0) - ml(2, 0) - ml(0, 0, 2) - ml(-2, 0) + ml(-4, 0);
  return (ml(0, 1) - ml(0, 0)) * (ml(0, 1) - mid + ml(0, -1));
}

SequenceFunction jones_window(const std::string& knot, int Nmax) {
  SequenceFunction J;
  for (int N = 0; N <= Nmax; ++N) J.values[N] = QFrac(colored_jones(knot, N));
  return J;
}

Certificate verify_jones(const std::string& knot, int Nmin, int Nmax) {
  OperatorPair op = builtin_operators(knot);
  Certificate cert = make_cert("jones-recursion:" + knot,
                               "N=" + std::to_string(Nmin) + ".." +
                                   std::to_string(Nmax));
  const int yhi = op.A.max_y_degree(0);
  const int ylo = op.A.min_y_degree(0);
  if (Nmin + ylo < 0)
    throw std::invalid_argument("verify_jones: window underflow at Nmin");
  SequenceFunction J = jones_window(knot, Nmax + yhi + 1);
  WeylElement H = homogenize(op.A, op.B);
  QFrac qdiff = QFrac::q_power(2) - QFrac::q_power(-2);
  for (int N = Nmin; N <= Nmax; ++N) {
    QFrac res = qdiff * act_on_sequence(op.A, J, N) - eval_at_qN(op.B, N);
    if (!res.is_zero()) {
      cert.pass = false;
      cert.residual = "inhomogeneous N=" + std::to_string(N) + ": " +
                      res.to_string();
      return cert;
    }
    QFrac hres = act_on_sequence(H, J, N);
    if (!hres.is_zero()) {
      cert.pass = false;
      cert.residual = "homogeneous N=" + std::to_string(N) + ": " +
                      hres.to_string();
      return cert;
    }
  }
  cert.notes = "inhomogeneous and homogenized recursions exact over Q(q)";
  return cert;
}

namespace {

// expected ADO prefactor pattern (k+, k0, k-) for each knot
std::vector<Rat> expected_pattern(const std::string& knot) {
  if (knot == "3_1") return {Rat(1), Rat(-1), Rat(1)};
  if (knot == "4_1") return {Rat(-1), Rat(3), Rat(-1)};
  if (knot == "5_2") return {Rat(2), Rat(-3), Rat(2)};
  throw std::invalid_argument("no expected prefactor for " + knot);
}

// Try to write L = (k+ x^{2r} + k0 + k- x^{-2r}) * Bz with rational kappa.
bool fit_prefactor(const LaurentC& L, const LaurentC& Bz, long r, long m,
                   std::vector<Rat>& kappa) {
  LaurentC cands[3] = {Bz.shift(0, 4 * (int)r), Bz, Bz.shift(0, -4 * (int)r)};
  // collect every exponent/power-basis coordinate as one linear equation
  std::map<std::pair<int, size_t>, std::array<Rat, 4>> eqs;
  auto scatter = [&](const LaurentC& P, int col) {
    for (const auto& [e, c] : P.terms())
      for (size_t i = 0; i < c.coeffs().size(); ++i)
        if (c.coeffs()[i] != 0) eqs[{e[0], i}][col] = c.coeffs()[i];
  };
  for (int k = 0; k < 3; ++k) scatter(cands[k], k);
  scatter(L, 3);
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  for (auto& [key, v] : eqs) {
    rows.push_back({v[0], v[1], v[2]});
    rhs.push_back(v[3]);
  }
  if (!solve_exact(std::move(rows), std::move(rhs), kappa, 3)) return false;
  // re-verify exactly (solve_exact is sound, this is belt and braces)
  LaurentC recon(L.vars());
  for (int k = 0; k < 3; ++k) recon += cands[k] * Cyc(m, kappa[k]);
  return recon == L;
}

}  // namespace

Certificate verify_ado(const std::string& knot, long rmin, long rmax) {
  OperatorPair op = builtin_operators(knot);
  Certificate cert = make_cert("ado-recursion:" + knot,
                               "r=" + std::to_string(rmin) + ".." +
                                   std::to_string(rmax));
  const std::vector<Rat> pattern = expected_pattern(knot);
  int sigma = 0;
  for (long r = rmin; r <= rmax; ++r) {
    const long m = 2 * r;
    // For 4_1 at large r the closed-form evaluation is used; it agrees with
    // the state sum (cross-checked exactly for r <= 12 in the test suite).
    LaurentC hat = (knot == "4_1" && r > 8)
                       ? murakami_41(r).hat
                       : ado_invariant(builtin_tangle(knot), r).hat;
    LaurentC Bz = at_root(op.B, r, m);
    bool ok = false;
    for (int s : {+1, -1}) {
      if (sigma != 0 && s != sigma) continue;  // global sign, resolved once
      WeylElement As = reparameterize(op.A, QFrac(Rat(1)), s);
      LaurentC L = act_on_laurent(As, hat, r, m);
      std::vector<Rat> kappa;
      if (!fit_prefactor(L, Bz, r, m, kappa)) continue;
      // kappa must be proportional to the expected pattern
      bool prop = true;
      for (int i = 0; i < 3; ++i)
        if (kappa[i] * pattern[(i + 1) % 3] != kappa[(i + 1) % 3] * pattern[i])
          prop = false;
      if (!prop || (kappa[0] == 0 && kappa[1] == 0 && kappa[2] == 0)) continue;
      // homogeneous annihilator with the same sign convention
      WeylElement H = homogenize(As, op.B);
      if (!act_on_laurent(H, hat, r, m).is_zero()) continue;
      sigma = s;
      if (cert.prefactor.empty()) cert.prefactor = kappa;
      ok = true;
      break;
    }
    if (!ok) {
      cert.pass = false;
      cert.residual = "no sign/prefactor fit at r=" + std::to_string(r);
      return cert;
    }
  }
  cert.sigma = sigma;
  cert.notes = "inhomogeneous prefactor fitted exactly; homogenized operator "
               "annihilates every hat polynomial";
  return cert;
}

Certificate residue_check(const std::string& knot, long r, int N) {
  if (r < 2) throw std::invalid_argument("residue_check: r >= 2 required");
  if (N % r == 0)
    throw std::invalid_argument("residue_check: r divides N (hat prefactor degenerates)");
  Certificate cert = make_cert("residue:" + knot,
                               "r=" + std::to_string(r) + ",N=" + std::to_string(N));
  const long m = 2 * r;
  LaurentC hat = ado_invariant(builtin_tangle(knot), r).hat;
  Cyc lhs = eval_at_power(hat, m, N);
  Cyc rhs = (Cyc::root_power(m, 1) - Cyc::root_power(m, -1)) *
            colored_jones(knot, N).eval_root(r, m);
  cert.pass = (lhs == rhs);
  if (!cert.pass) cert.residual = (lhs - rhs).to_string();
  cert.notes = "zero-framed form hat(zeta^N) = (zeta - zeta^-1) J_N(zeta_2r)";
  return cert;
}

Certificate kashaev_check(const std::string& knot, long r) {
  if (r < 2) throw std::invalid_argument("kashaev_check: r >= 2 required");
  Certificate cert = make_cert("kashaev:" + knot, "r=" + std::to_string(r));
  const long m = 2 * r;
  // Both hat and (x^r - x^-r) vanish at the Kashaev point x = zeta^r = -1;
  // the limit of their ratio is hat'(-1) / (2r (-1)^{r-1}). Normalizing by
  // the unknot value removes the convention-dependent unit, leaving
  //   hat'(-1) / 2 = renormalized Jones at q = zeta_2r.
  Cyc lhs = eval_at_power(ado_invariant(builtin_tangle(knot), r).hat.derivative(0),
                          m, r) * Rat(1, 2);
  Cyc rhs = renormalized_jones(knot, (int)r, r);
  cert.pass = (lhs == rhs);
  if (!cert.pass) cert.residual = (lhs - rhs).to_string();
  cert.notes = "unknot-normalized limit at alpha = r - 1";
  return cert;
}

Certificate thm_jones_crosscheck(const WeylElement& unhat_annihilator,
                                 const std::string& knot, int Nmin, int Nmax,
                                 long f) {
  Certificate cert = make_cert("jones-crosscheck:" + knot,
                               "N=" + std::to_string(Nmin) + ".." +
                                   std::to_string(Nmax));
  const int sign = (f % 2 == 0) ? -1 : 1;  // (-1)^{f+1}
  WeylElement T = reparameterize(unhat_annihilator, QFrac::q_power(-2), sign);
  const int yhi = T.max_y_degree(0), ylo = T.min_y_degree(0);
  if (Nmin + ylo < 0)
    throw std::invalid_argument("thm_jones_crosscheck: window underflow");
  SequenceFunction J = jones_window(knot, Nmax + (yhi > 0 ? yhi : 0));
  for (int N = Nmin; N <= Nmax; ++N) {
    QFrac res = act_on_sequence(T, J, N);
    if (!res.is_zero()) {
      cert.pass = false;
      cert.residual = "N=" + std::to_string(N) + ": " + res.to_string();
      return cert;
    }
  }
  cert.sigma = sign;
  return cert;
}

Certificate q1_divisibility(const WeylElement& op, const LaurentQ& apoly,
                            LaurentQ* quotient_out) {
  Certificate cert = make_cert("aj-limit", "q=1");
  if (op.pairs() != 1 || op.hatted() != 0)
    throw std::invalid_argument("q1_divisibility: expects one (x, y) pair");
  // substitute q -> 1, x -> m, y -> l: everything commutes at q = 1
  LaurentQ limit(kML);
  for (const auto& [k, c] : op.terms()) {
    Rat v = c.eval_one();  // throws on a pole at q = 1
    LaurentQ::Exp e{2 * op.xe(k, 0), 2 * op.ye(k, 0)};
    limit.add_term(e, QFrac(v));
  }
  const int lvar = 1;
  LaurentQ rem(kML);
  auto quot = exact_div(limit, apoly, lvar, &rem);
  cert.pass = quot.has_value();
  if (cert.pass && quotient_out) *quotient_out = *quot;
  if (!cert.pass) cert.residual = "nonzero remainder";
  return cert;
}

std::string certificate_to_json(const Certificate& c) {
  std::ostringstream os;
  os << "{\"identity\": \"" << c.identity << "\", \"range\": \"" << c.range
     << "\", \"status\": \"" << (c.pass ? "pass" : "fail") << "\"";
  if (c.sigma != 0) os << ", \"sigma\": " << c.sigma;
  if (!c.prefactor.empty()) {
    os << ", \"prefactor\": [";
    for (size_t i = 0; i < c.prefactor.size(); ++i)
      os << (i ? ", " : "") << "\"" << rat_to_string(c.prefactor[i]) << "\"";
    os << "]";
  }
  os << ", \"residual\": "
     << (c.residual.empty() ? std::string("null")
                            : "\"" + c.residual + "\"");
  if (!c.notes.empty()) os << ", \"notes\": \"" << c.notes << "\"";
  os << "}";
  return os.str();
}

}  // namespace ado
