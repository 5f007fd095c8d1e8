#pragma once

#include <map>
#include <string>
#include <vector>

#include "ado/statesum.hpp"
#include "ado/weyl.hpp"

namespace ado {

// Inhomogeneous recursion data: (q - q^-1) A J_N = B(q^N) on the Jones side,
// A hat_r = (quasi-constant) B(x) on the ADO side. A lives in the q-Weyl
// algebra with one (x, y) pair; B is a Laurent polynomial in x over Q(q).
struct OperatorPair {
  std::string knot;
  WeylElement A{1, 0};
  LaurentQ B;
};

// Outcome of one exact verification sweep. pass is true iff every residual
// vanished identically; residual carries a printable witness otherwise.
struct Certificate {
  std::string identity;
  std::string range;
  bool pass = false;
  int sigma = 0;            // resolved y-sign convention (0 when not applicable)
  std::vector<Rat> prefactor;  // fitted (k+, k0, k-) for the ADO prefactor
  std::string residual;
  std::string notes;
};

// Exact transcriptions of the published recursion operators for 3_1, 4_1,
// 5_2 (x-variable name "x").
OperatorPair builtin_operators(const std::string& knot);

// A-polynomial in the commuting variables (m, l); currently 4_1 only.
LaurentQ a_polynomial(const std::string& knot);

// Window N = 0..Nmax of colored Jones values as a shiftable sequence.
SequenceFunction jones_window(const std::string& knot, int Nmax);

// (q - q^-1) A J_N = B(q^N) exactly in Q(q) for N in [Nmin, Nmax], plus the
// homogenized operator [B(x)y - B(qx)] A annihilating the same window.
Certificate verify_jones(const std::string& knot, int Nmin = 2, int Nmax = 15);

// A(x, sigma*y; zeta_2r) hat_r(x) = (k+ x^{2r} + k0 + k- x^{-2r}) B(x; zeta_2r)
// with a single global sigma in {+1, -1} and exactly fitted rational kappa;
// also checks the homogenized annihilator outright. The fitted kappa pattern
// is reported in the certificate.
Certificate verify_ado(const std::string& knot, long rmin, long rmax);

// hat(zeta_2r^N) = (zeta - zeta^-1) J_N(zeta_2r), exact in Q(zeta_2r);
// requires r not dividing N (the hat prefactor degenerates otherwise).
Certificate residue_check(const std::string& knot, long r, int N);

// The un-hatted invariant at the Kashaev point alpha = r - 1 equals the
// renormalized Jones value at q = zeta_2r; the left side is an exact limit
// x -> zeta^r of hat / (i^{r-1} (x^r - x^-r)) via one derivative.
Certificate kashaev_check(const std::string& knot, long r);

// Theorem-style transfer: an annihilator of the un-hatted ADO family,
// reparameterized x -> q^-1 x, y -> (-1)^{f+1} y, must annihilate the Jones
// window (f = framing, 0 for the builtins).
Certificate thm_jones_crosscheck(const WeylElement& unhat_annihilator,
                                 const std::string& knot, int Nmin, int Nmax,
                                 long f = 0);

// q -> 1 limit: substitute q = 1, x -> m, y -> l (commutative) in op and
// divide exactly by apoly along l; pass iff the remainder vanishes. The
// quotient is returned through quotient_out when given.
Certificate q1_divisibility(const WeylElement& op, const LaurentQ& apoly,
                            LaurentQ* quotient_out = nullptr);

// Exact rational kernel basis of a dense matrix (RREF back-substitution,
// one basis vector per free column); M * v = 0 for every returned v.
using RatRow = std::vector<Rat>;
using RatMatrix = std::vector<RatRow>;
std::vector<RatRow> nullspace(const RatMatrix& M);

// Holonomic guessing over a family r -> hat_r. Ansatz: A = sum c_{j,s,t}
// q^s x^t y^j with j in [0, y_order], t in [0, x_degree], s in [0, q_degree]
// and rational c. Unknowns are solved from act_on_laurent(A, hat_r) = 0 on
// the train set (exactly), every kernel candidate is re-verified on the test
// set, and survivors are returned with integer-content-normalized
// coefficients.
struct GuessAnsatz {
  int y_order = 2;
  int x_degree = 11;
  int q_degree = 20;
};
struct GuessResult {
  std::vector<WeylElement> candidates;
  Certificate cert;
};
GuessResult guess_operator(const std::map<long, LaurentC>& family,
                           const GuessAnsatz& ansatz,
                           const std::vector<long>& train,
                           const std::vector<long>& test);

// True iff a = u * b for a single Weyl monomial unit u = c q^s x^t (no y).
bool proportional_up_to_unit(const WeylElement& a, const WeylElement& b);

std::string certificate_to_json(const Certificate& c);

}  // namespace ado
