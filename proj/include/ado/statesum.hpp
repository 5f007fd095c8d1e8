#pragma once

#include "ado/laurent.hpp"
#include "ado/tangle.hpp"

namespace ado {

// Monomial prefactors that are guaranteed to factor out of the bracket and
// are therefore tracked as exponent data instead of being multiplied in:
// z_{ij} units from crossings and the alpha^2-type part of the framing
// correction.
struct PrefactorRecord {
  std::vector<std::vector<long>> z_exponent;  // n x n, diagonal = writhe
  long framing = 0;                           // f applied by zero framing
};

struct BracketResult {
  LaurentC bracket;  // <T> in the component variables, over Q(zeta_2r)
  PrefactorRecord record;
  TangleInfo info;
  long crossing_terms = 0;  // nonzero crossing transitions visited
};

// Exact amplitude of one crossing transition at q = zeta_2r. For a positive
// crossing, (a, b) are the bottom labels on components (i, j) read (left,
// right) and the top labels are (d, c) = (b+k, a-k) read (left, right); for
// a negative crossing the component roles are mirrored. comp_i / comp_j are
// 0-based component variable indices into an nvars-variable Laurent ring.
// Returns zero when the transition is forbidden.
LaurentC crossing_weight(long r, int sign, int a, int b, int k, int comp_i,
                         int comp_j, const std::vector<std::string>& vars);

// Slice-by-slice sparse contraction of the (1,1)-tangle diagram.
BracketResult evaluate_bracket(const TangleProgram& p, long r);

// Modified dimension as a rational expression (num, den) in the first
// component variable; both the product form and the closed form are computed
// and asserted equal.
struct ModifiedDimension {
  LaurentC num, den;
};
ModifiedDimension modified_dimension(long r,
                                     const std::vector<std::string>& vars);

enum class Framing { Zero, Blackboard };

struct AdoResult {
  std::string name;
  long r = 0;
  // Hat-normalized invariant: N(alpha-1) with its (x^r - x^{-r})-type
  // denominator cleared and the residual unit fixed so that
  // hat(zeta_2r^N) = (zeta - zeta^{-1}) (-1)^{f(N-1)} J_N(zeta_2r) for
  // r not dividing N. Always a Laurent polynomial in x for knots.
  LaurentC hat;
  // The cleared denominator, x^r - x^{-r} up to unit; hat / (i^{r-1} den)
  // recovers the un-hatted N(alpha-1) as a rational expression.
  LaurentC unhat_den;
  bool denominator_cancelled = true;
  PrefactorRecord record;
};

// Full pipeline: bracket, modified dimension, framing correction, hat
// normalization. Requires a validated knot program (one component).
AdoResult ado_invariant(const TangleProgram& p, long r,
                        Framing framing = Framing::Zero);

// Independent closed-form oracle for the figure-eight hat invariant.
AdoResult murakami_41(long r);

}  // namespace ado
