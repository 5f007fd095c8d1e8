#pragma once

#include <string>

#include "ado/qfrac.hpp"

namespace ado {

// Twist-knot master sum
//   J_n^p(q) = sum_{k=0}^n sum_{j=0}^k (-1)^{j+1} q^{k + p j(j+1) + j(j-1)/2}
//              (q^{2j+1} - 1) (q;q)_k (q^{1-n};q)_k (q^{1+n};q)_k
//              / ((q;q)_{k+j+1} (q;q)_{k-j}),
// evaluated exactly in Q(q); the result is always a Laurent polynomial.
QPoly twist_master(int p, int n);

// Twist parameter feeding the master sum: 3_1 -> 1, 5_2 -> 2; for 4_1 the
// parameter is determined once by matching the known small-color values
// (scan over p in [-3, 3]) and cached.
int twist_parameter(const std::string& knot);

// Colored Jones polynomial, normalized so that the unknot gives
// [N]_q = (q^N - q^{-N})/(q - q^{-1}); J_0 := 0. For the twist knots,
// J_N(q) = [N]_q * J_N^p(q^{-2}). Knots: unknot, 3_1, 4_1, 5_2.
QPoly colored_jones(const std::string& knot, int N);

// Renormalized value  (q - q^{-1})/(q^N - q^{-N}) * J_N(q)  at q = zeta_2r,
// exact in Q(zeta_2r). The prefactor is cancelled symbolically before
// specialization, so the value exists even when r divides N (the Kashaev
// point N = r included); a genuinely surviving pole throws.
Cyc renormalized_jones(const std::string& knot, int N, long r);

}  // namespace ado
