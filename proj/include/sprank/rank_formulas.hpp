// Closed-form 2-ranks of the incidence matrices B_{r,1} over GF(2^t), the
// equivalent H-type dimension sum, and the odd-characteristic comparison
// model for r = m.
#pragma once

#include "sprank/bigmat.hpp"

namespace sprank {

// Admissible digit level for a digit of H-type entry s:
//   (m-r) [r <= m]  +  (2m - r - s).
int admissible_level(int m, int r, int s);

// The (2m-r) x (2m-r) matrix with entries
//   a_{i,j} = C(2m, 2j-i) - C(2m, 2j+i+2r-4m-2-2(m-r)[r<=m]),
// 1-based indices, zero-extended binomials.  Requires m >= 2, 1 <= r <= 2m-1.
BigMat build_A(int m, int r);

// rank_2(B_{r,1}(t)) = 1 + Trace(A^t).
BigInt rank_closed_form(int m, int r, int t);

// Same rank as a sum over H-types bounded by (2m-r, ..., 2m-r) of products
// of filtration dimensions; agrees with rank_closed_form identically.
BigInt rank_via_htypes(int m, int r, int t);

// Odd-characteristic model (r = m): d_lambda and the matrix A' whose trace
// powers give the p-rank.  p = 2 is allowed for the comparison.
BigInt d_lambda(int p, int m, int lambda);
BigMat build_A_prime(int p, int m);
BigInt rank_odd_model(int p, int m, int t);

}  // namespace sprank
