#ifndef GRASSCALC_CLOSED_FORMS_HPP
#define GRASSCALC_CLOSED_FORMS_HPP

#include "grasscalc/bigint.hpp"

namespace grasscalc {

// Exact evaluators for the closed intersection-number formulas. Each one
// performs the final division last and asserts that it is exact.

enum class FormulaId {
  sigma1_power,        // integral of sigma_1^{k(N-k)}
  sigma1_sigma11,      // sigma_1^{kN-k^2-2} * sigma_{1,1}
  sigma1_sigma11_sq,   // sigma_1^{kN-k^2-4} * sigma_{1,1}^2
  p_moment_0,          // raw fermion integral of (tr Phi)^{kN-k^2}
  p_moment_1,          // ... (tr Phi)^{kN-k^2-2} tr(Phi^2)
  p_moment_2,          // ... (tr Phi)^{kN-k^2-4} (tr(Phi^2))^2
  q_part_1,
  q_part_2,
  q_part_3,
  g2n_family,          // k = 2 family, any sigma_{1,1} exponent
  norm_const,
};

struct FormulaResult {
  FormulaId id;
  Rational value;
};

// (kN-k^2)! * prod_{j<k} j! / prod_{j=N-k}^{N-1} j!
Integer intersect_sigma1_power(int k, int N);

// Requires kN-k^2-2 >= 0.
Integer intersect_sigma1_sigma11(int k, int N);

// Requires kN-k^2-4 >= 0.
Integer intersect_sigma1_sigma11_sq(int k, int N);

// Raw fermion integrals P_m of (tr Phi)^{kN-k^2-2m} (tr Phi^2)^m for
// m = 0, 1, 2. P_1 is negative when N < 2k.
Integer p_moment(int m, int k, int N);

struct QDecomposition {
  Integer q1;  // both trace factors diagonal
  Integer q2;  // one diagonal square against an off-diagonal pair
  Integer q3;  // two off-diagonal pairs
  Integer sum() const { return q1 + q2 + q3; }
};

// Requires kN-k^2-4 >= 0; q1+q2+q3 equals p_moment(2, k, N).
QDecomposition q_decomposition(int k, int N);

// sigma_1^{2N-4-2l} * sigma_{1,1}^l on G(2,N):
// (2(N-2-l))! / ((N-2-l)! (N-1-l)!). Requires 0 <= l <= N-2.
Integer g2n_family(int N, int l);

}  // namespace grasscalc

#endif
