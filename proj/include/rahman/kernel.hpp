#pragma once

#include "rahman/matrix.hpp"
#include "rahman/params.hpp"

namespace rahman {

/// C(n,k) a^k (1-a)^(n-k), exact. Throws RangeError unless 0 <= k <= n.
Rational binomial_pmf(int k, int n, const Rational& a);

/// Three-outcome multinomial over N trials:
///   b1^i1 b2^i2 (1-b1-b2)^(N-i1-i2) * N! / (i1! i2! (N-i1-i2)!).
/// Throws RangeError unless i1, i2 >= 0 and i1+i2 <= N.
Rational trinomial_pmf(int i1, int i2, int N, const Rational& b1, const Rational& b2);

/// One-step transition matrix of the three-toss chain. Rows are source
/// states (i1,i2), columns are target states (j1,j2), both in StateSpace
/// order; acting on a column vector of per-state values sums over targets
/// for a fixed source.
struct KernelMatrix {
    ChainParams cp;
    Matrix K;
};

/// Entry (source (i1,i2), target (j1,j2)):
///
///   sum_{k1=0}^{min(i1,j1)} sum_{k2=0}^{min(i2,j2)}
///     b(k1,i1;alpha1) b(k2,i2;alpha2)
///     b2(j1-k1, j2-k2, N-k1-k2; beta1, beta2)
///
/// i.e. keep a binomial number of reds and blacks, rethrow the rest.
/// Row sums are exactly 1 for any rational parameters (binomial and
/// multinomial theorems), and this is asserted; a violation throws
/// StochasticityViolation and means the implementation is broken.
///
/// Parameters outside the probabilistic regime are rejected with
/// RangeError unless algebraic = true.
KernelMatrix build_kernel(const ChainParams& cp, bool algebraic = false);

} // namespace rahman
