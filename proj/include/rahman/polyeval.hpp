#pragma once

#include "rahman/matrix.hpp"
#include "rahman/params.hpp"
#include "rahman/statespace.hpp"

namespace rahman {

/// Rising factorial a(a+1)...(a+n-1); the empty product is 1. With a a
/// nonpositive integer this truncates series: pochhammer(-m, s) == 0 for
/// s > m.
Rational pochhammer(const Rational& a, unsigned n);

/// Exact value of the degree-(m+n) polynomial with frequency index (m,n)
/// at the lattice point (x,y):
///
///   sum over i,j,k,l of
///     (-m)_{i+j} (-n)_{k+l} (-x)_{i+k} (-y)_{j+l}
///     / ( i! j! k! l! (-N)_{i+j+k+l} ) * t^i u^j v^k w^l.
///
/// The sum truncates on its own: the numerator factors vanish beyond
/// i+j <= m, k+l <= n, i+k <= x, j+l <= y. Inside the simplex the
/// denominator factor (-N)_{i+j+k+l} never reaches zero first, because
/// i+j+k+l <= m+n <= N. A term whose denominator Pochhammer vanishes
/// together with its numerator counts as 0; denominator-only vanishing is
/// a VanishingDenominator error.
///
/// Throws OutOfSimplex unless both (m,n) and (x,y) lie in the simplex.
Rational rahman_poly(int m, int n, int x, int y, const MappedParams& mp, int N);

/// All polynomial values on the simplex: rows are frequency states (m,n),
/// columns are physical states (x,y), both in StateSpace order. The first
/// row and the first column are all ones. Invertibility is required by the
/// conjugation construction and is checked here by exact elimination, never
/// assumed; the exact inverse is kept for reuse.
struct PolyValueMatrix {
    int N = 0;
    ParamSet p;
    Matrix values;
    Matrix inverse;
};

/// Throws DegenerateParams for non-generic p and SingularPolyMatrix (with
/// the parameter point in the message) if the value matrix is singular.
PolyValueMatrix build_poly_matrix(int N, const ParamSet& p);

} // namespace rahman
