#pragma once

#include "rahman/matrix.hpp"
#include "rahman/params.hpp"
#include "rahman/statespace.hpp"

#include <utility>
#include <vector>

namespace rahman {

/// Closed-form kernel eigenvalue attached to frequency index (m,n):
///   (1 - b1*t - b2*u)^m * (1 - b1*v - b2*w)^n.
Rational eigenvalue(int m, int n, const MappedParams& mp,
                    const Rational& b1, const Rational& b2);

struct EigenEntry {
    State freq;            // (m,n)
    Rational lambda;
    bool exact = false;    // K v == lambda v with zero residual
    Rational max_residual; // largest |(Kv - lambda v)_i|, zero expected
};

/// Everything here is an exact identity check, never a numerical one:
/// pass means every residual is exactly zero.
struct EigenReport {
    int N = 0;
    bool pass = false;
    std::vector<EigenEntry> entries;
    bool lambdas_distinct = false;
    /// Pairs of frequency-state indices sharing an eigenvalue. Degenerate
    /// spectra exist at special parameter points; they are detected and
    /// reported, not assumed away.
    std::vector<std::pair<int, int>> lambda_collisions;
};

/// Builds the kernel with the compatible beta map, evaluates every
/// polynomial vector, and checks K v = lambda v exactly for each frequency
/// state. Failures carry witnesses. This is simultaneously the oracle that
/// validates compatible_beta.
EigenReport verify_eigen(int N, const ParamSet& p,
                         const Rational& alpha1, const Rational& alpha2);

struct GramReport {
    int N = 0;
    Matrix gram; // G[(m,n),(m',n')] = sum_(x,y) weight * P_{m,n} * P_{m',n'}
    bool offdiagonal_zero = false;
    std::vector<Rational> diagonal; // no closed form on record; reported as data
    std::vector<std::pair<int, int>> violations;
};

/// Orthogonality of the polynomial family against the trinomial weight
/// with parameters (eta1, eta2); off-diagonal Gram entries are expected to
/// vanish exactly for generic p.
GramReport verify_orthogonality(int N, const ParamSet& p);

struct StationarityReport {
    int N = 0;
    bool holds = false;
    Rational max_deviation; // largest |(pi K - pi)_i|
    int witness = -1;       // state index of the largest deviation, -1 if none
};

/// Probes whether the trinomial weight pi(x,y) = b2(x,y,N;eta1,eta2) is the
/// stationary distribution of the compatible kernel: pi K == pi, exactly.
/// The answer is recorded as a finding either way, not asserted.
StationarityReport verify_stationarity(int N, const ParamSet& p,
                                       const Rational& alpha1, const Rational& alpha2);

} // namespace rahman
