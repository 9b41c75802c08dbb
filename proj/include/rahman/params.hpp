#pragma once

#include "rahman/rational.hpp"

#include <utility>

namespace rahman {

/// The four generic parameters behind the polynomial family. Every derived
/// quantity is degree-0 homogeneous in (p1,p2,p3,p4), so a common rescaling
/// changes nothing downstream.
struct ParamSet {
    Rational p1, p2, p3, p4;
};

/// Throws DegenerateParams unless every p_i, the pairwise sums p1+p2, p1+p3,
/// p2+p4, p3+p4, and the total sum are nonzero.
void validate(const ParamSet& p);

/// p1*p4 - p2*p3 != 0. Every denominator of the frequency-space operator's
/// closed-form entries carries this factor.
bool is_generic(const ParamSet& p);

/// The variables the polynomial series is written in.
struct MappedParams {
    Rational t, u, v, w;
};

/// Trinomial weight parameters. The pair is probability-valid when
/// 0 < eta1, 0 < eta2 and eta1 + eta2 < 1; the algebraic identities hold
/// regardless, so this is reported rather than enforced.
struct WeightParams {
    Rational eta1, eta2;
    bool probability_valid = false;
};

MappedParams derive_mapped(const ParamSet& p);
WeightParams derive_weight(const ParamSet& p);

/// Parameters of the three-toss chain on N dice.
struct ChainParams {
    int N = 0;
    Rational alpha1, alpha2, beta1, beta2;
};

/// alpha_i in [0,1], beta_i >= 0, beta1 + beta2 <= 1.
bool is_probabilistic(const ChainParams& cp);

/// Strict interior: alpha_i in (0,1), beta_i > 0, beta1 + beta2 < 1.
/// The kernel has all entries positive exactly here.
bool is_interior(const ChainParams& cp);

/// The beta branch of the compatibility relations:
///
///   beta1 = eta1 (1 - alpha1) / D,  beta2 = eta2 (1 - alpha2) / D,
///   D = 1 - alpha1 eta1 - alpha2 eta2.
///
/// This map alone does not make the polynomials an eigenbasis of the
/// kernel; the alphas must in addition satisfy the link implemented by
/// compatible_alpha2. Sufficiency of the combined family is not taken on
/// faith; the eigen verification in the spectral module is the oracle that
/// confirms it. Throws DegenerateParams when D == 0.
std::pair<Rational, Rational> compatible_beta(const ParamSet& p,
                                              const Rational& alpha1,
                                              const Rational& alpha2);

/// The second compatibility relation: once (p, alpha1) are chosen the
/// eigenvalue relation pins alpha2. With lambda1 = alpha1 (t-1) / (t-alpha1),
///
///   alpha2 = lambda1 u / (lambda1 + u - 1).
///
/// Derivation: at N = 1 the chain acts directly on the three per-die
/// outcomes, and requiring K v = lambda v for the linear polynomial vectors
/// forces lambda1 = alpha1(t-1)/(t-alpha1) = alpha2(u-1)/(u-alpha2); the
/// analogous constraints in (v,w) then hold automatically on this family,
/// which the exact tests confirm at random points. Throws DegenerateParams
/// when t == alpha1 or lambda1 + u - 1 == 0.
Rational compatible_alpha2(const ParamSet& p, const Rational& alpha1);

/// Bundle N, the given alphas and the beta map into ChainParams. The pair
/// (alpha1, alpha2) is taken as given; pass a linked alpha2 if the chain is
/// meant to be diagonalized by the polynomials.
ChainParams compatible_chain(int N, const ParamSet& p,
                             const Rational& alpha1, const Rational& alpha2);

/// Fully derived compatible chain: alpha2 from the link, then the betas.
ChainParams compatible_chain(int N, const ParamSet& p, const Rational& alpha1);

} // namespace rahman
