#include "rahman/params.hpp"

#include "rahman/errors.hpp"

namespace rahman {

void validate(const ParamSet& p)
{
    if (p.p1 == 0 || p.p2 == 0 || p.p3 == 0 || p.p4 == 0) {
        throw DegenerateParams("every p_i must be nonzero");
    }
    if (p.p1 + p.p2 == 0 || p.p1 + p.p3 == 0 || p.p2 + p.p4 == 0 || p.p3 + p.p4 == 0) {
        throw DegenerateParams("a pairwise sum p1+p2, p1+p3, p2+p4 or p3+p4 vanishes");
    }
    if (p.p1 + p.p2 + p.p3 + p.p4 == 0) {
        throw DegenerateParams("p1+p2+p3+p4 must be nonzero");
    }
}

bool is_generic(const ParamSet& p)
{
    return p.p1 * p.p4 - p.p2 * p.p3 != 0;
}

MappedParams derive_mapped(const ParamSet& p)
{
    validate(p);
    const Rational total = p.p1 + p.p2 + p.p3 + p.p4;
    MappedParams mp;
    mp.t = (p.p1 + p.p2) * (p.p1 + p.p3) / (p.p1 * total);
    mp.u = (p.p1 + p.p3) * (p.p4 + p.p3) / (p.p3 * total);
    mp.v = (p.p1 + p.p2) * (p.p2 + p.p4) / (p.p2 * total);
    mp.w = (p.p4 + p.p2) * (p.p4 + p.p3) / (p.p4 * total);
    return mp;
}

WeightParams derive_weight(const ParamSet& p)
{
    validate(p);
    const Rational total = p.p1 + p.p2 + p.p3 + p.p4;
    WeightParams wp;
    wp.eta1 = p.p1 * p.p2 * total / ((p.p1 + p.p2) * (p.p1 + p.p3) * (p.p2 + p.p4));
    wp.eta2 = p.p3 * p.p4 * total / ((p.p1 + p.p3) * (p.p4 + p.p2) * (p.p4 + p.p3));
    wp.probability_valid = wp.eta1 > 0 && wp.eta2 > 0 && wp.eta1 + wp.eta2 < 1;
    return wp;
}

bool is_probabilistic(const ChainParams& cp)
{
    return cp.N >= 1
        && cp.alpha1 >= 0 && cp.alpha1 <= 1
        && cp.alpha2 >= 0 && cp.alpha2 <= 1
        && cp.beta1 >= 0 && cp.beta2 >= 0
        && cp.beta1 + cp.beta2 <= 1;
}

bool is_interior(const ChainParams& cp)
{
    return cp.N >= 1
        && cp.alpha1 > 0 && cp.alpha1 < 1
        && cp.alpha2 > 0 && cp.alpha2 < 1
        && cp.beta1 > 0 && cp.beta2 > 0
        && cp.beta1 + cp.beta2 < 1;
}

std::pair<Rational, Rational> compatible_beta(const ParamSet& p,
                                              const Rational& alpha1,
                                              const Rational& alpha2)
{
    const WeightParams wp = derive_weight(p);
    const Rational d = 1 - alpha1 * wp.eta1 - alpha2 * wp.eta2;
    if (d == 0) {
        throw DegenerateParams("compatibility denominator 1 - a1*eta1 - a2*eta2 vanishes");
    }
    return {wp.eta1 * (1 - alpha1) / d, wp.eta2 * (1 - alpha2) / d};
}

Rational compatible_alpha2(const ParamSet& p, const Rational& alpha1)
{
    const MappedParams mp = derive_mapped(p);
    if (mp.t == alpha1) {
        throw DegenerateParams("alpha link undefined: t == alpha1");
    }
    const Rational lambda1 = alpha1 * (mp.t - 1) / (mp.t - alpha1);
    if (lambda1 + mp.u - 1 == 0) {
        throw DegenerateParams("alpha link undefined: lambda1 + u - 1 == 0");
    }
    return lambda1 * mp.u / (lambda1 + mp.u - 1);
}

ChainParams compatible_chain(int N, const ParamSet& p,
                             const Rational& alpha1, const Rational& alpha2)
{
    auto [b1, b2] = compatible_beta(p, alpha1, alpha2);
    ChainParams cp;
    cp.N = N;
    cp.alpha1 = alpha1;
    cp.alpha2 = alpha2;
    cp.beta1 = std::move(b1);
    cp.beta2 = std::move(b2);
    return cp;
}

ChainParams compatible_chain(int N, const ParamSet& p, const Rational& alpha1)
{
    return compatible_chain(N, p, alpha1, compatible_alpha2(p, alpha1));
}

} // namespace rahman
