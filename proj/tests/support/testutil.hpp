#pragma once

#include "rahman/errors.hpp"
#include "rahman/params.hpp"
#include "rahman/polyeval.hpp"
#include "rahman/rational.hpp"

#include <random>
#include <stdexcept>

// Shared helpers for the unit and acceptance suites: random rational
// parameter points (identity testing happens at >= 5 independently drawn
// points, rejection on degeneracy) and an independent reversed-order
// implementation of the polynomial sum.
namespace testutil {

using rahman::ChainParams;
using rahman::MappedParams;
using rahman::ParamSet;
using rahman::Rational;

inline long uniform_long(std::mt19937_64& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// num/den with both uniform in [1, 1000].
inline Rational random_rational(std::mt19937_64& rng)
{
    return rahman::make_rational(uniform_long(rng, 1, 1000), uniform_long(rng, 1, 1000));
}

/// Nonzero signed rational with small numerator/denominator.
inline Rational random_signed_rational(std::mt19937_64& rng, long hi = 20)
{
    long num = 0;
    while (num == 0) {
        num = uniform_long(rng, -hi, hi);
    }
    return rahman::make_rational(num, uniform_long(rng, 1, hi));
}

/// Strictly inside (0,1).
inline Rational random_unit_rational(std::mt19937_64& rng)
{
    const long den = uniform_long(rng, 2, 1000);
    return rahman::make_rational(uniform_long(rng, 1, den - 1), den);
}

/// Positive generic parameter point; positivity makes every pairwise-sum
/// invariant automatic, rejection handles p1 p4 == p2 p3.
inline ParamSet random_generic_params(std::mt19937_64& rng)
{
    for (;;) {
        ParamSet p{random_rational(rng), random_rational(rng),
                   random_rational(rng), random_rational(rng)};
        if (rahman::is_generic(p)) {
            return p;
        }
    }
}

/// Signed generic parameter point with all invariants checked.
inline ParamSet random_signed_generic_params(std::mt19937_64& rng)
{
    for (;;) {
        ParamSet p{random_signed_rational(rng), random_signed_rational(rng),
                   random_signed_rational(rng), random_signed_rational(rng)};
        try {
            rahman::validate(p);
        } catch (const rahman::DegenerateParams&) {
            continue;
        }
        if (rahman::is_generic(p)) {
            return p;
        }
    }
}

/// A fully compatible chain in the strict probabilistic interior. These
/// need mixed-sign p; rejection finds one in ~16 draws.
inline ChainParams random_interior_compatible_chain(int N, std::mt19937_64& rng,
                                                    ParamSet* found_p = nullptr)
{
    for (;;) {
        const ParamSet p = random_signed_generic_params(rng);
        const Rational a1 = rahman::make_rational(uniform_long(rng, 1, 19), 20);
        try {
            ChainParams cp = rahman::compatible_chain(N, p, a1);
            if (rahman::is_interior(cp)) {
                if (found_p != nullptr) {
                    *found_p = p;
                }
                return cp;
            }
        } catch (const rahman::DegenerateParams&) {
        }
    }
}

/// Independent oracle for the polynomial values: reversed loop nesting
/// (l,k,j,i), deliberately wide ranges (i,j to m and k,l to n instead of
/// the truncation bounds), fresh Pochhammers per term. Terms beyond the
/// truncation bounds must contribute exactly zero, which this checks by
/// construction.
inline Rational rahman_poly_oracle(int m, int n, int x, int y,
                                   const MappedParams& mp, int N)
{
    using rahman::pochhammer;
    Rational total = 0;
    for (int l = n; l >= 0; --l) {
        for (int k = n; k >= 0; --k) {
            for (int j = m; j >= 0; --j) {
                for (int i = m; i >= 0; --i) {
                    const Rational numerator = pochhammer(-m, i + j) * pochhammer(-n, k + l)
                        * pochhammer(-x, i + k) * pochhammer(-y, j + l);
                    if (numerator == 0) {
                        continue;
                    }
                    const Rational denominator = Rational(rahman::factorial(i) * rahman::factorial(j)
                                                          * rahman::factorial(k) * rahman::factorial(l))
                        * pochhammer(-N, i + j + k + l);
                    if (denominator == 0) {
                        throw std::logic_error("oracle hit a vanishing denominator");
                    }
                    total += numerator / denominator
                        * rahman::pow(mp.t, i) * rahman::pow(mp.u, j)
                        * rahman::pow(mp.v, k) * rahman::pow(mp.w, l);
                }
            }
        }
    }
    return total;
}

} // namespace testutil
