#include "rahman/kernel.hpp"

#include "rahman/errors.hpp"
#include "rahman/statespace.hpp"

#include <algorithm>
#include <string>

namespace rahman {

Rational binomial_pmf(int k, int n, const Rational& a)
{
    if (k < 0 || n < 0 || k > n) {
        throw RangeError("binomial_pmf needs 0 <= k <= n, got k=" + std::to_string(k)
                         + ", n=" + std::to_string(n));
    }
    return Rational(binomial_coefficient(n, k))
        * pow(a, static_cast<unsigned>(k))
        * pow(1 - a, static_cast<unsigned>(n - k));
}

Rational trinomial_pmf(int i1, int i2, int N, const Rational& b1, const Rational& b2)
{
    if (i1 < 0 || i2 < 0 || N < 0 || i1 + i2 > N) {
        throw RangeError("trinomial_pmf needs i1,i2 >= 0 and i1+i2 <= N");
    }
    const int rest = N - i1 - i2;
    const Integer coeff = binomial_coefficient(N, i1) * binomial_coefficient(N - i1, i2);
    return Rational(coeff)
        * pow(b1, static_cast<unsigned>(i1))
        * pow(b2, static_cast<unsigned>(i2))
        * pow(1 - b1 - b2, static_cast<unsigned>(rest));
}

KernelMatrix build_kernel(const ChainParams& cp, bool algebraic)
{
    if (cp.N < 1) {
        throw InvalidSize("chain needs N >= 1");
    }
    if (!algebraic && !is_probabilistic(cp)) {
        throw RangeError("chain parameters outside the probabilistic regime "
                         "(pass algebraic mode to build anyway)");
    }

    const StateSpace space(cp.N);
    Matrix K(space.size(), space.size());
    for (int src = 0; src < space.size(); ++src) {
        const State from = space.state(src); // (i1, i2)
        for (int tgt = 0; tgt < space.size(); ++tgt) {
            const State to = space.state(tgt); // (j1, j2)
            Rational entry = 0;
            for (int k1 = 0; k1 <= std::min(from.x, to.x); ++k1) {
                const Rational keep1 = binomial_pmf(k1, from.x, cp.alpha1);
                if (keep1 == 0) {
                    continue;
                }
                for (int k2 = 0; k2 <= std::min(from.y, to.y); ++k2) {
                    const Rational keep2 = binomial_pmf(k2, from.y, cp.alpha2);
                    if (keep2 == 0) {
                        continue;
                    }
                    entry += keep1 * keep2
                        * trinomial_pmf(to.x - k1, to.y - k2, cp.N - k1 - k2,
                                        cp.beta1, cp.beta2);
                }
            }
            K.at(src, tgt) = std::move(entry);
        }
        if (K.row_sum(src) != 1) {
            throw StochasticityViolation("kernel row " + std::to_string(src)
                                         + " does not sum to 1; implementation bug");
        }
    }
    return KernelMatrix{cp, std::move(K)};
}

} // namespace rahman
