#include "rahman/polyeval.hpp"

#include "rahman/errors.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace rahman {

Rational pochhammer(const Rational& a, unsigned n)
{
    Rational result = 1;
    Rational factor = a;
    for (unsigned i = 0; i < n; ++i) {
        result *= factor;
        factor += 1;
    }
    return result;
}

namespace {

std::vector<Rational> pochhammer_table(int arg, int length)
{
    std::vector<Rational> table(static_cast<size_t>(length) + 1);
    table[0] = 1;
    Rational factor = arg;
    for (int s = 1; s <= length; ++s) {
        table[s] = table[s - 1] * factor;
        factor += 1;
    }
    return table;
}

std::vector<Rational> power_table(const Rational& base, int max_exponent)
{
    std::vector<Rational> table(static_cast<size_t>(max_exponent) + 1);
    table[0] = 1;
    for (int e = 1; e <= max_exponent; ++e) {
        table[e] = table[e - 1] * base;
    }
    return table;
}

void require_in_simplex(int a, int b, int N, const char* what)
{
    if (a < 0 || b < 0 || a + b > N) {
        throw OutOfSimplex(std::string(what) + " (" + std::to_string(a) + ","
                           + std::to_string(b) + ") outside the simplex of size "
                           + std::to_string(N));
    }
}

} // namespace

Rational rahman_poly(int m, int n, int x, int y, const MappedParams& mp, int N)
{
    if (N < 1) {
        throw InvalidSize("simplex size must be >= 1");
    }
    require_in_simplex(m, n, N, "frequency index");
    require_in_simplex(x, y, N, "lattice point");

    const auto poch_m = pochhammer_table(-m, m);
    const auto poch_n = pochhammer_table(-n, n);
    const auto poch_x = pochhammer_table(-x, std::min(m + n, x));
    const auto poch_y = pochhammer_table(-y, std::min(m + n, y));
    const auto poch_big = pochhammer_table(-N, m + n);

    const auto t_pow = power_table(mp.t, std::min(m, x));
    const auto u_pow = power_table(mp.u, std::min(m, y));
    const auto v_pow = power_table(mp.v, std::min(n, x));
    const auto w_pow = power_table(mp.w, std::min(n, y));

    std::vector<Rational> inv_factorial(static_cast<size_t>(std::max(m, n)) + 1);
    Rational fac = 1;
    inv_factorial[0] = 1;
    for (int s = 1; s <= std::max(m, n); ++s) {
        fac *= s;
        inv_factorial[s] = Rational(1) / fac;
    }

    // i,j,k,l nested with early truncation; an independent reversed-order
    // summation lives in the tests as a cross-check on these bounds.
    Rational total = 0;
    for (int i = 0; i <= std::min(m, x); ++i) {
        for (int j = 0; j <= std::min(m - i, y); ++j) {
            const Rational mij = poch_m[i + j] * inv_factorial[i] * inv_factorial[j] * t_pow[i] * u_pow[j];
            if (mij == 0) {
                continue;
            }
            for (int k = 0; k <= std::min(n, x - i); ++k) {
                const Rational mijk = mij * poch_x[i + k] * inv_factorial[k] * v_pow[k];
                if (mijk == 0) {
                    continue;
                }
                for (int l = 0; l <= std::min(n - k, y - j); ++l) {
                    Rational numerator = mijk * poch_n[k + l] * poch_y[j + l]
                        * inv_factorial[l] * w_pow[l];
                    if (numerator == 0) {
                        continue;
                    }
                    const Rational& denom = poch_big[i + j + k + l];
                    if (denom == 0) {
                        throw VanishingDenominator(
                            "(-N) Pochhammer vanishes against a nonzero numerator at ("
                            + std::to_string(i) + "," + std::to_string(j) + ","
                            + std::to_string(k) + "," + std::to_string(l) + ")");
                    }
                    total += numerator / denom;
                }
            }
        }
    }
    return total;
}

PolyValueMatrix build_poly_matrix(int N, const ParamSet& p)
{
    validate(p);
    if (!is_generic(p)) {
        throw DegenerateParams("p1*p4 == p2*p3: parameter point is not generic");
    }
    const MappedParams mp = derive_mapped(p);
    const StateSpace space(N);

    Matrix values(space.size(), space.size());
    for (int r = 0; r < space.size(); ++r) {
        const State freq = space.state(r);
        for (int c = 0; c < space.size(); ++c) {
            const State phys = space.state(c);
            values.at(r, c) = rahman_poly(freq.x, freq.y, phys.x, phys.y, mp, N);
        }
    }

    auto inv = try_inverse(values);
    if (!inv) {
        throw SingularPolyMatrix("polynomial value matrix singular at p = ("
                                 + to_string(p.p1) + ", " + to_string(p.p2) + ", "
                                 + to_string(p.p3) + ", " + to_string(p.p4) + "), N = "
                                 + std::to_string(N));
    }
    return PolyValueMatrix{N, p, std::move(values), std::move(*inv)};
}

} // namespace rahman
