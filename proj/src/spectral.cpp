#include "rahman/spectral.hpp"

#include "rahman/errors.hpp"
#include "rahman/kernel.hpp"
#include "rahman/polyeval.hpp"

#include <map>
#include <utility>

namespace rahman {

Rational eigenvalue(int m, int n, const MappedParams& mp,
                    const Rational& b1, const Rational& b2)
{
    return pow(1 - b1 * mp.t - b2 * mp.u, static_cast<unsigned>(m))
        * pow(1 - b1 * mp.v - b2 * mp.w, static_cast<unsigned>(n));
}

EigenReport verify_eigen(int N, const ParamSet& p,
                         const Rational& alpha1, const Rational& alpha2)
{
    const MappedParams mp = derive_mapped(p);
    const ChainParams cp = compatible_chain(N, p, alpha1, alpha2);
    const KernelMatrix kernel = build_kernel(cp, /*algebraic=*/true);
    const PolyValueMatrix poly = build_poly_matrix(N, p);
    const StateSpace space(N);

    EigenReport report;
    report.N = N;
    report.pass = true;

    for (int f = 0; f < space.size(); ++f) {
        const State freq = space.state(f);
        EigenEntry entry;
        entry.freq = freq;
        entry.lambda = eigenvalue(freq.x, freq.y, mp, cp.beta1, cp.beta2);
        entry.max_residual = 0;

        // (K v)(src) - lambda v(src), with v the polynomial values row f
        for (int src = 0; src < space.size(); ++src) {
            Rational lhs = 0;
            for (int tgt = 0; tgt < space.size(); ++tgt) {
                lhs += kernel.K.at(src, tgt) * poly.values.at(f, tgt);
            }
            const Rational residual = abs(lhs - entry.lambda * poly.values.at(f, src));
            if (residual > entry.max_residual) {
                entry.max_residual = residual;
            }
        }
        entry.exact = entry.max_residual == 0;
        if (!entry.exact) {
            report.pass = false;
        }
        report.entries.push_back(std::move(entry));
    }

    std::map<Rational, int> first_seen;
    for (int f = 0; f < space.size(); ++f) {
        auto [it, inserted] = first_seen.try_emplace(report.entries[f].lambda, f);
        if (!inserted) {
            report.lambda_collisions.emplace_back(it->second, f);
        }
    }
    report.lambdas_distinct = report.lambda_collisions.empty();
    return report;
}

GramReport verify_orthogonality(int N, const ParamSet& p)
{
    const WeightParams wp = derive_weight(p);
    const PolyValueMatrix poly = build_poly_matrix(N, p);
    const StateSpace space(N);

    std::vector<Rational> weight(static_cast<size_t>(space.size()));
    for (int s = 0; s < space.size(); ++s) {
        const State st = space.state(s);
        weight[s] = trinomial_pmf(st.x, st.y, N, wp.eta1, wp.eta2);
    }

    GramReport report;
    report.N = N;
    report.gram = poly.values * Matrix::diagonal(std::move(weight)) * poly.values.transpose();
    report.offdiagonal_zero = true;
    for (int r = 0; r < space.size(); ++r) {
        report.diagonal.push_back(report.gram.at(r, r));
        for (int c = 0; c < space.size(); ++c) {
            if (r != c && report.gram.at(r, c) != 0) {
                report.offdiagonal_zero = false;
                report.violations.emplace_back(r, c);
            }
        }
    }
    return report;
}

StationarityReport verify_stationarity(int N, const ParamSet& p,
                                       const Rational& alpha1, const Rational& alpha2)
{
    const WeightParams wp = derive_weight(p);
    const ChainParams cp = compatible_chain(N, p, alpha1, alpha2);
    const KernelMatrix kernel = build_kernel(cp, /*algebraic=*/true);
    const StateSpace space(N);

    std::vector<Rational> pi(static_cast<size_t>(space.size()));
    for (int s = 0; s < space.size(); ++s) {
        const State st = space.state(s);
        pi[s] = trinomial_pmf(st.x, st.y, N, wp.eta1, wp.eta2);
    }

    StationarityReport report;
    report.N = N;
    report.max_deviation = 0;
    for (int tgt = 0; tgt < space.size(); ++tgt) {
        Rational acc = 0;
        for (int src = 0; src < space.size(); ++src) {
            acc += pi[src] * kernel.K.at(src, tgt);
        }
        const Rational deviation = abs(acc - pi[tgt]);
        if (deviation > report.max_deviation) {
            report.max_deviation = deviation;
            report.witness = tgt;
        }
    }
    report.holds = report.max_deviation == 0;
    if (report.holds) {
        report.witness = -1;
    }
    return report;
}

} // namespace rahman
