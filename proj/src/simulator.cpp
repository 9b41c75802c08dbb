#include "rahman/simulator.hpp"

#include "rahman/errors.hpp"
#include "rahman/statespace.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace rahman {

double uniform01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Sampler::Sampler(const ChainParams& cp)
    : cp_(cp)
{
    if (!is_probabilistic(cp)) {
        throw RangeError("sampling needs probabilistic chain parameters");
    }

    keep_red_.resize(cp.N + 1);
    keep_black_.resize(cp.N + 1);
    rethrow_pmf_.resize(cp.N + 1);
    rethrow_outcomes_.resize(cp.N + 1);
    for (int n = 0; n <= cp.N; ++n) {
        keep_red_[n].reserve(n + 1);
        keep_black_[n].reserve(n + 1);
        for (int k = 0; k <= n; ++k) {
            keep_red_[n].push_back(to_double(binomial_pmf(k, n, cp.alpha1)));
            keep_black_[n].push_back(to_double(binomial_pmf(k, n, cp.alpha2)));
        }
        for (int a2 = 0; a2 <= n; ++a2) {
            for (int a1 = 0; a1 + a2 <= n; ++a1) {
                rethrow_pmf_[n].push_back(
                    to_double(trinomial_pmf(a1, a2, n, cp.beta1, cp.beta2)));
                rethrow_outcomes_[n].push_back(ChainState{a1, a2});
            }
        }
    }
}

int Sampler::sample_binomial(const std::vector<std::vector<double>>& table, int n,
                             std::mt19937_64& rng) const
{
    const double u = uniform01(rng);
    double cumulative = 0.0;
    for (int k = 0; k <= n; ++k) {
        cumulative += table[n][k];
        if (u < cumulative) {
            return k;
        }
    }
    return n; // u beyond the rounded total mass
}

StepDetail Sampler::step_detailed(ChainState s, std::mt19937_64& rng) const
{
    if (s.i1 < 0 || s.i2 < 0 || s.i1 + s.i2 > cp_.N) {
        throw OutOfSimplex("chain state (" + std::to_string(s.i1) + ","
                           + std::to_string(s.i2) + ") invalid for N = "
                           + std::to_string(cp_.N));
    }

    StepDetail d;
    d.k1 = sample_binomial(keep_red_, s.i1, rng);
    d.k2 = sample_binomial(keep_black_, s.i2, rng);

    const int pool = cp_.N - d.k1 - d.k2;
    const double u = uniform01(rng);
    double cumulative = 0.0;
    size_t chosen = rethrow_pmf_[pool].size() - 1;
    for (size_t idx = 0; idx < rethrow_pmf_[pool].size(); ++idx) {
        cumulative += rethrow_pmf_[pool][idx];
        if (u < cumulative) {
            chosen = idx;
            break;
        }
    }
    d.add1 = rethrow_outcomes_[pool][chosen].i1;
    d.add2 = rethrow_outcomes_[pool][chosen].i2;
    d.next = ChainState{d.k1 + d.add1, d.k2 + d.add2};
    return d;
}

ChainState Sampler::step(ChainState s, std::mt19937_64& rng) const
{
    return step_detailed(s, rng).next;
}

ChainState step(ChainState s, const ChainParams& cp, std::mt19937_64& rng)
{
    return Sampler(cp).step(s, rng);
}

StepDetail step_detailed(ChainState s, const ChainParams& cp, std::mt19937_64& rng)
{
    return Sampler(cp).step_detailed(s, rng);
}

TransitionCounts run_chain(ChainState s0, std::uint64_t steps, const ChainParams& cp,
                           std::uint64_t seed)
{
    if (steps < 1) {
        throw RangeError("run_chain needs steps >= 1");
    }
    const Sampler sampler(cp);
    const StateSpace space(cp.N);

    TransitionCounts tc;
    tc.N = cp.N;
    tc.steps = steps;
    tc.counts.assign(space.size(), std::vector<std::uint64_t>(space.size(), 0));
    tc.visits.assign(space.size(), 0);

    std::mt19937_64 rng(seed);
    ChainState current = s0;
    int src = space.index_of(State{current.i1, current.i2});
    for (std::uint64_t i = 0; i < steps; ++i) {
        current = sampler.step(current, rng);
        const int tgt = space.index_of(State{current.i1, current.i2});
        ++tc.counts[src][tgt];
        ++tc.visits[src];
        src = tgt;
    }
    return tc;
}

ChiSquareReport chi_square_vs_kernel(const TransitionCounts& tc, const KernelMatrix& kernel,
                                     std::uint64_t min_visits, double significance)
{
    if (tc.N != kernel.cp.N) {
        throw RangeError("counts and kernel have different N");
    }
    const int n = kernel.K.rows();

    ChiSquareReport report;
    report.min_visits = min_visits;
    report.significance = significance;
    report.all_pass = true;

    for (int src = 0; src < n; ++src) {
        ChiSquareRow row;
        row.source = src;
        row.visits = tc.visits[src];
        row.sufficient = row.visits >= min_visits;
        if (!row.sufficient) {
            report.rows.push_back(row);
            continue;
        }

        double statistic = 0.0;
        int cells = 0;
        bool impossible_observed = false;
        for (int tgt = 0; tgt < n; ++tgt) {
            const double prob = to_double(kernel.K.at(src, tgt));
            const double observed = static_cast<double>(tc.counts[src][tgt]);
            if (prob == 0.0) {
                if (observed > 0) {
                    impossible_observed = true; // mass where the kernel has none
                }
                continue;
            }
            const double expected = prob * static_cast<double>(row.visits);
            statistic += (observed - expected) * (observed - expected) / expected;
            ++cells;
        }
        row.dof = cells - 1;
        if (impossible_observed) {
            row.statistic = std::numeric_limits<double>::infinity();
            row.p_value = 0.0;
            row.pass = false;
        } else {
            row.statistic = statistic;
            row.p_value = row.dof > 0
                ? boost::math::gamma_q(row.dof / 2.0, statistic / 2.0)
                : 1.0;
            row.pass = row.p_value >= significance;
        }
        if (!row.pass) {
            report.all_pass = false;
        }
        report.rows.push_back(row);
    }
    return report;
}

} // namespace rahman
