#pragma once

#include "rahman/kernel.hpp"
#include "rahman/params.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace rahman {

/// Counts of red and black faces among the N dice.
struct ChainState {
    int i1 = 0;
    int i2 = 0;
    friend bool operator==(const ChainState&, const ChainState&) = default;
};

/// Generator identity recorded in every summary for reproducibility: a
/// mt19937_64 stream mapped to [0,1) doubles through the top 53 bits.
inline constexpr const char* kRngAlgorithm = "mt19937_64/53bit";

double uniform01(std::mt19937_64& rng);

/// Internals of one move, for distribution tests on the sub-draws.
struct StepDetail {
    int k1 = 0;   // reds that reproduced
    int k2 = 0;   // blacks that reproduced
    int add1 = 0; // reds from the rethrow
    int add2 = 0; // blacks from the rethrow
    ChainState next;
};

/// Sampling tables for one parameter set. Exact rational probabilities are
/// converted to double once, here; all exactness claims live in the kernel
/// module, not in the sampler.
class Sampler {
public:
    explicit Sampler(const ChainParams& cp); // requires the probabilistic regime

    const ChainParams& params() const { return cp_; }

    /// One move: keep binomial(i1, alpha1) reds and binomial(i2, alpha2)
    /// blacks, rethrow the remaining N-k1-k2 dice with (beta1, beta2).
    ChainState step(ChainState s, std::mt19937_64& rng) const;
    StepDetail step_detailed(ChainState s, std::mt19937_64& rng) const;

private:
    int sample_binomial(const std::vector<std::vector<double>>& table, int n,
                        std::mt19937_64& rng) const;

    ChainParams cp_;
    std::vector<std::vector<double>> keep_red_;   // [n][k], alpha1
    std::vector<std::vector<double>> keep_black_; // [n][k], alpha2
    // Rethrow outcomes for each pool size, in simplex order.
    std::vector<std::vector<double>> rethrow_pmf_;
    std::vector<std::vector<ChainState>> rethrow_outcomes_;
};

/// Convenience single-shot forms; loops should hold a Sampler instead.
ChainState step(ChainState s, const ChainParams& cp, std::mt19937_64& rng);
StepDetail step_detailed(ChainState s, const ChainParams& cp, std::mt19937_64& rng);

struct TransitionCounts {
    int N = 0;
    std::uint64_t steps = 0;
    std::vector<std::vector<std::uint64_t>> counts; // counts[source][target]
    std::vector<std::uint64_t> visits;              // row sums of counts
};

/// Deterministic given (s0, steps, cp, seed).
TransitionCounts run_chain(ChainState s0, std::uint64_t steps, const ChainParams& cp,
                           std::uint64_t seed);

struct ChiSquareRow {
    int source = 0;
    std::uint64_t visits = 0;
    bool sufficient = false; // visits >= min_visits
    double statistic = 0.0;
    int dof = 0;
    double p_value = 0.0;
    bool pass = false;
};

struct ChiSquareReport {
    std::uint64_t min_visits = 0;
    double significance = 0.0;
    bool all_pass = false; // over sufficient rows
    std::vector<ChiSquareRow> rows;
};

/// Pearson chi-square of each sufficiently visited source row against the
/// exact kernel row. The one place in the library where exact rationals
/// become floating point for a statistical decision.
ChiSquareReport chi_square_vs_kernel(const TransitionCounts& tc, const KernelMatrix& kernel,
                                     std::uint64_t min_visits, double significance);

} // namespace rahman
