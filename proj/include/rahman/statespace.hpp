#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rahman {

struct State {
    int x = 0;
    int y = 0;
    friend bool operator==(const State&, const State&) = default;
};

/// Ordered enumeration of the discrete simplex {(x,y): x,y >= 0, x+y <= N}:
/// y ascending in blocks, x ascending within each block, (N+1)(N+2)/2 states
/// total. The same ordering serves physical space (kernel indices) and
/// frequency space (polynomial indices), so matrix index semantics never
/// depend on which side a matrix acts on.
class StateSpace {
public:
    explicit StateSpace(int N); // throws InvalidSize for N < 1

    int N() const { return n_; }
    int size() const { return static_cast<int>(states_.size()); }
    const std::vector<State>& states() const { return states_; }
    const State& state(int index) const;

    bool contains(State s) const;
    int index_of(State s) const; // throws OutOfSimplex

private:
    int n_ = 0;
    std::vector<State> states_;
};

/// A sparsity pattern over (row state, column state) pairs.
class StencilPattern {
public:
    StencilPattern() = default;

    /// Off-diagonal pairs are the lattice neighbours, one unit step in the
    /// horizontal or vertical direction; diagonal pairs included on request.
    static StencilPattern adjacency(const StateSpace& space, bool with_diagonal);

    /// Extends adjacency+diagonal by the two antidiagonal steps
    /// (+1,-1) and (-1,+1); at most seven points per row.
    static StencilPattern seven_point(const StateSpace& space);

    static StencilPattern diagonal_only(const StateSpace& space);
    static StencilPattern full(const StateSpace& space);

    int dim() const { return dim_; }
    bool includes_diagonal() const { return includes_diagonal_; }
    bool allows(int row, int col) const { return allowed_[static_cast<size_t>(row) * dim_ + col] != 0; }

    /// Allowed pairs in row-major order; this fixes the unknown ordering of
    /// the commutant solver.
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    int count() const { return static_cast<int>(pairs_.size()); }

private:
    StencilPattern(int dim, bool includes_diagonal);
    void add(int row, int col);

    int dim_ = 0;
    bool includes_diagonal_ = false;
    std::vector<std::uint8_t> allowed_;
    std::vector<std::pair<int, int>> pairs_;
};

} // namespace rahman
