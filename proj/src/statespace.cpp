#include "rahman/statespace.hpp"

#include "rahman/errors.hpp"

#include <cstdlib>
#include <string>

namespace rahman {

StateSpace::StateSpace(int N)
    : n_(N)
{
    if (N < 1) {
        throw InvalidSize("simplex size must be >= 1, got " + std::to_string(N));
    }
    states_.reserve(static_cast<size_t>(N + 1) * (N + 2) / 2);
    for (int y = 0; y <= N; ++y) {
        for (int x = 0; x + y <= N; ++x) {
            states_.push_back(State{x, y});
        }
    }
}

const State& StateSpace::state(int index) const
{
    if (index < 0 || index >= size()) {
        throw RangeError("state index out of range: " + std::to_string(index));
    }
    return states_[static_cast<size_t>(index)];
}

bool StateSpace::contains(State s) const
{
    return s.x >= 0 && s.y >= 0 && s.x + s.y <= n_;
}

int StateSpace::index_of(State s) const
{
    if (!contains(s)) {
        throw OutOfSimplex("state (" + std::to_string(s.x) + "," + std::to_string(s.y)
                           + ") outside the simplex of size " + std::to_string(n_));
    }
    // block offset of row y, then x within the block
    return s.y * (n_ + 1) - s.y * (s.y - 1) / 2 + s.x;
}

StencilPattern::StencilPattern(int dim, bool includes_diagonal)
    : dim_(dim)
    , includes_diagonal_(includes_diagonal)
    , allowed_(static_cast<size_t>(dim) * static_cast<size_t>(dim), 0)
{
}

void StencilPattern::add(int row, int col)
{
    auto& slot = allowed_[static_cast<size_t>(row) * dim_ + col];
    if (slot == 0) {
        slot = 1;
        pairs_.emplace_back(row, col);
    }
}

StencilPattern StencilPattern::adjacency(const StateSpace& space, bool with_diagonal)
{
    StencilPattern p(space.size(), with_diagonal);
    for (int r = 0; r < space.size(); ++r) {
        const State a = space.state(r);
        for (int c = 0; c < space.size(); ++c) {
            const State b = space.state(c);
            if (r == c) {
                if (with_diagonal) {
                    p.add(r, c);
                }
                continue;
            }
            if (std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1) {
                p.add(r, c);
            }
        }
    }
    return p;
}

StencilPattern StencilPattern::seven_point(const StateSpace& space)
{
    StencilPattern p(space.size(), true);
    for (int r = 0; r < space.size(); ++r) {
        const State a = space.state(r);
        for (int c = 0; c < space.size(); ++c) {
            const State b = space.state(c);
            const int dx = b.x - a.x;
            const int dy = b.y - a.y;
            const bool self = dx == 0 && dy == 0;
            const bool axis = std::abs(dx) + std::abs(dy) == 1;
            const bool antidiagonal = dx + dy == 0 && std::abs(dx) == 1;
            if (self || axis || antidiagonal) {
                p.add(r, c);
            }
        }
    }
    return p;
}

StencilPattern StencilPattern::diagonal_only(const StateSpace& space)
{
    StencilPattern p(space.size(), true);
    for (int r = 0; r < space.size(); ++r) {
        p.add(r, r);
    }
    return p;
}

StencilPattern StencilPattern::full(const StateSpace& space)
{
    StencilPattern p(space.size(), true);
    for (int r = 0; r < space.size(); ++r) {
        for (int c = 0; c < space.size(); ++c) {
            p.add(r, c);
        }
    }
    return p;
}

} // namespace rahman
