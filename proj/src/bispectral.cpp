#include "rahman/bispectral.hpp"

#include "rahman/errors.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace rahman {

Matrix multiplication_diagonal(const StateSpace& space, const Rational& cx, const Rational& cy)
{
    std::vector<Rational> entries;
    entries.reserve(static_cast<size_t>(space.size()));
    for (const State& s : space.states()) {
        entries.push_back(cx * s.x + cy * s.y);
    }
    return Matrix::diagonal(std::move(entries));
}

BispectralOperator conjugate_operator(const PolyValueMatrix& P, const Matrix& D)
{
    if (D.rows() != P.values.rows() || D.cols() != P.values.cols()) {
        throw RangeError("diagonal operator has the wrong shape");
    }

    // P D P^{-1}: D is diagonal, so fold it into a column scaling first.
    Matrix scaled = P.values;
    for (int c = 0; c < scaled.cols(); ++c) {
        const Rational& d = D.at(c, c);
        for (int r = 0; r < scaled.rows(); ++r) {
            scaled.at(r, c) *= d;
        }
    }
    BispectralOperator op;
    op.N = P.N;
    op.p = P.p;
    op.B = scaled * P.inverse;

    if (D.at(0, 0) == 0) {
        for (int r = 0; r < op.B.rows(); ++r) {
            if (op.B.row_sum(r) != 0) {
                throw Error("conjugated operator row " + std::to_string(r)
                            + " has nonzero sum; implementation bug");
            }
        }
    }

    const StateSpace space(P.N);
    op.stencil = locality_check(op.B, StencilPattern::adjacency(space, true));
    return op;
}

StencilReport locality_check(const Matrix& B, const StencilPattern& pattern)
{
    if (B.rows() != pattern.dim() || B.cols() != pattern.dim()) {
        throw RangeError("matrix and pattern dimensions differ");
    }
    StencilReport report;
    for (int r = 0; r < B.rows(); ++r) {
        report.max_nonzeros_per_row = std::max(report.max_nonzeros_per_row, B.nonzeros_in_row(r));
        for (int c = 0; c < B.cols(); ++c) {
            if (B.at(r, c) != 0 && !pattern.allows(r, c)) {
                report.violations.emplace_back(r, c);
            }
        }
    }
    report.conforms = report.violations.empty();
    return report;
}

Matrix closed_form_operator_n5(const ParamSet& p)
{
    validate(p);
    if (!is_generic(p)) {
        throw DegenerateParams("closed-form entries need p1*p4 != p2*p3");
    }

    const Rational total = p.p1 + p.p2 + p.p3 + p.p4;
    const Rational delta = p.p1 * p.p4 - p.p2 * p.p3;

    // The four entry families occurring in the 21-row table; every named
    // entry is one of these with an integer multiplier between 1 and 5.
    const auto toward_higher_m = [&](int mult) -> Rational {
        return Rational(mult) * p.p1 * p.p3 * (p.p4 + p.p2) * total / ((p.p3 + p.p1) * delta);
    };
    const auto toward_higher_n = [&](int mult) -> Rational {
        return Rational(-mult) * p.p2 * (p.p3 + p.p1) * p.p4 * total / ((p.p4 + p.p2) * delta);
    };
    const auto toward_lower_m = [&](int mult) -> Rational {
        return Rational(mult) * delta / (p.p3 + p.p1);
    };
    const auto toward_lower_n = [&](int mult) -> Rational {
        return Rational(-mult) * delta / (p.p4 + p.p2);
    };

    Matrix b(21, 21);
    const auto set = [&](int r, int c, Rational v) { b.at(r, c) = std::move(v); };

    // One statement per displayed row; diagonals are filled afterwards by
    // the zero-row-sum rule.
    set(0, 1, toward_higher_m(5));   set(0, 6, toward_higher_n(5));
    set(1, 0, toward_lower_m(1));    set(1, 2, toward_higher_m(4));   set(1, 7, toward_higher_n(4));
    set(2, 1, toward_lower_m(2));    set(2, 3, toward_higher_m(3));   set(2, 8, toward_higher_n(3));
    set(3, 2, toward_lower_m(3));    set(3, 4, toward_higher_m(2));   set(3, 9, toward_higher_n(2));
    set(4, 3, toward_lower_m(4));    set(4, 5, toward_higher_m(1));   set(4, 10, toward_higher_n(1));
    set(5, 4, toward_lower_m(5));
    set(6, 0, toward_lower_n(1));    set(6, 7, toward_higher_m(4));   set(6, 11, toward_higher_n(4));
    set(7, 1, toward_lower_n(1));    set(7, 6, toward_lower_m(1));    set(7, 8, toward_higher_m(3));
    set(7, 12, toward_higher_n(3));
    set(8, 2, toward_lower_n(1));    set(8, 7, toward_lower_m(2));    set(8, 9, toward_higher_m(2));
    set(8, 13, toward_higher_n(2));
    set(9, 3, toward_lower_n(1));    set(9, 8, toward_lower_m(3));    set(9, 10, toward_higher_m(1));
    set(9, 14, toward_higher_n(1));
    set(10, 4, toward_lower_n(1));   set(10, 9, toward_lower_m(4));
    set(11, 6, toward_lower_n(2));   set(11, 12, toward_higher_m(3)); set(11, 15, toward_higher_n(3));
    set(12, 7, toward_lower_n(2));   set(12, 11, toward_lower_m(1));  set(12, 13, toward_higher_m(2));
    set(12, 16, toward_higher_n(2));
    set(13, 8, toward_lower_n(2));   set(13, 12, toward_lower_m(2));  set(13, 14, toward_higher_m(1));
    set(13, 17, toward_higher_n(1));
    set(14, 9, toward_lower_n(2));   set(14, 13, toward_lower_m(3));
    set(15, 11, toward_lower_n(3));  set(15, 16, toward_higher_m(2)); set(15, 18, toward_higher_n(2));
    set(16, 12, toward_lower_n(3));  set(16, 15, toward_lower_m(1));  set(16, 17, toward_higher_m(1));
    set(16, 19, toward_higher_n(1));
    set(17, 13, toward_lower_n(3));  set(17, 16, toward_lower_m(2));
    set(18, 15, toward_lower_n(4));  set(18, 19, toward_higher_m(1)); set(18, 20, toward_higher_n(1));
    set(19, 16, toward_lower_n(4));  set(19, 18, toward_lower_m(1));
    set(20, 18, toward_lower_n(5));

    for (int r = 0; r < 21; ++r) {
        b.at(r, r) = -b.row_sum(r);
    }
    return b;
}

namespace {

OperatorComparison compare_entrywise(Matrix computed, Matrix expected)
{
    OperatorComparison cmp;
    cmp.entries_compared = expected.rows() * expected.cols();
    for (int r = 0; r < expected.rows(); ++r) {
        for (int c = 0; c < expected.cols(); ++c) {
            if (computed.at(r, c) != expected.at(r, c)) {
                cmp.mismatches.push_back({r, c, expected.at(r, c), computed.at(r, c)});
            }
        }
    }
    cmp.match = cmp.mismatches.empty();
    cmp.computed = std::move(computed);
    cmp.closed_form = std::move(expected);
    return cmp;
}

} // namespace

OperatorComparison compare_operator_n5(const ParamSet& p)
{
    const Matrix expected = closed_form_operator_n5(p);
    const PolyValueMatrix poly = build_poly_matrix(5, p);
    const StateSpace space(5);
    const Matrix d = multiplication_diagonal(space, p.p1 + p.p2, -(p.p3 + p.p4));
    BispectralOperator op = conjugate_operator(poly, d);
    return compare_entrywise(std::move(op.B), expected);
}

namespace {

std::vector<std::pair<int, int>> nonzero_offsets(const Matrix& m, const StateSpace& space)
{
    std::set<std::pair<int, int>> offsets;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (m.at(r, c) != 0) {
                const State a = space.state(r);
                const State b = space.state(c);
                offsets.emplace(b.x - a.x, b.y - a.y);
            }
        }
    }
    return {offsets.begin(), offsets.end()};
}

} // namespace

SevenPointOperators seven_point_operators(const PolyValueMatrix& P)
{
    const StateSpace space(P.N);
    const StencilPattern seven = StencilPattern::seven_point(space);

    SevenPointOperators result;
    result.bx = conjugate_operator(P, multiplication_diagonal(space, 1, 0)).B;
    result.by = conjugate_operator(P, multiplication_diagonal(space, 0, 1)).B;
    result.x_report = locality_check(result.bx, seven);
    result.y_report = locality_check(result.by, seven);
    result.x_offsets = nonzero_offsets(result.bx, space);
    result.y_offsets = nonzero_offsets(result.by, space);
    return result;
}

CommutantBasis discover_commutant(const KernelMatrix& kernel, const StencilPattern& pattern)
{
    const int n = kernel.K.rows();
    if (pattern.dim() != n) {
        throw RangeError("pattern dimension does not match the kernel");
    }
    if (!pattern.includes_diagonal()) {
        throw RangeError("commutant pattern must include the diagonal");
    }

    const auto& unknowns = pattern.pairs();
    const int u = static_cast<int>(unknowns.size());

    // Position of each pattern pair among the unknowns.
    std::vector<int> slot(static_cast<size_t>(n) * n, -1);
    for (int idx = 0; idx < u; ++idx) {
        slot[static_cast<size_t>(unknowns[idx].first) * n + unknowns[idx].second] = idx;
    }

    // Equation (i,j):  sum_p M[i,p] K[p,j] - sum_p K[i,p] M[p,j] = 0.
    Matrix system(n * n, u);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int eq = i * n + j;
            for (int p = 0; p < n; ++p) {
                if (const int s = slot[static_cast<size_t>(i) * n + p]; s >= 0) {
                    system.at(eq, s) += kernel.K.at(p, j);
                }
                if (const int s = slot[static_cast<size_t>(p) * n + j]; s >= 0) {
                    system.at(eq, s) -= kernel.K.at(i, p);
                }
            }
        }
    }

    CommutantBasis result;
    result.cp = kernel.cp;
    result.pattern = pattern;
    result.coordinates = nullspace(std::move(system));
    result.dimension = static_cast<int>(result.coordinates.size());
    for (const auto& coords : result.coordinates) {
        Matrix m(n, n);
        for (int idx = 0; idx < u; ++idx) {
            m.at(unknowns[idx].first, unknowns[idx].second) = coords[idx];
        }
        result.basis.push_back(std::move(m));
    }

    std::vector<Rational> identity_coords(static_cast<size_t>(u));
    for (int idx = 0; idx < u; ++idx) {
        identity_coords[idx] = unknowns[idx].first == unknowns[idx].second ? 1 : 0;
    }
    result.identity_in_span = in_span(result.coordinates, identity_coords);
    return result;
}

Matrix normalize_gauge(const Matrix& M, const GaugeAnchor& first, const GaugeAnchor& second)
{
    if (M.rows() != M.cols()) {
        throw RangeError("gauge normalization needs a square matrix");
    }
    // a*M[r,c] + b*I[r,c] = value, one equation per anchor.
    const Rational m0 = M.at(first.row, first.col);
    const Rational m1 = M.at(second.row, second.col);
    const Rational i0 = first.row == first.col ? 1 : 0;
    const Rational i1 = second.row == second.col ? 1 : 0;

    const Rational det = m0 * i1 - m1 * i0;
    if (det == 0) {
        throw GaugeUnsolvable("anchor system for a*M + b*I is singular");
    }
    const Rational a = (first.value * i1 - second.value * i0) / det;
    const Rational b = (m0 * second.value - m1 * first.value) / det;

    Matrix result = M.scaled(a);
    for (int i = 0; i < result.rows(); ++i) {
        result.at(i, i) += b;
    }
    return result;
}

Matrix closed_form_commutant_n3(const Rational& a1, const Rational& a2,
                                const Rational& b1, const Rational& b2)
{
    if (a1 == 0 || b2 == 0) {
        throw DegenerateParams("closed-form commutant entries need alpha1 != 0 and beta2 != 0");
    }

    const Rational leak = b2 + b1 - 1; // common factor of the off-stencil families

    Matrix m(10, 10);
    m.at(0, 0) = 3 * (a1 * a2 * b2 - 2 * a1 * b2 + a1 * a2 * b1 - a2 * b1 - a1 * b1 - a1 * a2 + a1) / (a1 * b2);
    m.at(0, 1) = 3 * a2 * b1 / (a1 * b2);
    m.at(0, 4) = 3;
    m.at(1, 0) = (a1 - 1) * a2 * leak / (a1 * b2);
    m.at(1, 1) = (2 * a1 * a2 * b2 + a2 * b2 - 5 * a1 * b2 + 2 * a1 * a2 * b1 - a2 * b1 - 3 * a1 * b1
                  - 2 * a1 * a2 - a2 + 3 * a1) / (a1 * b2);
    m.at(1, 2) = 2 * a2 * b1 / (a1 * b2);
    m.at(1, 5) = 2;
    m.at(2, 1) = 2 * (a1 - 1) * a2 * leak / (a1 * b2);
    m.at(2, 2) = (a1 * a2 * b2 + 2 * a2 * b2 - 4 * a1 * b2 + a1 * a2 * b1 + a2 * b1 - 3 * a1 * b1
                  - a1 * a2 - 2 * a2 + 3 * a1) / (a1 * b2);
    m.at(2, 3) = a2 * b1 / (a1 * b2);
    m.at(2, 6) = 1;
    m.at(3, 2) = 3 * (a1 - 1) * a2 * leak / (a1 * b2);
    m.at(3, 3) = 3 * (a2 - a1) * leak / (a1 * b2);
    m.at(4, 0) = (a2 - 1) * leak / b2;
    m.at(4, 4) = 2 * (a1 * a2 * b2 - 2 * a1 * b2 + a1 * a2 * b1 - a2 * b1 - a1 * b1 - a1 * a2 + a1) / (a1 * b2);
    m.at(4, 5) = 2 * a2 * b1 / (a1 * b2);
    m.at(4, 7) = 2;
    m.at(5, 1) = (a2 - 1) * leak / b2;
    m.at(5, 4) = (a1 - 1) * a2 * leak / (a1 * b2);
    m.at(5, 5) = (a1 * a2 * b2 + a2 * b2 - 3 * a1 * b2 + a1 * a2 * b1 - 2 * a1 * b1 - a1 * a2 - a2
                  + 2 * a1) / (a1 * b2);
    m.at(5, 6) = a2 * b1 / (a1 * b2);
    m.at(5, 8) = 1;
    m.at(6, 2) = (a2 - 1) * leak / b2;
    m.at(6, 5) = 2 * (a1 - 1) * a2 * leak / (a1 * b2);
    m.at(6, 6) = 2 * (a2 - a1) * leak / (a1 * b2);
    m.at(7, 4) = 2 * (a2 - 1) * leak / b2;
    m.at(7, 7) = (a1 * a2 * b2 - 2 * a1 * b2 + a1 * a2 * b1 - a2 * b1 - a1 * b1 - a1 * a2 + a1) / (a1 * b2);
    m.at(7, 8) = a2 * b1 / (a1 * b2);
    m.at(7, 9) = 1;
    m.at(8, 5) = 2 * (a2 - 1) * leak / b2;
    m.at(8, 7) = (a1 - 1) * a2 * leak / (a1 * b2);
    m.at(8, 8) = (a2 - a1) * leak / (a1 * b2);
    m.at(9, 7) = 3 * (a2 - 1) * leak / b2;
    m.at(9, 9) = 0;
    return m;
}

CommutantComparison compare_commutant_n3(const Rational& a1, const Rational& a2,
                                         const Rational& b1, const Rational& b2)
{
    const Matrix expected = closed_form_commutant_n3(a1, a2, b1, b2);

    ChainParams cp;
    cp.N = 3;
    cp.alpha1 = a1;
    cp.alpha2 = a2;
    cp.beta1 = b1;
    cp.beta2 = b2;
    const KernelMatrix kernel = build_kernel(cp, /*algebraic=*/true);
    const StateSpace space(3);
    const CommutantBasis basis =
        discover_commutant(kernel, StencilPattern::adjacency(space, true));

    CommutantComparison cmp;
    cmp.dimension = basis.dimension;
    cmp.closed_form = expected;

    // Gauge representative: scale/shift a basis element with a nonzero
    // entry at ((0,0),(0,1)-neighbour position (0,4)) onto the anchors
    // (last diagonal -> 0, (0,4) -> 3).
    const GaugeAnchor zero_corner{9, 9, Rational(0)};
    const GaugeAnchor unit_step{0, 4, Rational(3)};
    for (const Matrix& candidate : basis.basis) {
        if (candidate.at(unit_step.row, unit_step.col) == 0) {
            continue;
        }
        cmp.normalized = normalize_gauge(candidate, zero_corner, unit_step);
        cmp.gauge_ok = true;
        break;
    }
    if (!cmp.gauge_ok) {
        cmp.match = false;
        return cmp;
    }

    for (int r = 0; r < 10; ++r) {
        for (int c = 0; c < 10; ++c) {
            if (cmp.normalized.at(r, c) != expected.at(r, c)) {
                cmp.mismatches.push_back({r, c, expected.at(r, c), cmp.normalized.at(r, c)});
            }
        }
    }
    cmp.match = cmp.dimension == 2 && cmp.mismatches.empty();
    return cmp;
}

} // namespace rahman
