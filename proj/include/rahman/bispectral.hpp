#pragma once

#include "rahman/kernel.hpp"
#include "rahman/matrix.hpp"
#include "rahman/params.hpp"
#include "rahman/polyeval.hpp"
#include "rahman/statespace.hpp"

#include <utility>
#include <vector>

namespace rahman {

/// Sparsity classification of an operator against a prescribed pattern.
struct StencilReport {
    int max_nonzeros_per_row = 0;
    /// Positions outside the pattern holding nonzero values.
    std::vector<std::pair<int, int>> violations;
    bool conforms = false;
};

/// Diagonal matrix with entry cx*x + cy*y at state (x,y).
Matrix multiplication_diagonal(const StateSpace& space, const Rational& cx, const Rational& cy);

/// Difference operator acting on frequency indices (m,n).
struct BispectralOperator {
    int N = 0;
    ParamSet p;
    Matrix B;
    StencilReport stencil; // against adjacency + diagonal
};

/// The unique matrix B with B * P = P * D, computed as P D P^{-1}. Locality
/// is then a discovered property of B, classified in the attached stencil
/// report, never an assumption of the construction. When D vanishes at
/// state (0,0) the rows of B sum to exactly zero (the all-ones column of P
/// sits at that state); this is re-verified.
BispectralOperator conjugate_operator(const PolyValueMatrix& P, const Matrix& D);

StencilReport locality_check(const Matrix& B, const StencilPattern& pattern);

struct EntryMismatch {
    int row = 0;
    int col = 0;
    Rational expected;
    Rational computed;
};

/// Closed-form 21x21 frequency operator for N = 5, multiplication function
/// (p1+p2)x - (p3+p4)y, with each diagonal completed by the zero-row-sum
/// rule. Throws DegenerateParams when p1*p4 == p2*p3.
Matrix closed_form_operator_n5(const ParamSet& p);

struct OperatorComparison {
    bool match = false;
    int entries_compared = 0;
    std::vector<EntryMismatch> mismatches;
    Matrix computed;
    Matrix closed_form;
};

/// Conjugation-built B at N = 5 against the closed-form entry table,
/// entry by entry, exact equality expected.
OperatorComparison compare_operator_n5(const ParamSet& p);

struct SevenPointOperators {
    Matrix bx; // P diag(x) P^{-1}
    Matrix by; // P diag(y) P^{-1}
    StencilReport x_report; // against the seven-point pattern
    StencilReport y_report;
    std::vector<std::pair<int, int>> x_offsets; // (dm,dn) steps carrying nonzeros
    std::vector<std::pair<int, int>> y_offsets;
};

/// Multiplication by x and by y conjugated into frequency space. Each row
/// is expected to touch at most seven points; the discovered offset sets
/// are reported.
SevenPointOperators seven_point_operators(const PolyValueMatrix& P);

/// Solution space of M K = K M with M restricted to a sparsity pattern.
struct CommutantBasis {
    ChainParams cp;
    StencilPattern pattern;
    int dimension = 0;
    std::vector<Matrix> basis;
    /// Coordinates of each basis matrix in pattern-pair order.
    std::vector<std::vector<Rational>> coordinates;
    bool identity_in_span = false;
};

/// Exact nullspace of the vectorized commutator system over the pattern
/// unknowns. The dimension is reported, never assumed; an empty basis is a
/// valid outcome. Requires the pattern to include the diagonal so that the
/// identity is representable.
CommutantBasis discover_commutant(const KernelMatrix& kernel, const StencilPattern& pattern);

struct GaugeAnchor {
    int row = 0;
    int col = 0;
    Rational value;
};

/// Member of the family a*M + b*I matching both anchors exactly. Throws
/// GaugeUnsolvable when the 2x2 anchor system is singular or inconsistent.
Matrix normalize_gauge(const Matrix& M, const GaugeAnchor& first, const GaugeAnchor& second);

/// Closed-form 10x10 local commutant representative for N = 3 in the gauge
/// fixed by (last diagonal entry -> 0, entry ((0,0),(0,1)) -> 3). Requires
/// alpha1 != 0 and beta2 != 0.
Matrix closed_form_commutant_n3(const Rational& alpha1, const Rational& alpha2,
                                const Rational& beta1, const Rational& beta2);

struct CommutantComparison {
    bool match = false;
    int dimension = 0;
    bool gauge_ok = false;
    std::vector<EntryMismatch> mismatches;
    Matrix normalized;
    Matrix closed_form;
};

/// Discovers the local commutant at N = 3, expects dimension 2, gauge-fixes
/// it and compares with the closed-form representative entry by entry.
CommutantComparison compare_commutant_n3(const Rational& alpha1, const Rational& alpha2,
                                         const Rational& beta1, const Rational& beta2);

} // namespace rahman
