#pragma once

#include "rahman/rational.hpp"

#include <optional>
#include <vector>

namespace rahman {

/// Dense matrix over Rational. Which ordering the rows/columns carry
/// (source vs target state, frequency vs physical index) is fixed by the
/// module that builds each matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols); // zero-filled

    static Matrix identity(int n);
    static Matrix diagonal(std::vector<Rational> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }

    Matrix transpose() const;
    Rational row_sum(int r) const;
    bool is_zero() const;
    int nonzeros_in_row(int r) const;

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    Matrix scaled(const Rational& c) const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact determinant by rational elimination.
Rational determinant(Matrix a);

/// Exact inverse, or nullopt when singular.
std::optional<Matrix> try_inverse(const Matrix& a);

int rank(Matrix a);

/// Basis of {v : A v = 0}, produced deterministically from the reduced
/// echelon form (one vector per free column). Empty when A has full
/// column rank.
std::vector<std::vector<Rational>> nullspace(Matrix a);

/// Whether v lies in the span of the given vectors; all exact.
bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v);

} // namespace rahman
