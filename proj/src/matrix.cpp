#include "rahman/matrix.hpp"

#include "rahman/errors.hpp"

#include <algorithm>
#include <utility>

namespace rahman {

Matrix::Matrix(int rows, int cols)
    : rows_(rows)
    , cols_(cols)
    , data_(static_cast<size_t>(rows) * static_cast<size_t>(cols))
{
    if (rows < 0 || cols < 0) {
        throw RangeError("negative matrix dimension");
    }
}

Matrix Matrix::identity(int n)
{
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

Matrix Matrix::diagonal(std::vector<Rational> entries)
{
    const int n = static_cast<int>(entries.size());
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = std::move(entries[i]);
    }
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            t.at(c, r) = at(r, c);
        }
    }
    return t;
}

Rational Matrix::row_sum(int r) const
{
    Rational s = 0;
    for (int c = 0; c < cols_; ++c) {
        s += at(r, c);
    }
    return s;
}

bool Matrix::is_zero() const
{
    for (const Rational& q : data_) {
        if (q != 0) {
            return false;
        }
    }
    return true;
}

int Matrix::nonzeros_in_row(int r) const
{
    int count = 0;
    for (int c = 0; c < cols_; ++c) {
        if (at(r, c) != 0) {
            ++count;
        }
    }
    return count;
}

Matrix Matrix::operator+(const Matrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw RangeError("matrix shape mismatch in +");
    }
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) {
        r.data_[i] = data_[i] + other.data_[i];
    }
    return r;
}

Matrix Matrix::operator-(const Matrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw RangeError("matrix shape mismatch in -");
    }
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) {
        r.data_[i] = data_[i] - other.data_[i];
    }
    return r;
}

Matrix Matrix::operator*(const Matrix& other) const
{
    if (cols_ != other.rows_) {
        throw RangeError("matrix shape mismatch in *");
    }
    Matrix r(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) {
                continue;
            }
            for (int j = 0; j < other.cols_; ++j) {
                const Rational& bkj = other.at(k, j);
                if (bkj != 0) {
                    r.at(i, j) += aik * bkj;
                }
            }
        }
    }
    return r;
}

Matrix Matrix::scaled(const Rational& c) const
{
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) {
        r.data_[i] = data_[i] * c;
    }
    return r;
}

namespace {

// Pivoting on the operand with the fewest limbs keeps intermediate
// fractions small during exact elimination.
size_t operand_weight(const Rational& q)
{
    return mpz_size(q.get_num().get_mpz_t()) + mpz_size(q.get_den().get_mpz_t());
}

void swap_rows(Matrix& a, int r1, int r2)
{
    if (r1 == r2) {
        return;
    }
    for (int c = 0; c < a.cols(); ++c) {
        std::swap(a.at(r1, c), a.at(r2, c));
    }
}

// In-place reduced row echelon form; returns the pivot column per pivot row.
std::vector<int> reduce(Matrix& a)
{
    std::vector<int> pivot_cols;
    const int m = a.rows();
    const int n = a.cols();
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int best = -1;
        size_t best_weight = 0;
        for (int r = row; r < m; ++r) {
            if (a.at(r, col) != 0) {
                const size_t w = operand_weight(a.at(r, col));
                if (best < 0 || w < best_weight) {
                    best = r;
                    best_weight = w;
                }
            }
        }
        if (best < 0) {
            continue;
        }
        swap_rows(a, row, best);

        const Rational pivot = a.at(row, col);
        a.at(row, col) = 1;
        for (int c = col + 1; c < n; ++c) {
            if (a.at(row, c) != 0) {
                a.at(row, c) /= pivot;
            }
        }
        for (int r = 0; r < m; ++r) {
            if (r == row || a.at(r, col) == 0) {
                continue;
            }
            const Rational factor = a.at(r, col);
            a.at(r, col) = 0;
            for (int c = col + 1; c < n; ++c) {
                if (a.at(row, c) != 0) {
                    a.at(r, c) -= factor * a.at(row, c);
                }
            }
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

} // namespace

Rational determinant(Matrix a)
{
    if (a.rows() != a.cols()) {
        throw RangeError("determinant of non-square matrix");
    }
    const int n = a.rows();
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int best = -1;
        size_t best_weight = 0;
        for (int r = col; r < n; ++r) {
            if (a.at(r, col) != 0) {
                const size_t w = operand_weight(a.at(r, col));
                if (best < 0 || w < best_weight) {
                    best = r;
                    best_weight = w;
                }
            }
        }
        if (best < 0) {
            return 0;
        }
        if (best != col) {
            swap_rows(a, col, best);
            det = -det;
        }
        const Rational& pivot = a.at(col, col);
        det *= pivot;
        for (int r = col + 1; r < n; ++r) {
            if (a.at(r, col) == 0) {
                continue;
            }
            const Rational factor = a.at(r, col) / pivot;
            a.at(r, col) = 0;
            for (int c = col + 1; c < n; ++c) {
                if (a.at(col, c) != 0) {
                    a.at(r, c) -= factor * a.at(col, c);
                }
            }
        }
    }
    return det;
}

std::optional<Matrix> try_inverse(const Matrix& a)
{
    if (a.rows() != a.cols()) {
        throw RangeError("inverse of non-square matrix");
    }
    const int n = a.rows();
    if (n == 0) {
        return Matrix(0, 0);
    }
    Matrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            aug.at(r, c) = a.at(r, c);
        }
        aug.at(r, n + r) = 1;
    }
    const std::vector<int> pivots = reduce(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) {
        return std::nullopt;
    }
    Matrix inv(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            inv.at(r, c) = aug.at(r, n + c);
        }
    }
    return inv;
}

int rank(Matrix a)
{
    return static_cast<int>(reduce(a).size());
}

std::vector<std::vector<Rational>> nullspace(Matrix a)
{
    const int n = a.cols();
    const std::vector<int> pivot_cols = reduce(a);

    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_cols) {
        is_pivot[c] = true;
    }

    std::vector<std::vector<Rational>> basis;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) {
            continue;
        }
        std::vector<Rational> v(n);
        v[free_col] = 1;
        for (size_t r = 0; r < pivot_cols.size(); ++r) {
            v[pivot_cols[r]] = -a.at(static_cast<int>(r), free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v)
{
    if (basis.empty()) {
        return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
    }
    const int n = static_cast<int>(v.size());
    Matrix stacked(static_cast<int>(basis.size()) + 1, n);
    for (size_t r = 0; r < basis.size(); ++r) {
        for (int c = 0; c < n; ++c) {
            stacked.at(static_cast<int>(r), c) = basis[r][c];
        }
    }
    for (int c = 0; c < n; ++c) {
        stacked.at(static_cast<int>(basis.size()), c) = v[c];
    }
    Matrix without(static_cast<int>(basis.size()), n);
    for (size_t r = 0; r < basis.size(); ++r) {
        for (int c = 0; c < n; ++c) {
            without.at(static_cast<int>(r), c) = basis[r][c];
        }
    }
    return rank(std::move(stacked)) == rank(std::move(without));
}

} // namespace rahman
