#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <vector>

#include "hodgestar/rational.hpp"

namespace Eigen {

// Minimal adaptor so dense Eigen types can carry the exact rational scalar.
// Only storage, +,-,* and comparisons are used; nothing here may ever call
// sqrt or introduce rounding.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    static inline Real highest() { return Real(1); }
    static inline Real lowest() { return Real(-1); }

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 100
    };
};

}  // namespace Eigen

namespace hodgestar {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Row echelon elimination with exact pivoting (any nonzero pivot is exact).
// Returns the rank; if pivot_columns is given, fills it with the pivot
// column indices and leaves the matrix in reduced row echelon form.
template <typename Scalar>
int row_reduce(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m,
               std::vector<int>* pivot_columns = nullptr) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    int rank = 0;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = rank; r < rows; ++r)
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank) m.row(pivot).swap(m.row(rank));
        Scalar inv = Scalar(1) / m(rank, col);
        for (Eigen::Index c = col; c < cols; ++c) m(rank, c) = m(rank, c) * inv;
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r == rank || m(r, col) == 0) continue;
            Scalar factor = m(r, col);
            for (Eigen::Index c = col; c < cols; ++c)
                m(r, c) = m(r, c) - factor * m(rank, c);
        }
        if (pivot_columns) pivot_columns->push_back(static_cast<int>(col));
        ++rank;
    }
    return rank;
}

template <typename Scalar>
int matrix_rank(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
    return row_reduce(m);
}

// Columns span the kernel; exact.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> kernel_basis(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
    const Eigen::Index cols = m.cols();
    std::vector<int> pivots;
    int rank = row_reduce(m, &pivots);
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> basis(cols, cols - rank);
    basis.setConstant(Scalar(0));
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    Eigen::Index out = 0;
    for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        basis(free_col, out) = Scalar(1);
        for (int r = 0; r < rank; ++r)
            basis(pivots[static_cast<std::size_t>(r)], out) = -m(r, free_col);
        ++out;
    }
    return basis;
}

// Solves A x = b for a consistent system (throws if inconsistent); exact.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> solve_consistent(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a,
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> b) {
    const Eigen::Index rows = a.rows(), cols = a.cols();
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> aug(rows, cols + 1);
    aug.leftCols(cols) = a;
    aug.col(cols) = b;
    std::vector<int> pivots;
    int rank = row_reduce(aug, &pivots);
    for (int p : pivots)
        if (p == static_cast<int>(cols)) throw std::invalid_argument("inconsistent system");
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x(cols);
    x.setConstant(Scalar(0));
    for (int r = 0; r < rank; ++r) x(pivots[static_cast<std::size_t>(r)]) = aug(r, cols);
    return x;
}

// Least squares via the normal equations A^T A x = A^T b, which are always
// consistent; exact over the rationals.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> least_squares(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> ata = a.transpose() * a;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> atb = a.transpose() * b;
    return solve_consistent<Scalar>(std::move(ata), std::move(atb));
}

}  // namespace hodgestar
