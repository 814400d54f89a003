#pragma once

// Exact dense elimination kernels. Everything here assumes an exact field scalar
// (Rational) except bareiss_determinant, which stays inside an integral domain.

#include "tropideal/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tropideal::linalg {

template <typename Scalar>
struct Echelon {
    MatrixX<Scalar> rows;     // reduced row echelon form, zero rows dropped
    std::vector<int> pivots;  // pivot column of each row
};

/// Reduced row echelon form with pivots chosen left to right (first nonzero entry
/// in the canonical column order).
template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    MatrixX<Scalar> a = input;
    const Eigen::Index m = a.rows();
    const Eigen::Index n = a.cols();
    std::vector<int> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < n && row < m; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = row; i < m; ++i) {
            if (a(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        a.row(row).swap(a.row(pivot));
        const Scalar inv = Scalar(1) / a(row, col);
        for (Eigen::Index j = col; j < n; ++j) a(row, j) *= inv;
        for (Eigen::Index i = 0; i < m; ++i) {
            if (i == row || a(i, col) == 0) continue;
            const Scalar f = a(i, col);
            for (Eigen::Index j = col; j < n; ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return {a.topRows(row), std::move(pivots)};
}

template <typename Derived>
int rank(const Eigen::MatrixBase<Derived>& a) {
    return static_cast<int>(rref(a).pivots.size());
}

/// Rows spanning the right kernel: K with a * K^T = 0, one row per free column.
template <typename Derived>
MatrixX<typename Derived::Scalar> kernel_rows(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    const auto ech = rref(a);
    const Eigen::Index n = a.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
    MatrixX<Scalar> k = MatrixX<Scalar>::Zero(static_cast<Eigen::Index>(free_cols.size()), n);
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        const auto fi = static_cast<Eigen::Index>(f);
        k(fi, free_cols[f]) = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            k(fi, ech.pivots[r]) = -ech.rows(static_cast<Eigen::Index>(r), free_cols[f]);
    }
    return k;
}

/// Determinant by exact Gaussian elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    MatrixX<Scalar> a = input;
    const Eigen::Index n = a.rows();
    Scalar det = 1;
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = col; i < n; ++i)
            if (a(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return Scalar(0);
        if (pivot != col) {
            a.row(col).swap(a.row(pivot));
            det = -det;
        }
        det *= a(col, col);
        for (Eigen::Index i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            const Scalar f = a(i, col) / a(col, col);
            for (Eigen::Index j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

/// Fraction-free (Bareiss) determinant over an integral domain.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    MatrixX<Scalar> a = input;
    const Eigen::Index n = a.rows();
    if (n == 0) return Scalar(1);
    Scalar sign = 1;
    Scalar prev = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index swap_row = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return Scalar(0);
            a.row(k).swap(a.row(swap_row));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// Affine parametrization of {x : e x = rhs} as x = origin + basis * z.
template <typename Scalar>
struct AffineParam {
    VectorX<Scalar> origin;
    MatrixX<Scalar> basis;  // columns span the direction space
};

template <typename DerivedA, typename DerivedB>
std::optional<AffineParam<typename DerivedA::Scalar>> solve_affine(
    const Eigen::MatrixBase<DerivedA>& e, const Eigen::MatrixBase<DerivedB>& rhs) {
    using Scalar = typename DerivedA::Scalar;
    const Eigen::Index n = e.cols();
    MatrixX<Scalar> aug(e.rows(), n + 1);
    aug.leftCols(n) = e;
    aug.col(n) = rhs;
    const auto ech = rref(aug);
    for (int p : ech.pivots)
        if (p == n) return std::nullopt;
    AffineParam<Scalar> out;
    out.origin = VectorX<Scalar>::Zero(n);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
        out.origin(ech.pivots[r]) = ech.rows(static_cast<Eigen::Index>(r), n);
    const MatrixX<Scalar> kernel = kernel_rows(e.derived());
    out.basis = kernel.transpose();
    return out;
}

}  // namespace tropideal::linalg
