#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "fullrank/errors.hpp"
#include "fullrank/matrix.hpp"
#include "fullrank/numeric.hpp"

namespace fullrank {

/// Representative of x mod p in [−(p−1)/2, (p−1)/2]. p must be odd and ≥ 3.
std::int64_t centered_residue(std::int64_t x, std::int64_t p);

/// Representative of x mod p in [0, p).
inline std::int64_t residue(std::int64_t x, std::int64_t p) {
    const std::int64_t r = x % p;
    return r < 0 ? r + p : r;
}

/// Determinant over GF(p) by Gaussian elimination; result in [0, p).
/// Assumes p is prime; callers that cannot guarantee it use the IntMatrix overload.
template <typename Derived>
std::int64_t det_mod_p_unchecked(const Eigen::MatrixBase<Derived>& square, std::int64_t p) {
    const Eigen::Index n = square.rows();
    DenseMatrix<std::int64_t> work(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) work(i, j) = residue(static_cast<std::int64_t>(square(i, j)), p);
    }
    auto mulmod = [p](std::int64_t a, std::int64_t b) {
        return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
    };
    std::int64_t det = 1;
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        while (pivot < n && work(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            work.row(pivot).swap(work.row(col));
            det = (p - det) % p;
        }
        det = mulmod(det, work(col, col));
        const std::int64_t inv = inverse_mod(work(col, col), p);
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (work(r, col) == 0) continue;
            const std::int64_t factor = mulmod(work(r, col), inv);
            for (Eigen::Index c = col; c < n; ++c) {
                work(r, c) = residue(work(r, c) - mulmod(factor, work(col, c)), p);
            }
        }
    }
    return det;
}

/// Fraction-free (Bareiss) determinant in `Scalar`. Every intermediate is a minor
/// of the input, so each division is exact; Scalar must hold those minors.
template <typename Scalar, typename Derived>
Scalar det_bareiss(const Eigen::MatrixBase<Derived>& square) {
    if (square.rows() != square.cols()) throw InvalidInput("determinant of a non-square matrix");
    const Eigen::Index n = square.rows();
    if (n == 0) return Scalar(1);
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> work(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) work(i, j) = Scalar(square(i, j));
    }
    Scalar previous(1);
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (work(k, k) == 0) {
            Eigen::Index swap = k + 1;
            while (swap < n && work(swap, k) == 0) ++swap;
            if (swap == n) return Scalar(0);
            work.row(k).swap(work.row(swap));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                work(i, j) = Scalar((work(i, j) * work(k, k) - work(i, k) * work(k, j)) / previous);
            }
            work(i, k) = Scalar(0);
        }
        previous = work(k, k);
    }
    Scalar det = work(n - 1, n - 1);
    return negate ? Scalar(-det) : det;
}

/// Determinant of the matrix reduced mod p, in [0, p). Throws on non-square
/// input or non-prime p.
std::int64_t det_mod_p(const IntMatrix& square, std::int64_t p);

/// Exact integer determinant (Bareiss over arbitrary precision).
BigInt det_exact(const IntMatrix& square);

/// Columns `cols` (distinct, in range) in the given order; annotations carry over.
IntMatrix select_columns(const IntMatrix& a, std::span<const int> cols);

/// Column-selected m×|cols| block without annotation checks, for hot loops.
Entries column_block(const Entries& a, std::span<const int> cols);

}  // namespace fullrank
