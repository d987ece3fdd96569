#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fullrank {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Entries = DenseMatrix<std::int64_t>;
using IntVector = DenseVector<std::int64_t>;

/// Exact integer m×d matrix with the annotations carried by constructed matrices.
///
/// `modulus` is the odd prime a construction reduced entries by; when present
/// every |entry| ≤ (p−1)/2. `entry_bound` k, when present, bounds every |entry|.
/// Both invariants are checked on construction and on every annotation change.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(Entries entries, std::optional<std::int64_t> entry_bound = std::nullopt,
                       std::optional<std::int64_t> modulus = std::nullopt);

    /// Row-major list of rows.
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                               std::optional<std::int64_t> entry_bound = std::nullopt,
                               std::optional<std::int64_t> modulus = std::nullopt);
    /// Row-major flat entries.
    static IntMatrix from_flat(int rows, int cols, std::span<const std::int64_t> flat,
                               std::optional<std::int64_t> entry_bound = std::nullopt,
                               std::optional<std::int64_t> modulus = std::nullopt);

    int rows() const noexcept { return static_cast<int>(entries_.rows()); }
    int cols() const noexcept { return static_cast<int>(entries_.cols()); }
    std::int64_t operator()(int i, int j) const { return entries_(i, j); }

    const Entries& entries() const noexcept { return entries_; }
    const std::optional<std::int64_t>& entry_bound() const noexcept { return entry_bound_; }
    const std::optional<std::int64_t>& modulus() const noexcept { return modulus_; }

    /// Largest |entry|.
    std::int64_t max_abs() const;
    std::vector<std::int64_t> flat() const;

    bool operator==(const IntMatrix& other) const;

private:
    void validate() const;

    Entries entries_;
    std::optional<std::int64_t> entry_bound_;
    std::optional<std::int64_t> modulus_;
};

}  // namespace fullrank
