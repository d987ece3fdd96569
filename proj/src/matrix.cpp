#include "fullrank/matrix.hpp"

#include <string>

#include "fullrank/errors.hpp"
#include "fullrank/numeric.hpp"

namespace fullrank {

IntMatrix::IntMatrix(Entries entries, std::optional<std::int64_t> entry_bound,
                     std::optional<std::int64_t> modulus)
    : entries_(std::move(entries)), entry_bound_(entry_bound), modulus_(modulus) {
    validate();
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                               std::optional<std::int64_t> entry_bound,
                               std::optional<std::int64_t> modulus) {
    if (rows.empty() || rows.front().empty()) throw InvalidInput("matrix must have at least one row and column");
    Entries e(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.front().size()) throw InvalidInput("ragged matrix rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return IntMatrix(std::move(e), entry_bound, modulus);
}

IntMatrix IntMatrix::from_flat(int rows, int cols, std::span<const std::int64_t> flat,
                               std::optional<std::int64_t> entry_bound,
                               std::optional<std::int64_t> modulus) {
    if (rows < 1 || cols < 1) throw InvalidInput("matrix must have at least one row and column");
    if (flat.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        throw InvalidInput("entries length " + std::to_string(flat.size()) + " != rows × cols = " +
                           std::to_string(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)));
    }
    Entries e(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) e(i, j) = flat[static_cast<std::size_t>(i) * cols + j];
    }
    return IntMatrix(std::move(e), entry_bound, modulus);
}

std::int64_t IntMatrix::max_abs() const {
    std::int64_t best = 0;
    for (Eigen::Index i = 0; i < entries_.size(); ++i) {
        const std::int64_t v = entries_.data()[i];
        if (v == INT64_MIN) throw InvalidInput("entry magnitude overflows");
        best = std::max(best, v < 0 ? -v : v);
    }
    return best;
}

std::vector<std::int64_t> IntMatrix::flat() const {
    return std::vector<std::int64_t>(entries_.data(), entries_.data() + entries_.size());
}

bool IntMatrix::operator==(const IntMatrix& other) const {
    return entries_.rows() == other.entries_.rows() && entries_.cols() == other.entries_.cols() &&
           entries_ == other.entries_ && entry_bound_ == other.entry_bound_ && modulus_ == other.modulus_;
}

void IntMatrix::validate() const {
    if (entries_.rows() < 1 || entries_.cols() < 1) throw InvalidInput("matrix must have at least one row and column");
    const std::int64_t largest = max_abs();
    if (entry_bound_) {
        if (*entry_bound_ < 0) throw InvalidInput("entry bound must be non-negative");
        if (largest > *entry_bound_) {
            throw InvalidInput("entry of magnitude " + std::to_string(largest) + " exceeds entry bound " +
                               std::to_string(*entry_bound_));
        }
    }
    if (modulus_) {
        if (*modulus_ < 3 || *modulus_ % 2 == 0 || !is_prime(*modulus_)) {
            throw InvalidInput("modulus annotation must be an odd prime, got " + std::to_string(*modulus_));
        }
        if (largest > (*modulus_ - 1) / 2) {
            throw InvalidInput("entry of magnitude " + std::to_string(largest) +
                               " is not a centered residue mod " + std::to_string(*modulus_));
        }
    }
}

}  // namespace fullrank
