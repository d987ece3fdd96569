#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fullrank/matrix.hpp"
#include "fullrank/numeric.hpp"

namespace fullrank {

inline constexpr std::uint64_t kDefaultDecodeBudget = 10'000'000;

/// Integer vector of dimension d stored by support. Values are nonzero and the
/// support is strictly increasing.
class SparseSignal {
public:
    SparseSignal() = default;
    SparseSignal(int dimension, std::vector<int> support, std::vector<std::int64_t> values);

    static SparseSignal zero(int dimension) { return SparseSignal(dimension, {}, {}); }
    /// Drops zero entries of a dense vector.
    static SparseSignal from_dense(const std::vector<std::int64_t>& dense);

    int dimension() const noexcept { return dimension_; }
    int sparsity() const noexcept { return static_cast<int>(support_.size()); }
    const std::vector<int>& support() const noexcept { return support_; }
    const std::vector<std::int64_t>& values() const noexcept { return values_; }
    std::vector<std::int64_t> to_dense() const;

    bool operator==(const SparseSignal&) const = default;
    auto operator<=>(const SparseSignal&) const = default;

private:
    int dimension_ = 0;
    std::vector<int> support_;
    std::vector<std::int64_t> values_;
};

struct Measurement {
    std::vector<Rational> b;
    std::vector<Rational> noise;
    /// Error level C the matrix was scaled for; the guarantee needs ‖e‖∞ < C.
    Rational threshold{1, 2};
    bool within_guarantee = false;
};

Rational linf_norm(const std::vector<Rational>& v);

/// Exact b = A·x + e. Any e is accepted; `within_guarantee` records ‖e‖∞ < C.
Measurement encode(const IntMatrix& a, const SparseSignal& x, const std::vector<Rational>& noise,
                   const Rational& threshold = Rational(1, 2));

struct DecodeResult {
    /// Set iff the minimizer is unique.
    std::optional<SparseSignal> signal;
    /// Every vector attaining the minimum residual, in lexicographic (support, values) order.
    std::vector<SparseSignal> minimizers;
    Rational residual;
    std::uint64_t candidates_checked = 0;
    /// 2s ≤ m and the measurement noise was inside the guarantee.
    bool guarantee_regime = false;

    bool ambiguous() const noexcept { return minimizers.size() > 1; }
};

struct DecodeOptions {
    std::uint64_t budget = kDefaultDecodeBudget;
    int jobs = 1;
};

/// Exhaustive ℓ∞ decoder over all integer y with ≤ s nonzeros and |y_i| ≤ bound.
DecodeResult decode(const IntMatrix& a, const Measurement& meas, int s, std::int64_t bound,
                    const DecodeOptions& options = {});
/// Overload for a bare measurement vector (noise unknown, guarantee flag false).
DecodeResult decode(const IntMatrix& a, const std::vector<Rational>& b, int s, std::int64_t bound,
                    const DecodeOptions& options = {});

/// Entrywise 2C·A. 2C must be a positive integer. The modulus annotation is
/// dropped since scaled entries are no longer centered residues.
IntMatrix scale_matrix(const IntMatrix& a, const Rational& c);

/// 2s ≤ m and ‖e‖∞ < threshold (default 1/2).
bool guarantee_holds(int m, int s, const std::vector<Rational>& noise, const Rational& threshold = Rational(1, 2));

}  // namespace fullrank
