#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fullrank/matrix.hpp"

namespace fullrank {

inline constexpr std::uint64_t kDefaultGridBudget = 10'000'000;

using Normal = std::vector<std::int64_t>;
using GridPoint = std::vector<std::int64_t>;

/// Primitive, sign-normalized form: gcd 1 and first nonzero coordinate positive.
/// Throws on the zero vector.
Normal normalize_normal(const Normal& n);

/// Hyperplanes {x : ⟨n, x⟩ = 0} intended to cover K = {x ∈ Z^m : ‖x‖∞ ≤ k}.
class CoverInstance {
public:
    CoverInstance(int m, std::int64_t k, std::vector<Normal> normals);

    int m() const noexcept { return m_; }
    std::int64_t k() const noexcept { return k_; }
    const std::vector<Normal>& normals() const noexcept { return normals_; }

private:
    int m_;
    std::int64_t k_;
    std::vector<Normal> normals_;
};

/// ⌈k^{m/(m−1)}/(2m−2)⌉ for k ≥ m ≥ 2, exact.
std::int64_t cover_lower_bound(int m, std::int64_t k);

struct CoverCheck {
    bool accepted = false;
    /// Lexicographically first grid point on no hyperplane.
    std::optional<GridPoint> uncovered;
    std::uint64_t points_checked = 0;
};

CoverCheck verify_cover(const CoverInstance& inst, std::uint64_t budget = kDefaultGridBudget);

struct HyperplaneColumns {
    int count = 0;
    std::vector<int> columns;
};

/// Columns c of `a` with ⟨n, c⟩ = 0.
HyperplaneColumns columns_on_hyperplane(const IntMatrix& a, const Normal& n);

struct MinCover {
    int size = 0;
    std::vector<Normal> witness;
    std::uint64_t nodes_explored = 0;
};

/// Exact minimum number of hyperplanes covering K. Candidates are the
/// hyperplanes spanned by m−1 linearly independent grid points.
MinCover min_cover_bruteforce(int m, std::int64_t k);

}  // namespace fullrank
