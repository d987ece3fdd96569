#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fullrank/matrix.hpp"
#include "fullrank/verify.hpp"

namespace fullrank {

inline constexpr std::uint64_t kDefaultPairBudget = 100'000'000;

/// m ≥ log k versus 2 ≤ m < log k (natural log).
enum class Regime { large_m, small_m };

const char* to_string(Regime regime);
Regime regime_for(int m, std::int64_t k);

struct AttackConfig {
    int t = 1;
    std::int64_t lambda = 1;
    int min_agree = 1;
    std::uint64_t pair_budget = kDefaultPairBudget;
};

struct AttackParams {
    AttackConfig config;
    Regime regime = Regime::large_m;
    /// ⌊log k⌋ was 0 and t was raised to 1.
    bool t_clamped = false;
    /// k is below the range where the counting argument applies: 10^⌊log k⌋ ≤ k².
    bool below_guarantee_regime = false;
};

/// Row count t and coefficient range Λ for an m-row matrix with entries ≤ k.
AttackParams attack_params(int m, std::int64_t k);

/// λ-weighted sum of the first λ.size() rows.
IntVector combination_vector(const IntMatrix& a, std::span<const std::int64_t> lambda);

/// Coordinates where two vectors agree.
std::vector<int> agreement_set(const IntVector& u, const IntVector& v);

/// Scans unordered pairs λ ≠ λ′ of {0..Λ}^t in lexicographic order (λ′ before λ)
/// for one agreeing on ≥ min_agree coordinates. The certificate carries λ − λ′,
/// whose first nonzero entry is positive, and the first min_agree agreements.
std::optional<DegeneracyCertificate> find_collision(const IntMatrix& a, const AttackConfig& cfg, int jobs = 1);

}  // namespace fullrank
