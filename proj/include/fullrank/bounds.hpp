#pragma once

#include <cstdint>

#include "fullrank/attack.hpp"
#include "fullrank/numeric.hpp"

namespace fullrank {

/// Upper (nonexistence) and lower (explicit construction) bounds on the
/// largest d admitting an m×d matrix with entries ≤ k and all m×m minors nonzero.
struct BoundsReport {
    int m = 0;
    std::int64_t k = 0;
    Regime regime = Regime::large_m;
    /// ⌊100·k·√(log k)·m⌋ (large_m) or ⌊400·k^{m/(m−1)}·m^{3/2}⌋ (small_m).
    BigInt upper_bound_thm1;
    /// ⌊max(k+1, k^{m/(m−1)}/2)⌋.
    BigInt lower_bound_thm2;
    Rational gap_factor;
    /// The upper bound is asymptotic in k; false when 10^⌊log k⌋ ≤ k², the
    /// step its counting argument needs.
    bool k_large_enough = false;
};

BoundsReport bounds_report(int m, std::int64_t k);

}  // namespace fullrank
