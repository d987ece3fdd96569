#include "fullrank/bounds.hpp"

#include <cmath>
#include <string>

#include "fullrank/errors.hpp"

namespace fullrank {

namespace {

// ⌊100·k·m·√(ln k)⌋. The product is transcendental, so a long double
// evaluation is exact after flooring unless it lands within rounding of an integer.
BigInt large_m_upper(int m, std::int64_t k) {
    const long double value = 100.0L * static_cast<long double>(k) * m * std::sqrt(std::log(static_cast<long double>(k)));
    return BigInt(static_cast<unsigned long long>(std::floor(value)));
}

// ⌊400·k^{m/(m−1)}·m^{3/2}⌋ = largest U with U^{2(m−1)} ≤ 400^{2(m−1)}·k^{2m}·m^{3(m−1)}.
BigInt small_m_upper(int m, std::int64_t k) {
    const auto e = static_cast<unsigned>(m - 1);
    const BigInt n = ipow(BigInt(400), 2 * e) * ipow(BigInt(k), 2 * static_cast<unsigned>(m)) * ipow(BigInt(m), 3 * e);
    return floor_root(n, 2 * e);
}

}  // namespace

BoundsReport bounds_report(int m, std::int64_t k) {
    if (m < 2) throw InvalidInput("bounds_report: requires m >= 2");
    if (k < 2) throw InvalidInput("bounds_report: requires k >= 2");
    BoundsReport r;
    r.m = m;
    r.k = k;
    r.regime = regime_for(m, k);
    r.upper_bound_thm1 = r.regime == Regime::large_m ? large_m_upper(m, k) : small_m_upper(m, k);

    // ⌊k^{m/(m−1)}/2⌋ = largest L with (2L)^{m−1} ≤ k^m.
    const BigInt target = ipow(BigInt(k), static_cast<unsigned>(m));
    const BigInt half_power = floor_root(target, static_cast<unsigned>(m - 1)) / 2;
    r.lower_bound_thm2 = std::max(BigInt(k + 1), half_power);
    r.gap_factor = Rational(r.upper_bound_thm1, r.lower_bound_thm2);

    const int floor_log = static_cast<int>(std::floor(std::log(static_cast<double>(k))));
    r.k_large_enough = ipow(BigInt(10), static_cast<unsigned>(floor_log)) > BigInt(k) * k;
    return r;
}

}  // namespace fullrank
