#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fullrank {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kSaturated = UINT64_MAX;

BigInt ipow(const BigInt& base, unsigned exponent);

/// Largest r ≥ 0 with r^e ≤ n. Requires n ≥ 0, e ≥ 1.
BigInt floor_root(const BigInt& n, unsigned e);

/// Smallest q ≥ 0 with (scale·q)^e ≥ target. Requires scale ≥ 1, e ≥ 1.
BigInt ceil_scaled_root(const BigInt& target, const BigInt& scale, unsigned e);

/// Deterministic primality for 64-bit integers.
bool is_prime(std::int64_t n);

std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t modulus);
std::int64_t inverse_mod(std::int64_t a, std::int64_t p);

/// Binomial coefficient saturated at kSaturated.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// a·b and a^e saturated at kSaturated.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_pow(std::uint64_t base, unsigned exponent);

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

/// Parses "p/q", "-12", "0.35", "-1.5e-2" exactly.
Rational parse_rational(std::string_view text);
/// Canonical "p/q" form ("p" when q = 1).
std::string format_rational(const Rational& value);

Rational abs(const Rational& value);

/// Calls `visit` with each strictly increasing size-`k` subset of {0..n-1} in
/// lexicographic order. Stops early when `visit` returns false.
void for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& visit);

/// mt19937_64 with portable bounded draws (std distributions differ across
/// standard libraries, which would break seed reproducibility).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n). Requires n ≥ 1.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    std::int64_t in_range(std::int64_t lo, std::int64_t hi);
    /// Uniform size-k subset of {0..n-1}, sorted.
    std::vector<int> subset(int n, int k);

private:
    std::mt19937_64 engine_;
};

}  // namespace fullrank
