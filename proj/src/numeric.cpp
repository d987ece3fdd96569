#include "fullrank/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fullrank/errors.hpp"

namespace fullrank {

BigInt ipow(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

BigInt floor_root(const BigInt& n, unsigned e) {
    if (n < 0 || e == 0) throw InvalidInput("floor_root: requires n >= 0 and e >= 1");
    if (n < 2 || e == 1) return n;
    const double approx = std::pow(n.convert_to<double>(), 1.0 / e);
    BigInt r;
    if (std::isfinite(approx) && approx < 0x1p62) {
        // Floating estimate, corrected exactly in both directions.
        r = static_cast<std::uint64_t>(approx);
        while (r > 0 && ipow(r, e) > n) --r;
        while (ipow(r + 1, e) <= n) ++r;
        return r;
    }
    BigInt lo = 0, hi = 1;
    while (ipow(hi, e) <= n) hi <<= 1;
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) >> 1;
        if (ipow(mid, e) <= n) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

BigInt ceil_scaled_root(const BigInt& target, const BigInt& scale, unsigned e) {
    if (scale < 1 || e == 0) throw InvalidInput("ceil_scaled_root: requires scale >= 1 and e >= 1");
    if (target <= 0) return 0;
    // Smallest integer x ≥ 0 with x^e ≥ target, then the smallest multiple of scale above it.
    BigInt x = floor_root(target, e);
    if (ipow(x, e) < target) ++x;
    BigInt q = x / scale;
    if (q * scale < x) ++q;
    return q;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::int64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    auto mulmod = [n](std::int64_t a, std::int64_t b) {
        return static_cast<std::int64_t>(static_cast<__int128>(a) * b % n);
    };
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::int64_t x = pow_mod(a, static_cast<std::uint64_t>(d), n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t modulus) {
    if (modulus <= 0) throw InvalidInput("pow_mod: modulus must be positive");
    if (modulus == 1) return 0;
    __int128 b = ((base % modulus) + modulus) % modulus;
    __int128 result = 1;
    while (exponent > 0) {
        if (exponent & 1) result = result * b % modulus;
        b = b * b % modulus;
        exponent >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
    std::int64_t r0 = ((a % p) + p) % p, r1 = p;
    std::int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    if (r0 != 1) throw InvalidInput("inverse_mod: value not invertible");
    return ((s0 % p) + p) % p;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) return kSaturated;
    return out;
}

std::uint64_t saturating_pow(std::uint64_t base, unsigned exponent) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exponent; ++i) out = saturating_mul(out, base);
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
        if (out > kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(out);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw InvalidInput("integer overflow in multiplication");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw InvalidInput("integer overflow in addition");
    return out;
}

Rational parse_rational(std::string_view text) {
    auto fail = [&] { return InvalidInput("not a rational number: '" + std::string(text) + "'"); };
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw fail();

    auto parse_integer = [&](std::string_view digits, bool allow_sign) {
        bool negative = false;
        if (allow_sign && !digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
            negative = digits.front() == '-';
            digits.remove_prefix(1);
        }
        if (digits.empty()) throw fail();
        BigInt value = 0;
        for (char c : digits) {
            if (c < '0' || c > '9') throw fail();
            value = value * 10 + (c - '0');
        }
        return negative ? BigInt(-value) : value;
    };

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_integer(text.substr(0, slash), true);
        const BigInt den = parse_integer(text.substr(slash + 1), true);
        if (den == 0) throw InvalidInput("rational with zero denominator: '" + std::string(text) + "'");
        return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
    }

    std::string_view mantissa = text;
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        const BigInt ex = parse_integer(text.substr(e + 1), true);
        if (boost::multiprecision::abs(ex) > 4096) throw fail();
        exponent = ex.convert_to<long>();
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
        negative = mantissa.front() == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        const auto whole = mantissa.substr(0, dot);
        const auto frac = mantissa.substr(dot + 1);
        if (whole.empty() && frac.empty()) throw fail();
        digits = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        digits = std::string(mantissa);
    }
    const BigInt value = parse_integer(digits, false);
    Rational out = exponent >= 0 ? Rational(value * ipow(10, static_cast<unsigned>(exponent)))
                                 : Rational(value, ipow(10, static_cast<unsigned>(-exponent)));
    return negative ? Rational(-out) : out;
}

std::string format_rational(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

void for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (!visit(idx)) return;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::uint64_t SeededRng::below(std::uint64_t n) {
    if (n == 0) throw InvalidInput("SeededRng::below: n must be positive");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return draw % n;
}

std::int64_t SeededRng::in_range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw InvalidInput("SeededRng::in_range: empty range");
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span));
}

std::vector<int> SeededRng::subset(int n, int k) {
    if (k < 0 || k > n) throw InvalidInput("SeededRng::subset: k out of range");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i) {
        const auto j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace fullrank
