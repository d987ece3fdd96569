#include "doctest.h"

#include "fullrank/construct.hpp"
#include "fullrank/errors.hpp"
#include "fullrank/linalg.hpp"
#include "oracles.hpp"

using namespace fullrank;

namespace {

oracle::Rows rows_of(const IntMatrix& a) {
    oracle::Rows rows(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) rows[static_cast<std::size_t>(i)].push_back(a(i, j));
    }
    return rows;
}

// Every m-subset of columns has a determinant nonzero mod p (Leibniz, reduced afterwards).
bool all_minors_nonzero_mod(const IntMatrix& a, std::int64_t p) {
    const auto rows = rows_of(a);
    std::vector<std::vector<int>> sets;
    oracle::subsets(a.cols(), a.rows(), sets);
    for (const auto& s : sets) {
        if (oracle::mod(oracle::leibniz_det(oracle::pick_columns(rows, s)), p) == 0) return false;
    }
    return true;
}

// Exact-rational minimax search using full integer powers.
std::pair<std::int64_t, Rational> dirichlet_oracle(std::int64_t j, std::int64_t d, int m) {
    std::int64_t best_l = 0;
    Rational best_q = 2;
    for (std::int64_t l = 1; l < d; ++l) {
        Rational q = 0;
        for (int i = 0; i < m; ++i) {
            const Rational u(BigInt(l) * ipow(BigInt(j), static_cast<unsigned>(i)), BigInt(d));
            const BigInt lower = boost::multiprecision::numerator(u) / boost::multiprecision::denominator(u);
            const Rational frac = u - Rational(lower);
            q = std::max(q, std::min(frac, Rational(1) - frac));
        }
        if (q < best_q) {
            best_q = q;
            best_l = l;
        }
    }
    return {best_l, best_q};
}

std::int64_t smallest_prime_oracle(std::int64_t lo, std::int64_t hi, bool odd) {
    const auto prime = oracle::sieve(hi);
    for (std::int64_t p = std::max<std::int64_t>(lo, 0); p <= hi; ++p) {
        if (prime[static_cast<std::size_t>(p)] && (!odd || p % 2 == 1)) return p;
    }
    return -1;
}

}  // namespace

TEST_CASE("find_prime_in") {
    CHECK(find_prime_in(std::int64_t{4}, std::int64_t{7}, true) == 5);
    CHECK(find_prime_in(std::int64_t{2}, std::int64_t{3}, true) == 3);
    CHECK(find_prime_in(std::int64_t{2}, std::int64_t{3}, false) == 2);
    CHECK_THROWS_AS(find_prime_in(std::int64_t{24}, std::int64_t{28}, false), NotFound);
    CHECK(find_prime_in(12.5, 25.0, false) == 13);
    CHECK_THROWS_AS(find_prime_in(24.5, 28.9, false), NotFound);
    CHECK_THROWS_AS(find_prime_in(std::int64_t{5}, std::int64_t{4}, false), InvalidInput);

    for (std::int64_t lo = 0; lo < 120; lo += 3) {
        for (std::int64_t len = 0; len < 10; ++len) {
            for (bool odd : {false, true}) {
                const auto expected = smallest_prime_oracle(lo, lo + len, odd);
                if (expected < 0) {
                    CHECK_THROWS_AS(find_prime_in(lo, lo + len, odd), NotFound);
                } else {
                    CHECK(find_prime_in(lo, lo + len, odd) == expected);
                }
            }
        }
    }
}

TEST_CASE("construct_vandermonde examples") {
    const auto c23 = construct_vandermonde(2, 3);
    CHECK(c23.params.d == 5);
    CHECK(c23.matrix == IntMatrix::from_rows({{1, 1, 1, 1, 1}, {1, 2, -2, -1, 0}}, 3, 5));
    CHECK(all_minors_nonzero_mod(c23.matrix, 5));

    const auto c33 = construct_vandermonde(3, 3);
    CHECK(c33.params.d == 5);
    for (int j = 0; j < 5; ++j) CHECK(c33.matrix(2, j) == std::vector<std::int64_t>{1, -1, -1, 1, 0}[static_cast<std::size_t>(j)]);
    CHECK(all_minors_nonzero_mod(c33.matrix, 5));

    CHECK_THROWS_AS(construct_vandermonde(2, 1), InvalidInput);
    CHECK_THROWS_AS(construct_vandermonde(1, 5), InvalidInput);
}

TEST_CASE("vandermonde parameters and node distinctness") {
    for (int m = 2; m <= 5; ++m) {
        for (std::int64_t k = m; k <= 30; ++k) {
            const auto c = construct_vandermonde(m, k);
            const auto d = c.params.d;
            CHECK(d == smallest_prime_oracle(k + 1, 2 * k + 1, true));
            CHECK(c.matrix.cols() == d);
            CHECK(c.matrix.max_abs() <= k);
            CHECK(c.matrix.modulus() == d);
            std::vector<bool> seen(static_cast<std::size_t>(d), false);
            for (int j = 0; j < d; ++j) {
                const auto node = residue(c.matrix(1, j), d);
                CHECK_FALSE(seen[static_cast<std::size_t>(node)]);
                seen[static_cast<std::size_t>(node)] = true;
            }
        }
    }
}

TEST_CASE("dirichlet_scale examples") {
    const auto s17 = dirichlet_scale(1, 7, 2);
    CHECK(s17.l == 1);
    CHECK(s17.quality() == Rational(1, 7));
    CHECK(s17.meets_threshold);

    const auto s37 = dirichlet_scale(3, 7, 2);
    CHECK(s37.l == 2);
    CHECK(s37.quality() == Rational(2, 7));
    CHECK(s37.meets_threshold);

    const auto s513 = dirichlet_scale(5, 13, 2);
    CHECK(s513.l == 2);
    CHECK(s513.quality() == Rational(3, 13));
    CHECK(s513.meets_threshold);

    CHECK_THROWS_AS(dirichlet_scale(0, 7, 2), InvalidInput);
    CHECK_THROWS_AS(dirichlet_scale(3, 8, 2), InvalidInput);
    CHECK_THROWS_AS(dirichlet_scale(3, 7, 1), InvalidInput);
}

TEST_CASE("dirichlet_scale matches the exact-rational oracle") {
    for (std::int64_t d : {5, 7, 11, 13, 17, 23, 29}) {
        for (int m = 2; m <= 4; ++m) {
            for (std::int64_t j = 1; j <= d; ++j) {
                const auto got = dirichlet_scale(j, d, m);
                const auto [l, q] = dirichlet_oracle(j, d, m);
                CHECK(got.l == l);
                CHECK(got.quality() == q);
                // q ≤ d^{−1/m}  ⟺  q^m ≤ 1/d
                Rational qm = 1;
                for (int i = 0; i < m; ++i) qm *= q;
                CHECK(got.meets_threshold == (qm <= Rational(1, d)));
            }
        }
    }
}

TEST_CASE("construct_scaled examples") {
    const auto c25 = construct_scaled(2, 5);
    CHECK(c25.params.d == 13);
    CHECK(c25.params.scalings[4] == 2);
    CHECK(c25.matrix(0, 4) == 2);
    CHECK(c25.matrix(1, 4) == -3);
    CHECK(all_minors_nonzero_mod(c25.matrix, 13));

    const auto c24 = construct_scaled(2, 4);
    CHECK(c24.params.d == 11);
    CHECK(c24.matrix.max_abs() <= 3);
    CHECK(all_minors_nonzero_mod(c24.matrix, 11));

    CHECK_THROWS_AS(construct_scaled(2, 2), InvalidInput);
    CHECK_THROWS_AS(construct_scaled(3, 5), InvalidInput);  // 125 ≤ 4·36
}

TEST_CASE("scaled prime interval is exact") {
    for (int m = 2; m <= 5; ++m) {
        for (std::int64_t k = 3; k <= 60; ++k) {
            const auto [lo, hi] = scaled_prime_interval(m, k);
            const BigInt km = ipow(BigInt(k), static_cast<unsigned>(m));
            const auto e = static_cast<unsigned>(m - 1);
            CHECK(ipow(BigInt(2 * lo), e) >= km);
            CHECK(ipow(BigInt(2 * (lo - 1)), e) < km);
            CHECK(ipow(BigInt(hi), e) < km);
            CHECK(ipow(BigInt(hi + 1), e) >= km);
        }
    }
}

TEST_CASE("scaled variant: multipliers, entry bound, threshold consistency") {
    const std::vector<std::pair<int, std::int64_t>> cases{{2, 5}, {2, 6}, {2, 9}, {3, 6}, {3, 9}, {4, 11}};
    for (const auto& [m, k] : cases) {
        const auto c = construct_scaled(m, k);
        const auto d = c.params.d;
        CHECK(d == smallest_prime_oracle(scaled_prime_interval(m, k).first, scaled_prime_interval(m, k).second, false));
        CHECK(c.matrix.max_abs() <= k);
        REQUIRE(c.params.scalings.size() == static_cast<std::size_t>(d));
        for (std::int64_t j = 1; j <= d; ++j) {
            const auto l = c.params.scalings[static_cast<std::size_t>(j - 1)];
            CHECK(l >= 1);
            CHECK(l <= d - 1);
            const auto& q = c.params.quality[static_cast<std::size_t>(j - 1)];
            std::int64_t col_max = 0;
            for (int i = 0; i < m; ++i) {
                // a_ij ≡ l · j^{i−1} (mod d), recomputed with full integer powers.
                const BigInt expected = BigInt(l) * ipow(BigInt(j), static_cast<unsigned>(i));
                CHECK(oracle::mod(BigInt(c.matrix(i, static_cast<int>(j - 1))) - expected, d) == 0);
                col_max = std::max(col_max, std::abs(c.matrix(i, static_cast<int>(j - 1))));
            }
            CHECK(col_max == q.quality_numerator);
            if (q.meets_threshold) {
                // |a| ≤ d^{1−1/m}  ⟺  |a|^m ≤ d^{m−1}
                CHECK(ipow(BigInt(col_max), static_cast<unsigned>(m)) <= ipow(BigInt(d), static_cast<unsigned>(m - 1)));
            }
        }
        if (d <= 20) CHECK(all_minors_nonzero_mod(c.matrix, d));
    }
}

TEST_CASE("construct chooses the variant and truncates") {
    const auto c = construct(2, 3, 4);
    CHECK(c.params.variant == Variant::vandermonde);
    CHECK(c.matrix == IntMatrix::from_rows({{1, 1, 1, 1}, {1, 2, -2, -1}}, 3, 5));

    const auto c12 = construct(2, 5, 12);
    CHECK(c12.params.variant == Variant::scaled);
    CHECK(c12.matrix.cols() == 12);
    CHECK(c12.matrix.max_abs() <= 5);
    CHECK(c12.params.scalings.size() == 12);
    CHECK(oracle::all_minors_nonzero(rows_of(c12.matrix)));

    CHECK_THROWS_AS(construct(3, 2, 10), InvalidInput);
    CHECK_THROWS_AS(construct(3, 5, 3), InvalidInput);   // d must exceed m
    CHECK_THROWS_AS(construct(2, 5, 13), InvalidInput);  // 26 > 25
    CHECK(within_existence_range(2, 5, 12));
    CHECK_FALSE(within_existence_range(2, 5, 13));
    CHECK(within_existence_range(2, 3, 4));
    CHECK_FALSE(within_existence_range(3, 2, 3));
    CHECK_FALSE(within_existence_range(3, 2, 4));
}

TEST_CASE("nondegeneracy and column-subset closure at desk scale") {
    SeededRng rng(5);
    for (int m = 2; m <= 4; ++m) {
        for (std::int64_t k = m; k <= 9; ++k) {
            const auto c = construct_vandermonde(m, k);
            if (c.params.d > 20) continue;
            CHECK(all_minors_nonzero_mod(c.matrix, c.params.d));
            for (int trial = 0; trial < 5; ++trial) {
                const int size = m + static_cast<int>(rng.below(static_cast<std::uint64_t>(c.matrix.cols() - m + 1)));
                const auto cols = rng.subset(c.matrix.cols(), size);
                CHECK(all_minors_nonzero_mod(select_columns(c.matrix, cols), c.params.d));
            }
        }
    }
}

TEST_CASE("parallel column search is scheduling independent") {
    const auto serial = construct_scaled(3, 9, 1);
    const auto parallel = construct_scaled(3, 9, 4);
    CHECK(serial.matrix == parallel.matrix);
    CHECK(serial.params.scalings == parallel.params.scalings);
}
