#include "doctest.h"

#include "fullrank/construct.hpp"
#include "fullrank/errors.hpp"
#include "fullrank/numeric.hpp"
#include "fullrank/recover.hpp"

using namespace fullrank;

namespace {

std::vector<Rational> rationals(std::initializer_list<const char*> items) {
    std::vector<Rational> out;
    for (const char* s : items) out.push_back(parse_rational(s));
    return out;
}

// Dense brute force: all integer vectors with ≤ s nonzeros in [−B, B], residuals in Rational.
std::pair<Rational, std::vector<std::vector<std::int64_t>>> decode_oracle(const IntMatrix& a, const std::vector<Rational>& b,
                                                                        int s, std::int64_t bound) {
    const int d = a.cols();
    std::vector<std::int64_t> y(static_cast<std::size_t>(d), -bound);
    std::optional<Rational> best;
    std::vector<std::vector<std::int64_t>> argmin;
    while (true) {
        const auto nnz = std::count_if(y.begin(), y.end(), [](std::int64_t v) { return v != 0; });
        if (nnz <= s) {
            Rational worst = 0;
            for (int i = 0; i < a.rows(); ++i) {
                Rational r = b[static_cast<std::size_t>(i)];
                for (int j = 0; j < d; ++j) r -= a(i, j) * y[static_cast<std::size_t>(j)];
                worst = std::max(worst, r < 0 ? Rational(-r) : r);
            }
            if (!best || worst < *best) {
                best = worst;
                argmin.clear();
            }
            if (worst == *best) argmin.push_back(y);
        }
        int j = d - 1;
        while (j >= 0 && y[static_cast<std::size_t>(j)] == bound) y[static_cast<std::size_t>(j--)] = -bound;
        if (j < 0) break;
        ++y[static_cast<std::size_t>(j)];
    }
    return {*best, argmin};
}

}  // namespace

TEST_CASE("SparseSignal invariants") {
    CHECK_THROWS_AS(SparseSignal(3, {0, 0}, {1, 2}), InvalidInput);
    CHECK_THROWS_AS(SparseSignal(3, {1, 0}, {1, 2}), InvalidInput);
    CHECK_THROWS_AS(SparseSignal(3, {3}, {1}), InvalidInput);
    CHECK_THROWS_AS(SparseSignal(3, {1}, {0}), InvalidInput);
    CHECK_THROWS_AS(SparseSignal(3, {1}, {}), InvalidInput);
    const auto x = SparseSignal::from_dense({0, 4, 0, -1});
    CHECK(x.support() == std::vector<int>{1, 3});
    CHECK(x.to_dense() == std::vector<std::int64_t>{0, 4, 0, -1});
}

TEST_CASE("encode examples") {
    const auto a = construct_vandermonde(2, 3).matrix;
    const auto zero = encode(a, SparseSignal::zero(5), rationals({"0", "0"}));
    CHECK(zero.b == rationals({"0", "0"}));
    CHECK(zero.within_guarantee);

    const SparseSignal x(5, {2}, {2});
    const auto meas = encode(a, x, rationals({"3/10", "-1/5"}));
    CHECK(meas.b == rationals({"23/10", "-21/5"}));
    CHECK(meas.within_guarantee);

    CHECK_FALSE(encode(a, x, rationals({"1/2", "0"})).within_guarantee);
    CHECK_THROWS_AS(encode(a, SparseSignal::zero(4), rationals({"0", "0"})), InvalidInput);
    CHECK_THROWS_AS(encode(a, x, rationals({"0"})), InvalidInput);
}

TEST_CASE("decode examples") {
    const auto a = construct_vandermonde(2, 3).matrix;
    const auto b = rationals({"23/10", "-21/5"});
    const auto [oracle_res, oracle_arg] = decode_oracle(a, b, 1, 3);
    CHECK(oracle_res == Rational(3, 10));
    REQUIRE(oracle_arg.size() == 1);
    CHECK(oracle_arg[0] == std::vector<std::int64_t>{0, 0, 2, 0, 0});

    Measurement meas = encode(a, SparseSignal(5, {2}, {2}), rationals({"3/10", "-1/5"}));
    const auto result = decode(a, meas, 1, 3);
    REQUIRE(result.signal);
    CHECK(*result.signal == SparseSignal(5, {2}, {2}));
    CHECK(result.residual == Rational(3, 10));
    CHECK(result.candidates_checked == 31);
    CHECK(result.guarantee_regime);

    const auto zero = decode(a, rationals({"0", "0"}), 1, 3);
    REQUIRE(zero.signal);
    CHECK(zero.signal->sparsity() == 0);
    CHECK(zero.residual == 0);

    const auto twin = IntMatrix::from_rows({{1, 1, 0}, {2, 2, 1}});
    const auto tie = decode(twin, rationals({"1", "2"}), 1, 1);
    CHECK(tie.ambiguous());
    CHECK_FALSE(tie.signal);
    CHECK(tie.minimizers.size() == 2);
    CHECK(tie.minimizers[0] == SparseSignal(3, {0}, {1}));
    CHECK(tie.minimizers[1] == SparseSignal(3, {1}, {1}));
}

TEST_CASE("decode errors and flags") {
    const auto a = construct_vandermonde(2, 3).matrix;
    CHECK_THROWS_AS(decode(a, rationals({"0"}), 1, 1), InvalidInput);
    CHECK_THROWS_AS(decode(a, rationals({"0", "0"}), 1, 0), InvalidInput);
    DecodeOptions tight;
    tight.budget = 30;
    CHECK_NOTHROW(decode(a, rationals({"0", "0"}), 1, 2));
    CHECK_THROWS_AS(decode(a, rationals({"0", "0"}), 1, 3, tight), BudgetExceeded);

    // Outside the guarantee: 2s > m, or noise at 1/2.
    const auto meas = encode(a, SparseSignal(5, {0}, {1}), rationals({"0", "0"}));
    CHECK_FALSE(decode(a, meas, 2, 1).guarantee_regime);
    const auto loud = encode(a, SparseSignal(5, {0}, {1}), rationals({"1/2", "0"}));
    CHECK_FALSE(decode(a, loud, 1, 1).guarantee_regime);
}

TEST_CASE("decoder matches the dense oracle on random measurements") {
    SeededRng rng(31);
    const auto a = construct_vandermonde(2, 3).matrix;
    for (int trial = 0; trial < 150; ++trial) {
        const std::vector<Rational> b{Rational(rng.in_range(-40, 40), rng.in_range(1, 7)),
                                      Rational(rng.in_range(-40, 40), rng.in_range(1, 7))};
        const int s = 1 + static_cast<int>(rng.below(2));
        const auto [res, arg] = decode_oracle(a, b, s, 2);
        const auto got = decode(a, b, s, 2);
        CHECK(got.residual == res);
        REQUIRE(got.minimizers.size() == arg.size());
        std::vector<std::vector<std::int64_t>> dense;
        for (const auto& x : got.minimizers) dense.push_back(x.to_dense());
        std::sort(dense.begin(), dense.end());
        auto expected = arg;
        std::sort(expected.begin(), expected.end());
        CHECK(dense == expected);
    }
}

TEST_CASE("exact recovery inside the guarantee") {
    SeededRng rng(404);
    const std::vector<Construction> matrices{construct_vandermonde(2, 3), construct_vandermonde(3, 5),
                                             construct_vandermonde(4, 4), construct(2, 5, 12)};
    for (const auto& c : matrices) {
        const auto& a = c.matrix;
        const int m = a.rows();
        const int s = m / 2;
        const std::int64_t bound = m == 4 ? 2 : 3;
        std::vector<std::int64_t> dense(static_cast<std::size_t>(a.cols()), 0);
        for (int trial = 0; trial < 150; ++trial) {
            std::fill(dense.begin(), dense.end(), 0);
            for (int col : rng.subset(a.cols(), static_cast<int>(rng.below(static_cast<std::uint64_t>(s) + 1)))) {
                std::int64_t v = 0;
                while (v == 0) v = rng.in_range(-bound, bound);
                dense[static_cast<std::size_t>(col)] = v;
            }
            const auto x = SparseSignal::from_dense(dense);
            std::vector<Rational> e;
            for (int i = 0; i < m; ++i) e.emplace_back(rng.in_range(-49, 49), 100);
            const auto result = decode(a, encode(a, x, e), s, bound);
            REQUIRE(result.signal);
            CHECK(*result.signal == x);
            CHECK(result.guarantee_regime);
        }
    }
}

TEST_CASE("separation: nonzero m-sparse integer vectors do not vanish") {
    for (const auto& c : {construct_vandermonde(2, 3), construct_vandermonde(3, 4)}) {
        const auto& a = c.matrix;
        const int m = a.rows();
        const std::int64_t range = 6;  // 2B with B = 3
        for_each_combination(a.cols(), m, [&](const std::vector<int>& support) {
            std::vector<std::int64_t> z(static_cast<std::size_t>(m), -range);
            while (true) {
                if (std::any_of(z.begin(), z.end(), [](std::int64_t v) { return v != 0; })) {
                    std::int64_t norm = 0;
                    for (int i = 0; i < m; ++i) {
                        std::int64_t s = 0;
                        for (int k = 0; k < m; ++k) s += a(i, support[static_cast<std::size_t>(k)]) * z[static_cast<std::size_t>(k)];
                        norm = std::max(norm, std::abs(s));
                    }
                    CHECK(norm >= 1);
                }
                int k = m - 1;
                while (k >= 0 && z[static_cast<std::size_t>(k)] == range) z[static_cast<std::size_t>(k--)] = -range;
                if (k < 0) break;
                ++z[static_cast<std::size_t>(k)];
            }
            return true;
        });
    }
}

TEST_CASE("scale_matrix") {
    const auto a = IntMatrix::from_rows({{1, -2}, {0, 1}}, 2);
    CHECK(scale_matrix(a, Rational(1, 2)) == a);
    CHECK(scale_matrix(a, Rational(3)) == IntMatrix::from_rows({{6, -12}, {0, 6}}, 12));
    CHECK_THROWS_AS(scale_matrix(a, Rational(1, 3)), InvalidInput);
    CHECK_THROWS_AS(scale_matrix(a, Rational(-1)), InvalidInput);
    CHECK_FALSE(scale_matrix(construct_vandermonde(2, 3).matrix, Rational(2)).modulus());
}

TEST_CASE("scaling preserves decoding and scales residuals") {
    SeededRng rng(9);
    const auto a = construct_vandermonde(2, 3).matrix;
    for (const Rational c : {Rational(1), Rational(3, 2), Rational(4)}) {
        const auto scaled = scale_matrix(a, c);
        const Rational factor = 2 * c;
        for (int trial = 0; trial < 40; ++trial) {
            const SparseSignal x(5, {static_cast<int>(rng.below(5))}, {rng.in_range(1, 3)});
            const std::vector<Rational> e{Rational(rng.in_range(-49, 49), 100), Rational(rng.in_range(-49, 49), 100)};
            const auto base = decode(a, encode(a, x, e), 1, 3);
            std::vector<Rational> scaled_e{e[0] * factor, e[1] * factor};
            const auto meas = encode(scaled, x, scaled_e, c);
            CHECK(meas.within_guarantee);
            const auto got = decode(scaled, meas, 1, 3);
            REQUIRE(got.signal);
            CHECK(*got.signal == x);
            CHECK(got.residual == base.residual * factor);
        }
        // Every nonzero 2-sparse z has ‖(2C·A) z‖∞ ≥ 2C.
        for (std::int64_t z0 = -3; z0 <= 3; ++z0) {
            for (std::int64_t z1 = -3; z1 <= 3; ++z1) {
                if (z0 == 0 && z1 == 0) continue;
                for (int i = 0; i < 5; ++i) {
                    for (int j = i + 1; j < 5; ++j) {
                        std::int64_t norm = 0;
                        for (int r = 0; r < 2; ++r) norm = std::max(norm, std::abs(scaled(r, i) * z0 + scaled(r, j) * z1));
                        CHECK(Rational(norm) >= factor);
                    }
                }
            }
        }
    }
}

TEST_CASE("guarantee_holds") {
    CHECK(guarantee_holds(4, 2, rationals({"1/4", "0", "0", "0"})));
    CHECK_FALSE(guarantee_holds(4, 3, rationals({"0", "0", "0", "0"})));
    CHECK_FALSE(guarantee_holds(2, 1, rationals({"1/2", "0"})));
    CHECK(guarantee_holds(2, 1, rationals({"-49/100", "0"})));
}

TEST_CASE("large denominators take the arbitrary-precision path") {
    const auto a = construct_vandermonde(3, 4).matrix;
    const SparseSignal x(5, {1}, {-2});
    const std::vector<Rational> e{Rational(1, BigInt("1000000000000000000000000000001")), Rational(-1, 3), Rational(0)};
    const auto result = decode(a, encode(a, x, e), 1, 2);
    REQUIRE(result.signal);
    CHECK(*result.signal == x);
    CHECK(result.residual == Rational(1, 3));
}

TEST_CASE("parallel decoding equals serial") {
    const auto a = construct_vandermonde(4, 4).matrix;
    const auto b = rationals({"1/3", "-7/2", "5", "2/7"});
    DecodeOptions parallel;
    parallel.jobs = 3;
    const auto serial_result = decode(a, b, 2, 2);
    const auto parallel_result = decode(a, b, 2, 2, parallel);
    CHECK(serial_result.minimizers == parallel_result.minimizers);
    CHECK(serial_result.residual == parallel_result.residual);
    CHECK(serial_result.candidates_checked == parallel_result.candidates_checked);
}
