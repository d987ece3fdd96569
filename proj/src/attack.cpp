#include "fullrank/attack.hpp"

#include <cmath>
#include <limits>

#include "fullrank/errors.hpp"
#include "fullrank/numeric.hpp"
#include "fullrank/parallel.hpp"

namespace fullrank {

const char* to_string(Regime regime) { return regime == Regime::large_m ? "large_m" : "small_m"; }

Regime regime_for(int m, std::int64_t k) {
    return static_cast<double>(m) >= std::log(static_cast<double>(k)) ? Regime::large_m : Regime::small_m;
}

AttackParams attack_params(int m, std::int64_t k) {
    if (m < 2) throw InvalidInput("attack_params: requires m >= 2");
    if (k < 2) throw InvalidInput("attack_params: requires k >= 2");
    AttackParams out;
    out.regime = regime_for(m, k);
    out.config.min_agree = m;
    const int floor_log = static_cast<int>(std::floor(std::log(static_cast<double>(k))));
    if (out.regime == Regime::large_m) {
        out.config.t = std::max(1, floor_log);
        out.t_clamped = floor_log < 1;
        out.config.lambda = 9;
    } else {
        out.config.t = m;
        // ⌊25·k^{1/(m−1)}⌋ = largest L with L^{m−1} ≤ 25^{m−1}·k
        const auto e = static_cast<unsigned>(m - 1);
        out.config.lambda = floor_root(ipow(BigInt(25), e) * k, e).convert_to<std::int64_t>();
    }
    out.below_guarantee_regime =
        ipow(BigInt(10), static_cast<unsigned>(std::max(0, floor_log))) <= BigInt(k) * k;
    return out;
}

IntVector combination_vector(const IntMatrix& a, std::span<const std::int64_t> lambda) {
    if (lambda.empty() || lambda.size() > static_cast<std::size_t>(a.rows())) {
        throw InvalidInput("combination_vector: coefficient length " + std::to_string(lambda.size()) +
                           " outside [1, m=" + std::to_string(a.rows()) + "]");
    }
    IntVector v = IntVector::Zero(a.cols());
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            v(j) = checked_add(v(j), checked_mul(lambda[i], a(static_cast<int>(i), j)));
        }
    }
    return v;
}

std::vector<int> agreement_set(const IntVector& u, const IntVector& v) {
    if (u.size() != v.size()) throw InvalidInput("agreement_set: length mismatch");
    std::vector<int> out;
    for (Eigen::Index j = 0; j < u.size(); ++j) {
        if (u(j) == v(j)) out.push_back(static_cast<int>(j));
    }
    return out;
}

namespace {

struct Hit {
    std::uint64_t first;   // λ′ index
    std::uint64_t second;  // λ index
};

std::vector<std::int64_t> digits_of(std::uint64_t index, int t, std::int64_t lambda) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(t));
    const auto base = static_cast<std::uint64_t>(lambda + 1);
    for (int i = t - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(index % base);
        index /= base;
    }
    return out;
}

}  // namespace

std::optional<DegeneracyCertificate> find_collision(const IntMatrix& a, const AttackConfig& cfg, int jobs) {
    const int m = a.rows();
    const int d = a.cols();
    if (cfg.t < 1 || cfg.t > m) throw InvalidInput("find_collision: t must lie in [1, m]");
    if (cfg.lambda < 1) throw InvalidInput("find_collision: lambda must be >= 1");
    if (cfg.min_agree < 1) throw InvalidInput("find_collision: min_agree must be >= 1");

    const std::uint64_t count = saturating_pow(static_cast<std::uint64_t>(cfg.lambda) + 1, static_cast<unsigned>(cfg.t));
    const std::uint64_t pairs = saturating_mul(count, count);
    if (pairs > cfg.pair_budget) throw BudgetExceeded("find_collision: (Lambda+1)^{2t} pairs", pairs, cfg.pair_budget);
    if (cfg.min_agree > d) return std::nullopt;

    // Row-major table of v_λ for every λ, index order = lexicographic order.
    DenseMatrix<std::int64_t> table(static_cast<Eigen::Index>(count), d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const auto lambda = digits_of(idx, cfg.t, cfg.lambda);
        table.row(static_cast<Eigen::Index>(idx)) = combination_vector(a, lambda).transpose();
    }

    const int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(resolve_jobs(jobs)), count));
    std::vector<std::optional<Hit>> local(static_cast<std::size_t>(workers));
    run_workers(workers, [&](int worker, int stride) {
        for (std::uint64_t i = static_cast<std::uint64_t>(worker); i < count; i += static_cast<std::uint64_t>(stride)) {
            const std::int64_t* u = table.row(static_cast<Eigen::Index>(i)).data();
            for (std::uint64_t j = i + 1; j < count; ++j) {
                const std::int64_t* v = table.row(static_cast<Eigen::Index>(j)).data();
                int agree = 0;
                for (int c = 0; c < d && agree < cfg.min_agree; ++c) agree += u[c] == v[c];
                if (agree >= cfg.min_agree) {
                    local[static_cast<std::size_t>(worker)] = Hit{i, j};
                    return;
                }
            }
        }
    });

    std::optional<Hit> best;
    for (const auto& hit : local) {
        if (hit && (!best || hit->first < best->first)) best = hit;
    }
    if (!best) return std::nullopt;

    const auto earlier = digits_of(best->first, cfg.t, cfg.lambda);
    const auto later = digits_of(best->second, cfg.t, cfg.lambda);
    DegeneracyCertificate cert;
    cert.t = cfg.t;
    cert.coeffs.resize(static_cast<std::size_t>(cfg.t));
    for (int i = 0; i < cfg.t; ++i) {
        cert.coeffs[static_cast<std::size_t>(i)] = later[static_cast<std::size_t>(i)] - earlier[static_cast<std::size_t>(i)];
    }
    for (int c = 0; c < d && static_cast<int>(cert.columns.size()) < cfg.min_agree; ++c) {
        if (table(static_cast<Eigen::Index>(best->first), c) == table(static_cast<Eigen::Index>(best->second), c)) {
            cert.columns.push_back(c);
        }
    }
    return cert;
}

}  // namespace fullrank
