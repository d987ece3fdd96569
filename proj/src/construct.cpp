#include "fullrank/construct.hpp"

#include <cmath>
#include <string>

#include "fullrank/errors.hpp"
#include "fullrank/linalg.hpp"
#include "fullrank/parallel.hpp"

namespace fullrank {

const char* to_string(Variant v) { return v == Variant::vandermonde ? "vandermonde" : "scaled"; }

std::int64_t find_prime_in(std::int64_t lo, std::int64_t hi, bool require_odd) {
    if (lo > hi) throw InvalidInput("find_prime_in: empty interval [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    for (std::int64_t p = std::max<std::int64_t>(lo, 2); p <= hi; ++p) {
        if (require_odd && p % 2 == 0) continue;
        if (is_prime(p)) return p;
    }
    throw NotFound("no " + std::string(require_odd ? "odd " : "") + "prime in [" + std::to_string(lo) + ", " +
                   std::to_string(hi) + "]");
}

std::int64_t find_prime_in(double lo, double hi, bool require_odd) {
    if (!(lo <= hi)) throw InvalidInput("find_prime_in: requires lo <= hi");
    const double lo_int = std::ceil(lo);
    const double hi_int = std::floor(hi);
    if (lo_int > hi_int) {
        throw NotFound("no integer, hence no prime, in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return find_prime_in(static_cast<std::int64_t>(lo_int), static_cast<std::int64_t>(hi_int), require_odd);
}

std::vector<std::int64_t> power_column(std::int64_t j, std::int64_t d, int m) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = pow_mod(j, static_cast<std::uint64_t>(i), d);
    return out;
}

Construction construct_vandermonde(int m, std::int64_t k) {
    if (m < 2) throw InvalidInput("construct_vandermonde: requires m >= 2");
    if (k < m) {
        throw InvalidInput("construct_vandermonde: requires k >= m (k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")");
    }
    const std::int64_t d = find_prime_in(k + 1, 2 * k + 1, true);
    Entries e(m, d);
    for (std::int64_t j = 1; j <= d; ++j) {
        const auto column = power_column(j, d, m);
        for (int i = 0; i < m; ++i) e(i, j - 1) = centered_residue(column[static_cast<std::size_t>(i)], d);
    }
    return {IntMatrix(std::move(e), k, d), ConstructionParams{m, k, d, Variant::vandermonde, {}, {}}};
}

DirichletScaling dirichlet_scale(std::int64_t j, std::int64_t d, int m) {
    if (m < 2) throw InvalidInput("dirichlet_scale: requires m >= 2");
    if (d < 2 || !is_prime(d)) throw InvalidInput("dirichlet_scale: d must be prime");
    if (j < 1 || j > d) throw InvalidInput("dirichlet_scale: column index out of [1, d]");
    const auto powers = power_column(j, d, m);
    DirichletScaling best{0, d, d, false};
    for (std::int64_t l = 1; l < d; ++l) {
        std::int64_t worst = 0;
        for (std::int64_t r0 : powers) {
            const auto r = static_cast<std::int64_t>(static_cast<__int128>(l) * r0 % d);
            worst = std::max(worst, std::min(r, d - r));
            if (worst >= best.quality_numerator) break;
        }
        if (worst < best.quality_numerator) {
            best.l = l;
            best.quality_numerator = worst;
        }
    }
    best.meets_threshold = ipow(BigInt(best.quality_numerator), static_cast<unsigned>(m)) <=
                           ipow(BigInt(d), static_cast<unsigned>(m - 1));
    return best;
}

std::pair<std::int64_t, std::int64_t> scaled_prime_interval(int m, std::int64_t k) {
    const BigInt target = ipow(BigInt(k), static_cast<unsigned>(m));
    const auto e = static_cast<unsigned>(m - 1);
    // lo: smallest p with (2p)^{m−1} ≥ k^m. hi: largest p with p^{m−1} < k^m.
    const BigInt lo = ceil_scaled_root(target, 2, e);
    const BigInt hi = ceil_scaled_root(target, 1, e) - 1;
    return {lo.convert_to<std::int64_t>(), hi.convert_to<std::int64_t>()};
}

Construction construct_scaled(int m, std::int64_t k, int jobs) {
    if (m < 2) throw InvalidInput("construct_scaled: requires m >= 2");
    if (k < 3) throw InvalidInput("construct_scaled: requires k >= 3");
    // k^{m/(m−1)}/2 > k+1  ⟺  k^m > (2(k+1))^{m−1}
    if (ipow(BigInt(k), static_cast<unsigned>(m)) <= ipow(BigInt(2 * (k + 1)), static_cast<unsigned>(m - 1))) {
        throw InvalidInput("construct_scaled: requires k^{m/(m-1)}/2 > k+1 (m=" + std::to_string(m) +
                           ", k=" + std::to_string(k) + ")");
    }
    const auto [lo, hi] = scaled_prime_interval(m, k);
    const std::int64_t d = find_prime_in(lo, hi, false);

    std::vector<DirichletScaling> scalings(static_cast<std::size_t>(d));
    run_workers(std::min<std::int64_t>(resolve_jobs(jobs), d), [&](int worker, int workers) {
        for (std::int64_t j = 1 + worker; j <= d; j += workers) {
            scalings[static_cast<std::size_t>(j - 1)] = dirichlet_scale(j, d, m);
        }
    });

    Entries e(m, d);
    std::vector<std::int64_t> multipliers(static_cast<std::size_t>(d));
    for (std::int64_t j = 1; j <= d; ++j) {
        const auto& s = scalings[static_cast<std::size_t>(j - 1)];
        if (s.quality_numerator > k) {
            throw Infeasible("construct_scaled: column " + std::to_string(j) + " has minimax entry " +
                             std::to_string(s.quality_numerator) + " > k = " + std::to_string(k));
        }
        multipliers[static_cast<std::size_t>(j - 1)] = s.l;
        const auto column = power_column(j, d, m);
        for (int i = 0; i < m; ++i) {
            const auto scaled = static_cast<std::int64_t>(static_cast<__int128>(s.l) * column[static_cast<std::size_t>(i)] % d);
            e(i, j - 1) = centered_residue(scaled, d);
        }
    }
    return {IntMatrix(std::move(e), k, d), ConstructionParams{m, k, d, Variant::scaled, std::move(multipliers), std::move(scalings)}};
}

bool within_existence_range(int m, std::int64_t k, std::int64_t d) {
    if (d <= m) return false;
    if (d <= k + 1) return true;
    // d ≤ k^{m/(m−1)}/2  ⟺  (2d)^{m−1} ≤ k^m
    return ipow(BigInt(2 * d), static_cast<unsigned>(m - 1)) <= ipow(BigInt(k), static_cast<unsigned>(m));
}

Construction construct(int m, std::int64_t k, std::int64_t d_requested, int jobs) {
    if (m < 2) throw InvalidInput("construct: requires m >= 2");
    if (k < 1) throw InvalidInput("construct: requires k >= 1");
    if (!within_existence_range(m, k, d_requested)) {
        throw InvalidInput("construct: d=" + std::to_string(d_requested) + " outside m < d <= max(k+1, k^{m/(m-1)}/2) for m=" +
                           std::to_string(m) + ", k=" + std::to_string(k));
    }
    Construction full = (d_requested <= k + 1 && k >= m) ? construct_vandermonde(m, k) : construct_scaled(m, k, jobs);
    if (full.params.d == d_requested) return full;

    std::vector<int> keep(static_cast<std::size_t>(d_requested));
    for (std::int64_t j = 0; j < d_requested; ++j) keep[static_cast<std::size_t>(j)] = static_cast<int>(j);
    full.matrix = select_columns(full.matrix, keep);
    if (!full.params.scalings.empty()) {
        full.params.scalings.resize(static_cast<std::size_t>(d_requested));
        full.params.quality.resize(static_cast<std::size_t>(d_requested));
    }
    return full;
}

Construction construct_default(int m, std::int64_t k, int jobs) {
    return k >= m ? construct_vandermonde(m, k) : construct_scaled(m, k, jobs);
}

}  // namespace fullrank
