#pragma once

#include <cstdint>
#include <vector>

#include "fullrank/matrix.hpp"
#include "fullrank/numeric.hpp"

namespace fullrank {

enum class Variant { vandermonde, scaled };

const char* to_string(Variant v);

struct DirichletScaling {
    std::int64_t l = 0;
    /// q(l)·d = max_i min(r_i, d − r_i), with r_i = l·j^{i−1} mod d. Equals the
    /// largest |entry| of the scaled column.
    std::int64_t quality_numerator = 0;
    std::int64_t d = 0;
    /// q(l) ≤ d^{−1/m}, compared exactly as (q·d)^m ≤ d^{m−1}.
    bool meets_threshold = false;

    Rational quality() const { return Rational(quality_numerator, d); }
};

struct ConstructionParams {
    int m = 0;
    std::int64_t k = 0;
    /// The prime modulus; equals the column count before truncation.
    std::int64_t d = 0;
    Variant variant = Variant::vandermonde;
    /// Per-column multipliers l_1..l_d (scaled variant only).
    std::vector<std::int64_t> scalings;
    /// Search outcome behind each scaling, parallel to `scalings`.
    std::vector<DirichletScaling> quality;
};

struct Construction {
    IntMatrix matrix;
    ConstructionParams params;
};

/// Smallest prime p in [lo, hi] (odd when `require_odd`). Throws NotFound.
std::int64_t find_prime_in(std::int64_t lo, std::int64_t hi, bool require_odd);
/// Real-bounded form: the integer interval [⌈lo⌉, ⌊hi⌋].
std::int64_t find_prime_in(double lo, double hi, bool require_odd);

/// Column j (1-based) of the power matrix mod d: (j^0, j^1, ..., j^{m−1}) mod d.
std::vector<std::int64_t> power_column(std::int64_t j, std::int64_t d, int m);

/// Vandermonde matrix mod the smallest odd prime d in [k+1, 2k+1]; m×d, columns j = 1..d.
Construction construct_vandermonde(int m, std::int64_t k);

/// Smallest l ∈ [1, d−1] minimizing max_i ‖l·j^{i−1}/d‖.
DirichletScaling dirichlet_scale(std::int64_t j, std::int64_t d, int m);

/// Admissible prime interval [lo, hi] for the scaled variant:
/// k^{m/(m−1)}/2 ≤ p < k^{m/(m−1)}, as exact integer bounds.
std::pair<std::int64_t, std::int64_t> scaled_prime_interval(int m, std::int64_t k);

/// Column-scaled power matrix mod the smallest prime d in the scaled interval.
/// `jobs` caps worker threads for the per-column searches.
Construction construct_scaled(int m, std::int64_t k, int jobs = 1);

/// True iff m < d ≤ max(k+1, k^{m/(m−1)}/2), decided exactly.
bool within_existence_range(int m, std::int64_t k, std::int64_t d);

/// First `d_requested` columns of whichever variant covers it (Vandermonde
/// preferred whenever d_requested ≤ k+1).
Construction construct(int m, std::int64_t k, std::int64_t d_requested, int jobs = 1);

/// Full matrix of the default variant: Vandermonde when k ≥ m, otherwise scaled.
Construction construct_default(int m, std::int64_t k, int jobs = 1);

}  // namespace fullrank
