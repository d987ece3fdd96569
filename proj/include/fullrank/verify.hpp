#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fullrank/matrix.hpp"

namespace fullrank {

inline constexpr std::uint64_t kDefaultMinorBudget = 10'000'000;

enum class VerifyMode { exhaustive, sampled };
enum class Arithmetic { mod_d, exact };

const char* to_string(VerifyMode mode);
const char* to_string(Arithmetic arithmetic);

struct VerificationReport {
    std::uint64_t total_minors_checked = 0;
    /// Column index sets whose m×m minor is exactly zero, lexicographically sorted.
    std::vector<std::vector<int>> failures;
    VerifyMode mode = VerifyMode::exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    Arithmetic arithmetic = Arithmetic::exact;

    bool passed() const noexcept { return failures.empty(); }
};

struct VerifyOptions {
    std::uint64_t budget = kDefaultMinorBudget;
    int jobs = 1;
    /// Ignore a modulus annotation and use exact determinants throughout.
    bool force_exact = false;
};

/// Whether the minor on `cols` vanishes. With a modulus annotation a nonzero
/// residue decides; a zero residue is confirmed with the exact determinant.
bool minor_vanishes(const IntMatrix& a, std::span<const int> cols, bool force_exact = false);

/// All C(d, m) column m-subsets in lexicographic order.
VerificationReport verify_exhaustive(const IntMatrix& a, const VerifyOptions& options = {});

/// `trials` uniform column m-subsets from a seeded generator.
VerificationReport verify_sampled(const IntMatrix& a, std::uint64_t trials, std::uint64_t seed,
                                  const VerifyOptions& options = {});

struct DegeneracyCertificate {
    /// Number of leading rows combined.
    int t = 0;
    std::vector<std::int64_t> coeffs;
    /// Strictly increasing columns on which the combination vanishes.
    std::vector<int> columns;

    bool operator==(const DegeneracyCertificate&) const = default;
};

struct CertificateCheck {
    bool accepted = false;
    std::string reason;
};

CertificateCheck verify_certificate(const IntMatrix& a, const DegeneracyCertificate& cert);

}  // namespace fullrank
