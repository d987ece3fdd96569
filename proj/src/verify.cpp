#include "fullrank/verify.hpp"

#include <algorithm>
#include <set>

#include "fullrank/errors.hpp"
#include "fullrank/linalg.hpp"
#include "fullrank/numeric.hpp"
#include "fullrank/parallel.hpp"

namespace fullrank {

const char* to_string(VerifyMode mode) { return mode == VerifyMode::exhaustive ? "exhaustive" : "sampled"; }
const char* to_string(Arithmetic arithmetic) { return arithmetic == Arithmetic::mod_d ? "mod_d" : "exact"; }

bool minor_vanishes(const IntMatrix& a, std::span<const int> cols, bool force_exact) {
    const Entries block = column_block(a.entries(), cols);
    if (a.modulus() && !force_exact && det_mod_p_unchecked(block, *a.modulus()) != 0) return false;
    return det_bareiss<BigInt>(block) == 0;
}

namespace {

Arithmetic arithmetic_for(const IntMatrix& a, const VerifyOptions& options) {
    return a.modulus() && !options.force_exact ? Arithmetic::mod_d : Arithmetic::exact;
}

void require_wide(const IntMatrix& a) {
    if (a.cols() < a.rows()) {
        throw InvalidInput("verify: matrix has d=" + std::to_string(a.cols()) + " < m=" + std::to_string(a.rows()) +
                           " columns, no m×m minors exist");
    }
}

}  // namespace

VerificationReport verify_exhaustive(const IntMatrix& a, const VerifyOptions& options) {
    require_wide(a);
    const int m = a.rows();
    const int d = a.cols();
    const std::uint64_t total = binomial(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(m));
    if (total > options.budget) throw BudgetExceeded("verify_exhaustive: C(d, m) minors", total, options.budget);

    const int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(resolve_jobs(options.jobs)), total));
    std::vector<std::vector<std::vector<int>>> local(static_cast<std::size_t>(workers));
    run_workers(workers, [&](int worker, int count) {
        std::uint64_t rank = 0;
        for_each_combination(d, m, [&](const std::vector<int>& cols) {
            if (rank++ % static_cast<std::uint64_t>(count) == static_cast<std::uint64_t>(worker) &&
                minor_vanishes(a, cols, options.force_exact)) {
                local[static_cast<std::size_t>(worker)].push_back(cols);
            }
            return true;
        });
    });

    VerificationReport report;
    report.total_minors_checked = total;
    report.mode = VerifyMode::exhaustive;
    report.arithmetic = arithmetic_for(a, options);
    for (auto& part : local) {
        report.failures.insert(report.failures.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    std::sort(report.failures.begin(), report.failures.end());
    return report;
}

VerificationReport verify_sampled(const IntMatrix& a, std::uint64_t trials, std::uint64_t seed, const VerifyOptions& options) {
    if (trials == 0) throw InvalidInput("verify_sampled: trials must be >= 1");
    require_wide(a);
    if (trials > options.budget) throw BudgetExceeded("verify_sampled: trials", trials, options.budget);

    // Draw all subsets up front so the sample is independent of worker count.
    SeededRng rng(seed);
    std::vector<std::vector<int>> draws(trials);
    for (auto& draw : draws) draw = rng.subset(a.cols(), a.rows());

    std::vector<char> vanished(trials, 0);
    const int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(resolve_jobs(options.jobs)), trials));
    run_workers(workers, [&](int worker, int count) {
        for (std::uint64_t i = static_cast<std::uint64_t>(worker); i < trials; i += static_cast<std::uint64_t>(count)) {
            vanished[i] = minor_vanishes(a, draws[i], options.force_exact) ? 1 : 0;
        }
    });

    std::set<std::vector<int>> failures;
    for (std::uint64_t i = 0; i < trials; ++i) {
        if (vanished[i]) failures.insert(draws[i]);
    }
    VerificationReport report;
    report.total_minors_checked = trials;
    report.failures.assign(failures.begin(), failures.end());
    report.mode = VerifyMode::sampled;
    report.seed = seed;
    report.trials = trials;
    report.arithmetic = arithmetic_for(a, options);
    return report;
}

CertificateCheck verify_certificate(const IntMatrix& a, const DegeneracyCertificate& cert) {
    const int m = a.rows();
    const int d = a.cols();
    if (cert.t < 1 || cert.t > m) return {false, "t=" + std::to_string(cert.t) + " outside [1, m=" + std::to_string(m) + "]"};
    if (m > d) return {false, "matrix has fewer columns than rows"};
    if (cert.coeffs.size() != static_cast<std::size_t>(cert.t)) {
        return {false, "coefficient vector has length " + std::to_string(cert.coeffs.size()) + ", expected t=" + std::to_string(cert.t)};
    }
    if (std::all_of(cert.coeffs.begin(), cert.coeffs.end(), [](std::int64_t c) { return c == 0; })) {
        return {false, "coefficient vector is zero"};
    }
    if (cert.columns.size() < static_cast<std::size_t>(m)) {
        return {false, "column set has " + std::to_string(cert.columns.size()) + " < m=" + std::to_string(m) + " entries"};
    }
    for (std::size_t i = 0; i < cert.columns.size(); ++i) {
        const int c = cert.columns[i];
        if (c < 0 || c >= d) return {false, "column " + std::to_string(c) + " out of range"};
        if (i > 0 && c <= cert.columns[i - 1]) return {false, "columns are not strictly increasing"};
    }
    for (int c : cert.columns) {
        BigInt value = 0;
        for (int i = 0; i < cert.t; ++i) value += BigInt(cert.coeffs[static_cast<std::size_t>(i)]) * a(i, c);
        if (value != 0) return {false, "combination is " + value.str() + " at column " + std::to_string(c)};
    }
    const std::vector<int> first(cert.columns.begin(), cert.columns.begin() + m);
    const BigInt det = det_bareiss<BigInt>(column_block(a.entries(), first));
    if (det != 0) return {false, "submatrix determinant is " + det.str()};
    return {true, "combination vanishes on " + std::to_string(cert.columns.size()) + " columns; minor is singular"};
}

}  // namespace fullrank
