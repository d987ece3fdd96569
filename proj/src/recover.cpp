#include "fullrank/recover.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "fullrank/errors.hpp"
#include "fullrank/parallel.hpp"

namespace fullrank {

SparseSignal::SparseSignal(int dimension, std::vector<int> support, std::vector<std::int64_t> values)
    : dimension_(dimension), support_(std::move(support)), values_(std::move(values)) {
    if (dimension_ < 1) throw InvalidInput("SparseSignal: dimension must be >= 1");
    if (support_.size() != values_.size()) throw InvalidInput("SparseSignal: support and values differ in length");
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (support_[i] < 0 || support_[i] >= dimension_) throw InvalidInput("SparseSignal: support index out of range");
        if (i > 0 && support_[i] <= support_[i - 1]) throw InvalidInput("SparseSignal: support must be strictly increasing");
        if (values_[i] == 0) throw InvalidInput("SparseSignal: values on the support must be nonzero");
    }
}

SparseSignal SparseSignal::from_dense(const std::vector<std::int64_t>& dense) {
    std::vector<int> support;
    std::vector<std::int64_t> values;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i] != 0) {
            support.push_back(static_cast<int>(i));
            values.push_back(dense[i]);
        }
    }
    return SparseSignal(static_cast<int>(dense.size()), std::move(support), std::move(values));
}

std::vector<std::int64_t> SparseSignal::to_dense() const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(dimension_), 0);
    for (std::size_t i = 0; i < support_.size(); ++i) out[static_cast<std::size_t>(support_[i])] = values_[i];
    return out;
}

Rational linf_norm(const std::vector<Rational>& v) {
    Rational best = 0;
    for (const auto& x : v) best = std::max(best, abs(x));
    return best;
}

Measurement encode(const IntMatrix& a, const SparseSignal& x, const std::vector<Rational>& noise, const Rational& threshold) {
    if (x.dimension() != a.cols()) {
        throw InvalidInput("encode: signal dimension " + std::to_string(x.dimension()) + " != d=" + std::to_string(a.cols()));
    }
    if (noise.size() != static_cast<std::size_t>(a.rows())) {
        throw InvalidInput("encode: noise length " + std::to_string(noise.size()) + " != m=" + std::to_string(a.rows()));
    }
    if (threshold <= 0) throw InvalidInput("encode: threshold must be positive");
    Measurement out;
    out.noise = noise;
    out.threshold = threshold;
    out.b.resize(noise.size());
    for (int i = 0; i < a.rows(); ++i) {
        BigInt ax = 0;
        for (std::size_t k = 0; k < x.support().size(); ++k) ax += BigInt(a(i, x.support()[k])) * x.values()[k];
        out.b[static_cast<std::size_t>(i)] = Rational(ax) + noise[static_cast<std::size_t>(i)];
    }
    out.within_guarantee = linf_norm(noise) < threshold;
    return out;
}

namespace {

struct Candidate {
    std::vector<int> support;
    std::vector<std::int64_t> values;
};

template <typename Int>
struct LocalBest {
    std::optional<Int> score;
    std::vector<Candidate> minimizers;
    std::uint64_t checked = 0;

    void offer(const Int& value, const std::vector<int>& support, const std::vector<std::int64_t>& values) {
        ++checked;
        if (!score || value < *score) {
            score = value;
            minimizers.clear();
        }
        if (value == *score) minimizers.push_back({support, values});
    }
};

// Minimizes max_i |N_i − D·(A y)_i| over candidates; N = D·b is integral.
template <typename Int>
LocalBest<Int> decode_core(const IntMatrix& a, const std::vector<Int>& numer, const Int& denom, int s, std::int64_t bound,
                           int jobs) {
    const int m = a.rows();
    const int d = a.cols();
    std::vector<std::vector<int>> supports;
    for (int size = 0; size <= s; ++size) {
        for_each_combination(d, size, [&](const std::vector<int>& c) {
            supports.push_back(c);
            return true;
        });
    }
    std::vector<std::int64_t> nonzero;
    for (std::int64_t v = -bound; v <= bound; ++v) {
        if (v != 0) nonzero.push_back(v);
    }

    const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(resolve_jobs(jobs)), supports.size()));
    std::vector<LocalBest<Int>> local(static_cast<std::size_t>(workers));
    run_workers(workers, [&](int worker, int stride) {
        auto& best = local[static_cast<std::size_t>(worker)];
        std::vector<Int> residual(static_cast<std::size_t>(m));
        for (std::size_t t = static_cast<std::size_t>(worker); t < supports.size(); t += static_cast<std::size_t>(stride)) {
            const auto& support = supports[t];
            const std::size_t size = support.size();
            std::vector<std::size_t> digit(size, 0);
            std::vector<std::int64_t> values(size);
            while (true) {
                for (std::size_t k = 0; k < size; ++k) values[k] = nonzero[digit[k]];
                Int worst = 0;
                for (int i = 0; i < m; ++i) {
                    Int ay = 0;
                    for (std::size_t k = 0; k < size; ++k) ay += Int(a(i, support[k])) * Int(values[k]);
                    Int r = numer[static_cast<std::size_t>(i)] - denom * ay;
                    if (r < 0) r = -r;
                    if (r > worst) worst = r;
                }
                best.offer(worst, support, values);
                std::size_t k = size;
                while (k > 0 && ++digit[k - 1] == nonzero.size()) digit[--k] = 0;
                if (k == 0) break;
            }
        }
    });

    LocalBest<Int> merged;
    for (auto& part : local) {
        merged.checked += part.checked;
        if (!part.score) continue;
        if (!merged.score || *part.score < *merged.score) {
            merged.score = part.score;
            merged.minimizers = std::move(part.minimizers);
        } else if (*part.score == *merged.score) {
            merged.minimizers.insert(merged.minimizers.end(), part.minimizers.begin(), part.minimizers.end());
        }
    }
    return merged;
}

DecodeResult decode_impl(const IntMatrix& a, const std::vector<Rational>& b, int s, std::int64_t bound, bool noise_ok,
                         const DecodeOptions& options) {
    const int m = a.rows();
    const int d = a.cols();
    if (b.size() != static_cast<std::size_t>(m)) {
        throw InvalidInput("decode: measurement length " + std::to_string(b.size()) + " != m=" + std::to_string(m));
    }
    if (s < 0 || s > d) throw InvalidInput("decode: sparsity must lie in [0, d]");
    if (bound < 1) throw InvalidInput("decode: amplitude bound must be >= 1");
    const std::uint64_t required = saturating_mul(binomial(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(s)),
                                                  saturating_pow(2 * static_cast<std::uint64_t>(bound) + 1, static_cast<unsigned>(s)));
    if (required > options.budget) throw BudgetExceeded("decode: C(d,s)·(2B+1)^s candidates", required, options.budget);

    BigInt denom = 1;
    for (const auto& v : b) denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(v));
    std::vector<BigInt> numer(b.size());
    BigInt numer_max = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        numer[i] = boost::multiprecision::numerator(b[i]) * (denom / boost::multiprecision::denominator(b[i]));
        numer_max = std::max(numer_max, BigInt(boost::multiprecision::abs(numer[i])));
    }
    // |N_i| + D·|(Ay)_i|, with |(Ay)_i| ≤ s·max|a|·B, bounds every intermediate.
    const BigInt reach = numer_max + denom * BigInt(a.max_abs()) * bound * std::max(s, 1);

    DecodeResult out;
    std::vector<Candidate> minimizers;
    if (reach < (BigInt(1) << 61)) {
        std::vector<std::int64_t> n64(numer.size());
        for (std::size_t i = 0; i < numer.size(); ++i) n64[i] = numer[i].convert_to<std::int64_t>();
        auto best = decode_core<std::int64_t>(a, n64, denom.convert_to<std::int64_t>(), s, bound, options.jobs);
        out.residual = Rational(*best.score, denom);
        out.candidates_checked = best.checked;
        minimizers = std::move(best.minimizers);
    } else {
        auto best = decode_core<BigInt>(a, numer, denom, s, bound, options.jobs);
        out.residual = Rational(*best.score, denom);
        out.candidates_checked = best.checked;
        minimizers = std::move(best.minimizers);
    }
    for (auto& c : minimizers) out.minimizers.emplace_back(d, std::move(c.support), std::move(c.values));
    std::sort(out.minimizers.begin(), out.minimizers.end());
    if (out.minimizers.size() == 1) out.signal = out.minimizers.front();
    out.guarantee_regime = noise_ok && 2 * s <= m;
    return out;
}

}  // namespace

DecodeResult decode(const IntMatrix& a, const Measurement& meas, int s, std::int64_t bound, const DecodeOptions& options) {
    const bool noise_ok = !meas.noise.empty() && linf_norm(meas.noise) < meas.threshold;
    return decode_impl(a, meas.b, s, bound, noise_ok, options);
}

DecodeResult decode(const IntMatrix& a, const std::vector<Rational>& b, int s, std::int64_t bound, const DecodeOptions& options) {
    return decode_impl(a, b, s, bound, false, options);
}

IntMatrix scale_matrix(const IntMatrix& a, const Rational& c) {
    const Rational twice = 2 * c;
    if (twice <= 0 || boost::multiprecision::denominator(twice) != 1) {
        throw InvalidInput("scale_matrix: 2C must be a positive integer, got 2C = " + format_rational(twice));
    }
    const BigInt factor_big = boost::multiprecision::numerator(twice);
    if (factor_big > BigInt(INT64_MAX)) throw InvalidInput("scale_matrix: factor overflows");
    const auto factor = factor_big.convert_to<std::int64_t>();
    Entries e = a.entries();
    for (Eigen::Index i = 0; i < e.size(); ++i) e.data()[i] = checked_mul(e.data()[i], factor);
    std::optional<std::int64_t> bound;
    if (a.entry_bound()) bound = checked_mul(*a.entry_bound(), factor);
    return IntMatrix(std::move(e), bound, std::nullopt);
}

bool guarantee_holds(int m, int s, const std::vector<Rational>& noise, const Rational& threshold) {
    return 2 * s <= m && linf_norm(noise) < threshold;
}

}  // namespace fullrank
