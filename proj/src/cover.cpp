#include "fullrank/cover.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "fullrank/errors.hpp"
#include "fullrank/linalg.hpp"
#include "fullrank/numeric.hpp"

namespace fullrank {

Normal normalize_normal(const Normal& n) {
    std::int64_t g = 0;
    for (std::int64_t v : n) g = std::gcd(g, v < 0 ? -v : v);
    if (g == 0) throw InvalidInput("normal vector is zero");
    Normal out(n.size());
    std::transform(n.begin(), n.end(), out.begin(), [g](std::int64_t v) { return v / g; });
    const auto lead = std::find_if(out.begin(), out.end(), [](std::int64_t v) { return v != 0; });
    if (*lead < 0) {
        for (auto& v : out) v = -v;
    }
    return out;
}

CoverInstance::CoverInstance(int m, std::int64_t k, std::vector<Normal> normals) : m_(m), k_(k) {
    if (m < 2) throw InvalidInput("CoverInstance: dimension must be >= 2");
    if (k < 0) throw InvalidInput("CoverInstance: grid radius must be >= 0");
    normals_.reserve(normals.size());
    for (const auto& n : normals) {
        if (n.size() != static_cast<std::size_t>(m)) {
            throw InvalidInput("CoverInstance: normal of length " + std::to_string(n.size()) + " in dimension " + std::to_string(m));
        }
        normals_.push_back(normalize_normal(n));
    }
}

std::int64_t cover_lower_bound(int m, std::int64_t k) {
    if (m < 2 || k < m) {
        throw InvalidInput("cover_lower_bound: requires k >= m >= 2 (m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")");
    }
    // Smallest q with ((2m−2)·q)^{m−1} ≥ k^m.
    return ceil_scaled_root(ipow(BigInt(k), static_cast<unsigned>(m)), BigInt(2 * m - 2), static_cast<unsigned>(m - 1))
        .convert_to<std::int64_t>();
}

namespace {

std::int64_t dot(const Normal& n, const GridPoint& x) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n.size(); ++i) s = checked_add(s, checked_mul(n[i], x[i]));
    return s;
}

/// Calls visit on every grid point in lexicographic order (last coordinate fastest).
void for_each_grid_point(int m, std::int64_t k, const std::function<bool(const GridPoint&)>& visit) {
    GridPoint x(static_cast<std::size_t>(m), -k);
    while (true) {
        if (!visit(x)) return;
        int i = m - 1;
        while (i >= 0 && x[static_cast<std::size_t>(i)] == k) x[static_cast<std::size_t>(i--)] = -k;
        if (i < 0) return;
        ++x[static_cast<std::size_t>(i)];
    }
}

std::uint64_t grid_size(int m, std::int64_t k) { return saturating_pow(2 * static_cast<std::uint64_t>(k) + 1, static_cast<unsigned>(m)); }

}  // namespace

CoverCheck verify_cover(const CoverInstance& inst, std::uint64_t budget) {
    const std::uint64_t size = grid_size(inst.m(), inst.k());
    if (size > budget) throw BudgetExceeded("verify_cover: (2k+1)^m grid points", size, budget);
    CoverCheck out;
    for_each_grid_point(inst.m(), inst.k(), [&](const GridPoint& x) {
        ++out.points_checked;
        // The origin lies on every central hyperplane, so it counts as covered even by an empty list.
        if (std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; })) return true;
        const bool covered = std::any_of(inst.normals().begin(), inst.normals().end(), [&](const Normal& n) { return dot(n, x) == 0; });
        if (!covered) {
            out.uncovered = x;
            return false;
        }
        return true;
    });
    out.accepted = !out.uncovered;
    return out;
}

HyperplaneColumns columns_on_hyperplane(const IntMatrix& a, const Normal& n) {
    if (n.size() != static_cast<std::size_t>(a.rows())) throw InvalidInput("columns_on_hyperplane: normal length must equal m");
    if (std::all_of(n.begin(), n.end(), [](std::int64_t v) { return v == 0; })) throw InvalidInput("columns_on_hyperplane: zero normal");
    HyperplaneColumns out;
    for (int c = 0; c < a.cols(); ++c) {
        std::int64_t s = 0;
        for (int i = 0; i < a.rows(); ++i) s = checked_add(s, checked_mul(n[static_cast<std::size_t>(i)], a(i, c)));
        if (s == 0) out.columns.push_back(c);
    }
    out.count = static_cast<int>(out.columns.size());
    return out;
}

namespace {

/// Normal of the span of m−1 points (generalized cross product), zero if dependent.
Normal span_normal(const std::vector<const GridPoint*>& points, int m) {
    Normal n(static_cast<std::size_t>(m));
    DenseMatrix<std::int64_t> minor(m - 1, m - 1);
    for (int drop = 0; drop < m; ++drop) {
        for (int r = 0; r < m - 1; ++r) {
            for (int c = 0, cc = 0; c < m; ++c) {
                if (c == drop) continue;
                minor(r, cc++) = (*points[static_cast<std::size_t>(r)])[static_cast<std::size_t>(c)];
            }
        }
        const BigInt det = det_bareiss<BigInt>(minor);
        n[static_cast<std::size_t>(drop)] = ((drop % 2) ? BigInt(-det) : det).convert_to<std::int64_t>();
    }
    return n;
}

class SetCoverSearch {
public:
    SetCoverSearch(std::vector<boost::dynamic_bitset<>> sets, std::size_t universe)
        : sets_(std::move(sets)), universe_(universe), covering_(universe) {
        for (std::size_t s = 0; s < sets_.size(); ++s) {
            for (std::size_t p = sets_[s].find_first(); p != boost::dynamic_bitset<>::npos; p = sets_[s].find_next(p)) {
                covering_[p].push_back(s);
            }
            max_set_ = std::max(max_set_, sets_[s].count());
        }
    }

    std::vector<std::size_t> solve() {
        best_ = greedy();
        std::vector<std::size_t> chosen;
        recurse(boost::dynamic_bitset<>(universe_), chosen);
        return best_;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::vector<std::size_t> greedy() const {
        boost::dynamic_bitset<> covered(universe_);
        std::vector<std::size_t> picked;
        while (covered.count() < universe_) {
            std::size_t pick = 0, gain = 0;
            for (std::size_t s = 0; s < sets_.size(); ++s) {
                const std::size_t g = (sets_[s] - covered).count();
                if (g > gain) {
                    gain = g;
                    pick = s;
                }
            }
            if (gain == 0) throw Infeasible("set cover: some point lies on no candidate hyperplane");
            covered |= sets_[pick];
            picked.push_back(pick);
        }
        return picked;
    }

    void recurse(const boost::dynamic_bitset<>& covered, std::vector<std::size_t>& chosen) {
        ++nodes_;
        const std::size_t remaining = universe_ - covered.count();
        if (remaining == 0) {
            if (chosen.size() < best_.size()) best_ = chosen;
            return;
        }
        const std::size_t lower = (remaining + max_set_ - 1) / max_set_;
        if (chosen.size() + lower >= best_.size()) return;

        // Branch on the uncovered point with the fewest candidate hyperplanes.
        std::size_t pivot = 0, fewest = SIZE_MAX;
        for (std::size_t p = 0; p < universe_; ++p) {
            if (!covered[p] && covering_[p].size() < fewest) {
                fewest = covering_[p].size();
                pivot = p;
            }
        }
        std::vector<std::pair<std::size_t, std::size_t>> options;
        for (std::size_t s : covering_[pivot]) options.emplace_back((sets_[s] - covered).count(), s);
        std::sort(options.begin(), options.end(), [](const auto& x, const auto& y) {
            return x.first != y.first ? x.first > y.first : x.second < y.second;
        });
        for (const auto& [gain, s] : options) {
            chosen.push_back(s);
            recurse(covered | sets_[s], chosen);
            chosen.pop_back();
        }
    }

    std::vector<boost::dynamic_bitset<>> sets_;
    std::size_t universe_;
    std::vector<std::vector<std::size_t>> covering_;
    std::size_t max_set_ = 1;
    std::vector<std::size_t> best_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

MinCover min_cover_bruteforce(int m, std::int64_t k) {
    if (m < 2) throw InvalidInput("min_cover_bruteforce: dimension must be >= 2");
    if (k < 0) throw InvalidInput("min_cover_bruteforce: grid radius must be >= 0");
    MinCover out;
    if (k == 0) {
        Normal axis(static_cast<std::size_t>(m), 0);
        axis[0] = 1;
        out.size = 1;
        out.witness = {axis};
        return out;
    }
    const std::int64_t max_k = m == 2 ? 4 : m == 3 ? 1 : 0;
    if (k > max_k) {
        throw BudgetExceeded("min_cover_bruteforce: (2k+1)^m grid points", grid_size(m, k), grid_size(m, max_k));
    }

    std::vector<GridPoint> points;
    for_each_grid_point(m, k, [&](const GridPoint& x) {
        if (std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v != 0; })) points.push_back(x);
        return true;
    });

    std::set<Normal> candidates;
    for_each_combination(static_cast<int>(points.size()), m - 1, [&](const std::vector<int>& pick) {
        std::vector<const GridPoint*> span;
        for (int p : pick) span.push_back(&points[static_cast<std::size_t>(p)]);
        const Normal n = span_normal(span, m);
        if (std::any_of(n.begin(), n.end(), [](std::int64_t v) { return v != 0; })) candidates.insert(normalize_normal(n));
        return true;
    });

    std::vector<Normal> normals(candidates.begin(), candidates.end());
    std::vector<boost::dynamic_bitset<>> sets;
    for (const auto& n : normals) {
        boost::dynamic_bitset<> covers(points.size());
        for (std::size_t p = 0; p < points.size(); ++p) covers[p] = dot(n, points[p]) == 0;
        sets.push_back(std::move(covers));
    }
    SetCoverSearch search(std::move(sets), points.size());
    const auto picked = search.solve();
    out.size = static_cast<int>(picked.size());
    for (std::size_t s : picked) out.witness.push_back(normals[s]);
    std::sort(out.witness.begin(), out.witness.end());
    out.nodes_explored = search.nodes();
    return out;
}

}  // namespace fullrank
