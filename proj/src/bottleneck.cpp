#include "topocorr/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace topocorr {

namespace {

using Point = std::pair<double, double>;

double linf(const Point& a, const Point& b) {
    return std::max(std::fabs(a.first - b.first), std::fabs(a.second - b.second));
}

double diagonal_cost(const Point& p) { return (p.second - p.first) / 2.0; }

void reject_zero_persistence(const PersistenceDiagram& d) {
    for (const Point& p : d.finite_pairs()) {
        if (p.first == p.second) {
            throw std::invalid_argument(
                "bottleneck distance requires zero-persistence pairs to be dropped");
        }
    }
}

// Minimum over perfect matchings of the maximum |a - b|: for points on a
// line the sorted pairing is optimal (uncrossing never increases the max).
// Essential births are stored sorted.
double essential_matching_cost(const std::vector<double>& a,
                               const std::vector<double>& b) {
    double cost = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        cost = std::max(cost, std::fabs(a[i] - b[i]));
    }
    return cost;
}

// Perfect-matching feasibility at threshold lambda in the augmented bipartite
// graph: left = P plus a diagonal proxy per point of Q, right = Q plus a
// diagonal proxy per point of P. Proxy-proxy edges are always allowed.
class ThresholdMatcher {
public:
    ThresholdMatcher(const std::vector<Point>& p, const std::vector<Point>& q)
        : p_(p), q_(q), np_(p.size()), nq_(q.size()), total_(np_ + nq_) {}

    bool feasible(double lambda) {
        match_left_.assign(total_, kUnmatched);
        match_right_.assign(total_, kUnmatched);
        stamp_.assign(total_, 0);
        round_ = 0;
        for (std::size_t l = 0; l < total_; ++l) {
            ++round_;
            if (!augment(l, lambda)) return false;
        }
        return true;
    }

private:
    static constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

    bool edge(std::size_t l, std::size_t r, double lambda) const {
        const bool left_real = l < np_;
        const bool right_real = r < nq_;
        if (left_real && right_real) return linf(p_[l], q_[r]) <= lambda;
        if (left_real) {
            // real point to its own diagonal proxy only
            return r - nq_ == l && diagonal_cost(p_[l]) <= lambda;
        }
        if (right_real) {
            return l - np_ == r && diagonal_cost(q_[r]) <= lambda;
        }
        return true; // proxy to proxy, cost 0
    }

    bool augment(std::size_t l, double lambda) {
        if (stamp_[l] == round_) return false;
        stamp_[l] = round_;
        for (std::size_t r = 0; r < total_; ++r) {
            if (!edge(l, r, lambda)) continue;
            if (match_right_[r] == kUnmatched || augment(match_right_[r], lambda)) {
                match_left_[l] = r;
                match_right_[r] = l;
                return true;
            }
        }
        return false;
    }

    const std::vector<Point>& p_;
    const std::vector<Point>& q_;
    std::size_t np_;
    std::size_t nq_;
    std::size_t total_;
    std::vector<std::size_t> match_left_;
    std::vector<std::size_t> match_right_;
    std::vector<unsigned> stamp_;
    unsigned round_ = 0;
};

double finite_matching_cost(const std::vector<Point>& p, const std::vector<Point>& q) {
    if (p.empty() && q.empty()) return 0.0;

    std::vector<double> candidates{0.0};
    for (const Point& a : p) candidates.push_back(diagonal_cost(a));
    for (const Point& b : q) candidates.push_back(diagonal_cost(b));
    for (const Point& a : p) {
        for (const Point& b : q) candidates.push_back(linf(a, b));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    // Smallest feasible candidate; the all-diagonal matching makes the
    // largest candidate always feasible.
    ThresholdMatcher matcher(p, q);
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (matcher.feasible(candidates[mid])) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return candidates[lo];
}

} // namespace

ExtendedDistance bottleneck_distance(const PersistenceDiagram& d1,
                                     const PersistenceDiagram& d2) {
    reject_zero_persistence(d1);
    reject_zero_persistence(d2);
    if (d1.essential_births().size() != d2.essential_births().size()) {
        return ExtendedDistance::infinite();
    }
    const double essential =
        essential_matching_cost(d1.essential_births(), d2.essential_births());
    const double finite = finite_matching_cost(d1.finite_pairs(), d2.finite_pairs());
    return ExtendedDistance::finite(std::max(essential, finite));
}

namespace {

// Assign every point of p to an unused point of q or to the diagonal,
// leftover q points to the diagonal; returns the minimum over assignments of
// the maximum cost.
double enumerate_finite(const std::vector<Point>& p, const std::vector<Point>& q,
                        std::vector<char>& used, std::size_t i, double current) {
    if (i == p.size()) {
        double worst = current;
        for (std::size_t j = 0; j < q.size(); ++j) {
            if (!used[j]) worst = std::max(worst, diagonal_cost(q[j]));
        }
        return worst;
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (used[j]) continue;
        used[j] = 1;
        best = std::min(best, enumerate_finite(p, q, used, i + 1,
                                               std::max(current, linf(p[i], q[j]))));
        used[j] = 0;
    }
    best = std::min(best, enumerate_finite(p, q, used, i + 1,
                                           std::max(current, diagonal_cost(p[i]))));
    return best;
}

} // namespace

ExtendedDistance bottleneck_oracle(const PersistenceDiagram& d1,
                                   const PersistenceDiagram& d2) {
    reject_zero_persistence(d1);
    reject_zero_persistence(d2);
    if (d1.total_points() + d2.total_points() > 8) {
        throw OracleSizeError("bottleneck oracle limited to 8 combined points");
    }
    if (d1.essential_births().size() != d2.essential_births().size()) {
        return ExtendedDistance::infinite();
    }

    double essential_best = 0.0;
    if (!d1.essential_births().empty()) {
        essential_best = std::numeric_limits<double>::infinity();
        std::vector<std::size_t> perm(d2.essential_births().size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        do {
            double worst = 0.0;
            for (std::size_t i = 0; i < perm.size(); ++i) {
                worst = std::max(worst, std::fabs(d1.essential_births()[i] -
                                                  d2.essential_births()[perm[i]]));
            }
            essential_best = std::min(essential_best, worst);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::vector<char> used(d2.finite_pairs().size(), 0);
    const double finite_best =
        enumerate_finite(d1.finite_pairs(), d2.finite_pairs(), used, 0, 0.0);

    return ExtendedDistance::finite(std::max(essential_best, finite_best));
}

} // namespace topocorr
