#include "svf/sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace svf {

namespace {

double tie_tolerance(double a, double b) {
    return 1e-12 * (1.0 + std::max(std::abs(a), std::abs(b)));
}

// Largest distance from a point of `from` to the set `to`. The distance
// function is piecewise linear on each interval of `from`, so its maximum
// sits at an endpoint or at the midpoint of a gap of `to`.
double directed_hausdorff(const CompactSet& from, const CompactSet& to) {
    double worst = 0.0;
    for (const Interval& iv : from.intervals()) {
        worst = std::max(worst, point_to_set_distance(iv.lo, to));
        worst = std::max(worst, point_to_set_distance(iv.hi, to));
    }
    for (const Interval& gap : to.gaps()) {
        const double mid = 0.5 * (gap.lo + gap.hi);
        if (from.contains(mid)) {
            worst = std::max(worst, point_to_set_distance(mid, to));
        }
    }
    return worst;
}

}  // namespace

CompactSet::CompactSet(std::initializer_list<Interval> intervals)
    : CompactSet(std::vector<Interval>(intervals)) {}

CompactSet::CompactSet(std::vector<Interval> intervals) {
    for (const Interval& iv : intervals) {
        if (!(iv.lo <= iv.hi)) {
            throw DomainError("interval with lo > hi: [" + std::to_string(iv.lo) + ", " +
                              std::to_string(iv.hi) + "]");
        }
    }
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    for (const Interval& iv : intervals) {
        if (!intervals_.empty() && iv.lo <= intervals_.back().hi + kMergeTolerance) {
            intervals_.back().hi = std::max(intervals_.back().hi, iv.hi);
        } else {
            intervals_.push_back(iv);
        }
    }
}

double CompactSet::min() const {
    if (empty()) throw DomainError("min of empty set");
    return intervals_.front().lo;
}

double CompactSet::max() const {
    if (empty()) throw DomainError("max of empty set");
    return intervals_.back().hi;
}

bool CompactSet::contains(double p, double tol) const {
    auto it = std::lower_bound(intervals_.begin(), intervals_.end(), p - tol,
                               [](const Interval& iv, double value) { return iv.hi < value; });
    return it != intervals_.end() && it->contains(p, tol);
}

std::vector<Interval> CompactSet::gaps() const {
    std::vector<Interval> out;
    for (std::size_t k = 0; k + 1 < intervals_.size(); ++k) {
        out.push_back({intervals_[k].hi, intervals_[k + 1].lo});
    }
    return out;
}

std::vector<double> CompactSet::endpoints() const {
    std::vector<double> out;
    out.reserve(2 * intervals_.size());
    for (const Interval& iv : intervals_) {
        out.push_back(iv.lo);
        if (iv.hi != iv.lo) out.push_back(iv.hi);
    }
    return out;
}

CompactSet CompactSet::unite(const CompactSet& other) const {
    std::vector<Interval> all = intervals_;
    all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
    return CompactSet(std::move(all));
}

DiscretePointSet::DiscretePointSet(std::initializer_list<double> points)
    : DiscretePointSet(std::vector<double>(points)) {}

DiscretePointSet::DiscretePointSet(std::vector<double> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

double point_to_set_distance(double p, const CompactSet& set) {
    if (set.empty()) throw DomainError("distance to an empty set");
    const auto& ivs = set.intervals();
    auto it = std::lower_bound(ivs.begin(), ivs.end(), p,
                               [](const Interval& iv, double value) { return iv.hi < value; });
    double best = std::numeric_limits<double>::infinity();
    if (it != ivs.end()) {
        if (it->contains(p)) return 0.0;
        best = it->lo - p;
    }
    if (it != ivs.begin()) {
        best = std::min(best, p - std::prev(it)->hi);
    }
    return best;
}

double hausdorff(const CompactSet& a, const CompactSet& b) {
    if (a.empty() || b.empty()) throw DomainError("Hausdorff distance with an empty operand");
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

std::vector<std::size_t> nearest_indices(double p, std::span<const double> candidates) {
    std::vector<std::size_t> out;
    if (candidates.empty()) return out;
    double best = std::numeric_limits<double>::infinity();
    for (double q : candidates) best = std::min(best, std::abs(p - q));
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (std::abs(p - candidates[i]) - best <= tie_tolerance(p, candidates[i])) out.push_back(i);
    }
    return out;
}

std::vector<MetricPair> metric_pairs(const DiscretePointSet& v, const DiscretePointSet& w) {
    if (v.empty() || w.empty()) throw DomainError("metric pairs of an empty set");
    std::vector<MetricPair> out;
    for (double p : v.points()) {
        for (std::size_t j : nearest_indices(p, w.points())) out.push_back({p, w[j]});
    }
    for (double q : w.points()) {
        for (std::size_t i : nearest_indices(q, v.points())) out.push_back({v[i], q});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DiscretePointSet metric_linear_combination(std::span<const DiscretePointSet> sets,
                                           std::span<const double> weights) {
    if (sets.size() != weights.size()) {
        throw DomainError("metric linear combination: sets and weights differ in length");
    }
    if (sets.empty()) return {};
    for (const auto& s : sets) {
        if (s.empty()) throw DomainError("metric linear combination of an empty set");
    }

    // successors[i][a] = indices b in sets[i+1] with (sets[i][a], sets[i+1][b]) a metric pair
    std::vector<std::vector<std::vector<std::size_t>>> successors(sets.size());
    for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
        const auto& from = sets[i].points();
        const auto& to = sets[i + 1].points();
        successors[i].resize(from.size());
        for (const MetricPair& mp : metric_pairs(sets[i], sets[i + 1])) {
            auto a = std::lower_bound(from.begin(), from.end(), mp.v) - from.begin();
            auto b = std::lower_bound(to.begin(), to.end(), mp.w) - to.begin();
            successors[i][a].push_back(static_cast<std::size_t>(b));
        }
    }

    std::vector<double> sums;
    struct Frame {
        std::size_t layer;
        std::size_t index;
        double partial;
    };
    std::vector<Frame> stack;
    for (std::size_t a = 0; a < sets[0].size(); ++a) {
        stack.push_back({0, a, weights[0] * sets[0][a]});
    }
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.layer + 1 == sets.size()) {
            sums.push_back(f.partial);
            continue;
        }
        for (std::size_t b : successors[f.layer][f.index]) {
            stack.push_back({f.layer + 1, b, f.partial + weights[f.layer + 1] * sets[f.layer + 1][b]});
        }
    }
    return DiscretePointSet(std::move(sums));
}

std::string to_string(const CompactSet& set) {
    std::ostringstream os;
    os.precision(10);
    if (set.empty()) return "{}";
    for (std::size_t k = 0; k < set.size(); ++k) {
        if (k) os << " U ";
        os << '[' << set.intervals()[k].lo << ", " << set.intervals()[k].hi << ']';
    }
    return os.str();
}

}  // namespace svf
