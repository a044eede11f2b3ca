#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace svf {

/// Intervals whose gap is at most this are merged when a CompactSet is built.
inline constexpr double kMergeTolerance = 1e-9;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Closed interval [lo, hi]; lo == hi is a legal degenerate interval.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    [[nodiscard]] double length() const { return hi - lo; }
    [[nodiscard]] bool contains(double p, double tol = 0.0) const {
        return p >= lo - tol && p <= hi + tol;
    }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint closed intervals, stored in ascending order.
///
/// Construction sorts the input, merges overlapping intervals and closes
/// gaps no wider than kMergeTolerance. An empty set is representable but
/// is rejected by the metric operations.
class CompactSet {
public:
    CompactSet() = default;
    CompactSet(std::initializer_list<Interval> intervals);
    explicit CompactSet(std::vector<Interval> intervals);

    [[nodiscard]] const std::vector<Interval>& intervals() const { return intervals_; }
    [[nodiscard]] std::size_t size() const { return intervals_.size(); }
    [[nodiscard]] bool empty() const { return intervals_.empty(); }
    [[nodiscard]] double min() const;
    [[nodiscard]] double max() const;

    [[nodiscard]] bool contains(double p, double tol = 0.0) const;

    /// Open gaps (max I_k, min I_{k+1}) between consecutive intervals.
    [[nodiscard]] std::vector<Interval> gaps() const;

    /// Interval endpoints, ascending (the discrete sample of the set).
    [[nodiscard]] std::vector<double> endpoints() const;

    [[nodiscard]] CompactSet unite(const CompactSet& other) const;

    friend bool operator==(const CompactSet&, const CompactSet&) = default;

private:
    std::vector<Interval> intervals_;
};

/// Strictly ascending finite point set.
class DiscretePointSet {
public:
    DiscretePointSet() = default;
    DiscretePointSet(std::initializer_list<double> points);
    /// Sorts and drops exact duplicates.
    explicit DiscretePointSet(std::vector<double> points);

    [[nodiscard]] const std::vector<double>& points() const { return points_; }
    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] bool empty() const { return points_.empty(); }
    [[nodiscard]] double operator[](std::size_t i) const { return points_[i]; }

    friend bool operator==(const DiscretePointSet&, const DiscretePointSet&) = default;

private:
    std::vector<double> points_;
};

struct MetricPair {
    double v = 0.0;
    double w = 0.0;
    friend bool operator==(const MetricPair&, const MetricPair&) = default;
    friend auto operator<=>(const MetricPair&, const MetricPair&) = default;
};

[[nodiscard]] double point_to_set_distance(double p, const CompactSet& set);

/// Hausdorff distance, evaluated exactly from interval endpoints and the
/// midpoints of the other set's gaps.
[[nodiscard]] double hausdorff(const CompactSet& a, const CompactSet& b);

/// Indices into `candidates` of all points nearest to p; ties within a
/// relative 1e-12 are all reported.
[[nodiscard]] std::vector<std::size_t> nearest_indices(double p, std::span<const double> candidates);

/// All pairs (v, w) with v nearest to w in V or w nearest to v in W,
/// sorted lexicographically. Equidistant neighbours yield one pair each.
[[nodiscard]] std::vector<MetricPair> metric_pairs(const DiscretePointSet& v, const DiscretePointSet& w);

/// { sum_i weights[i] * v_i : (v_0..v_N) a metric chain of the sets }.
[[nodiscard]] DiscretePointSet metric_linear_combination(std::span<const DiscretePointSet> sets,
                                                         std::span<const double> weights);

std::string to_string(const CompactSet& set);

}  // namespace svf
