#pragma once

#include <functional>
#include <string>
#include <vector>

#include "svf/sets.hpp"

namespace svf {

struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Real function with the interval on which it is meaningful.
struct BoundaryFn {
    std::function<double(double)> f;
    double lo = 0.0;
    double hi = 0.0;

    double operator()(double x) const { return f(x); }
};

/// Hole {(x, y) : g(x) < y < h(x), c < x < d}. Evaluation orders the two
/// boundary values, so a model may list g and h in either role.
struct HoleSpec {
    double c = 0.0;
    double d = 0.0;
    BoundaryFn g;
    BoundaryFn h;

    [[nodiscard]] double lower(double x) const;
    [[nodiscard]] double upper(double x) const;
    /// The closing point (c, g(c)).
    [[nodiscard]] std::pair<double, double> left_pct() const { return {c, g(c)}; }
    [[nodiscard]] std::pair<double, double> right_pct() const { return {d, g(d)}; }
};

/// Analytic set-valued function on [a, b] with lower/upper boundaries and
/// separable holes.
struct SvfModel {
    std::string name;
    double a = -1.0;
    double b = 1.0;
    BoundaryFn ell;
    BoundaryFn u;
    std::vector<HoleSpec> holes;

    /// Checks the class assumptions on a grid. Hard violations throw
    /// ModelError; soft ones (hole heights outside (max ell, min u), g/h
    /// listed in swapped roles) come back as warnings.
    [[nodiscard]] std::vector<std::string> validate(std::size_t grid = 2001) const;
};

enum class PartitionKind { chebyshev, uniform, general };

struct Partition {
    std::vector<double> nodes;
    PartitionKind kind = PartitionKind::general;

    [[nodiscard]] std::size_t size() const { return nodes.size(); }
    /// Largest gap between consecutive nodes.
    [[nodiscard]] double norm() const;
};

struct SampleSet {
    double a = 0.0;
    double b = 0.0;
    Partition partition;
    std::vector<CompactSet> values;

    [[nodiscard]] std::size_t size() const { return values.size(); }
    [[nodiscard]] double node(std::size_t i) const { return partition.nodes[i]; }
    /// Throws DomainError on length mismatch, unsorted nodes or empty values.
    void check() const;
};

[[nodiscard]] CompactSet evaluate(const SvfModel& model, double x);
[[nodiscard]] SampleSet sample(const SvfModel& model, const Partition& partition);

/// Roots of the Chebyshev polynomial of degree N+1 mapped to [a, b], ascending.
[[nodiscard]] Partition chebyshev_partition(std::size_t n, double a, double b);
/// N+1 equispaced nodes a + i (b - a) / N.
[[nodiscard]] Partition uniform_partition(std::size_t n, double a, double b);

/// The three reference functions: "FA" (three Lipschitz holes), "FB" (one
/// C4 hole closing at the roots of cos(2x)/2 + cos(3x)/3) and "FC" (one
/// elliptic hole with square-root singular PCTs).
[[nodiscard]] SvfModel builtin(const std::string& name);

}  // namespace svf
