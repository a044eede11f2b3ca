#pragma once

#include <span>
#include <string>
#include <vector>

#include "svf/reconstruct.hpp"
#include "svf/svf_model.hpp"

namespace svf {

/// max over an equispaced grid of d_H(F(xi), A(xi)).
[[nodiscard]] double max_hausdorff_error(const SvfModel& model, const Approximant& approx, std::size_t grid_count);

/// Euclidean distance between a true and an approximated closing point.
[[nodiscard]] double pct_error(Point2 truth, Point2 approx);

/// Least-squares slope of log(error) against log(delta).
[[nodiscard]] double loglog_slope(std::span<const double> deltas, std::span<const double> errors);

struct ErrorRecord {
    std::size_t n = 0;
    double delta = 0.0;
    double max_error = 0.0;  // NaN when the reconstruction failed
    double ratio = 0.0;
    double pct_error_left = 0.0;   // worst hole; NaN when unavailable
    double pct_error_right = 0.0;
    double slope = 0.0;  // against the previous record; NaN on the first
    std::string failure;
};

struct ErrorReport {
    std::string method;
    std::string model;
    std::vector<ErrorRecord> records;
};

/// Partition used for a method: Chebyshev for metric-poly, uniform otherwise.
[[nodiscard]] Partition partition_for(Method method, std::size_t n, double a, double b);

/// Default evaluation grid: 2N for metric-poly, 400 otherwise.
[[nodiscard]] std::size_t default_grid(Method method, std::size_t n);

/// One record per N. grid_count 0 selects default_grid. Reconstruction
/// failures are stored in the record and the sweep moves on.
[[nodiscard]] ErrorReport sweep(const SvfModel& model, const MethodParams& params, std::span<const std::size_t> n_list,
                                std::size_t grid_count = 0);

/// Per N: worst left and right closing-point errors over the model's holes.
[[nodiscard]] ErrorReport pct_sweep(const SvfModel& model, const MethodParams& params,
                                    std::span<const std::size_t> n_list);

[[nodiscard]] std::string to_csv(const ErrorReport& report);

}  // namespace svf
