#include "svf/bench.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace svf {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double ratio_for(Method method, std::size_t n, double delta, double err) {
    switch (method) {
        case Method::metric_poly: {
            const double nn = static_cast<double>(n);
            return err / (std::log(nn) / nn);
        }
        case Method::c4: return err / std::pow(delta, 4);
        case Method::holder: return std::log(err) / std::log(delta);
    }
    return kNaN;
}

// Worst distance from each model closing point to the nearest estimate.
std::pair<double, double> worst_pct_errors(const SvfModel& model,
                                           const std::vector<std::pair<Point2, Point2>>& estimates) {
    if (model.holes.empty()) return {0.0, 0.0};
    if (estimates.empty()) return {kNaN, kNaN};
    double left = 0.0;
    double right = 0.0;
    for (const HoleSpec& hole : model.holes) {
        double best_left = INFINITY;
        double best_right = INFINITY;
        for (const auto& [l, r] : estimates) {
            best_left = std::min(best_left, pct_error(hole.left_pct(), l));
            best_right = std::min(best_right, pct_error(hole.right_pct(), r));
        }
        left = std::max(left, best_left);
        right = std::max(right, best_right);
    }
    return {left, right};
}

void fill_slopes(std::vector<ErrorRecord>& records, double ErrorRecord::*field) {
    for (std::size_t i = 0; i < records.size(); ++i) {
        records[i].slope = kNaN;
        if (i == 0) continue;
        const double e0 = records[i - 1].*field;
        const double e1 = records[i].*field;
        if (e0 > 0.0 && e1 > 0.0) {
            records[i].slope = std::log(e1 / e0) / std::log(records[i].delta / records[i - 1].delta);
        }
    }
}

std::string number(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

double max_hausdorff_error(const SvfModel& model, const Approximant& approx, std::size_t grid_count) {
    if (grid_count < 2) throw DomainError("max_hausdorff_error: grid needs at least 2 points");
    double worst = 0.0;
    for (std::size_t j = 0; j < grid_count; ++j) {
        double x = model.a + (model.b - model.a) * static_cast<double>(j) / static_cast<double>(grid_count - 1);
        if (j + 1 == grid_count) x = model.b;
        worst = std::max(worst, hausdorff(evaluate(model, x), evaluate_approximant(approx, x)));
    }
    return worst;
}

double pct_error(Point2 truth, Point2 approx) {
    return std::hypot(truth.first - approx.first, truth.second - approx.second);
}

double loglog_slope(std::span<const double> deltas, std::span<const double> errors) {
    if (deltas.size() != errors.size() || deltas.size() < 2) {
        throw DomainError("loglog_slope: need at least 2 (delta, error) pairs");
    }
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        if (!(deltas[i] > 0.0) || !(errors[i] > 0.0)) throw DomainError("loglog_slope: values must be positive");
        sx += std::log(deltas[i]);
        sy += std::log(errors[i]);
    }
    const double n = static_cast<double>(deltas.size());
    const double mx = sx / n;
    const double my = sy / n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        const double dx = std::log(deltas[i]) - mx;
        sxy += dx * (std::log(errors[i]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0) throw DomainError("loglog_slope: all deltas equal");
    return sxy / sxx;
}

Partition partition_for(Method method, std::size_t n, double a, double b) {
    return method == Method::metric_poly ? chebyshev_partition(n, a, b) : uniform_partition(n, a, b);
}

std::size_t default_grid(Method method, std::size_t n) { return method == Method::metric_poly ? 2 * n : 400; }

ErrorReport sweep(const SvfModel& model, const MethodParams& params, std::span<const std::size_t> n_list,
                  std::size_t grid_count) {
    ErrorReport report{to_string(params.method), model.name, {}};
    for (std::size_t n : n_list) {
        ErrorRecord rec;
        rec.n = n;
        rec.max_error = kNaN;
        rec.ratio = kNaN;
        rec.pct_error_left = kNaN;
        rec.pct_error_right = kNaN;
        try {
            const SampleSet samples = sample(model, partition_for(params.method, n, model.a, model.b));
            rec.delta = params.method == Method::metric_poly ? samples.partition.norm()
                                                              : (model.b - model.a) / static_cast<double>(n);
            try {
                std::tie(rec.pct_error_left, rec.pct_error_right) =
                    worst_pct_errors(model, approximate_pcts(samples, params));
            } catch (const std::exception&) {
                // left as NaN
            }
            const Approximant A = reconstruct(samples, params);
            const std::size_t grid = grid_count ? grid_count : default_grid(params.method, n);
            rec.max_error = max_hausdorff_error(model, A, grid);
            rec.ratio = ratio_for(params.method, n, rec.delta, rec.max_error);
        } catch (const std::exception& e) {
            rec.failure = e.what();
        }
        report.records.push_back(std::move(rec));
    }
    fill_slopes(report.records, &ErrorRecord::max_error);
    return report;
}

ErrorReport pct_sweep(const SvfModel& model, const MethodParams& params, std::span<const std::size_t> n_list) {
    ErrorReport report{to_string(params.method), model.name, {}};
    for (std::size_t n : n_list) {
        ErrorRecord rec;
        rec.n = n;
        rec.max_error = kNaN;
        rec.ratio = kNaN;
        rec.pct_error_left = kNaN;
        rec.pct_error_right = kNaN;
        try {
            const SampleSet samples = sample(model, partition_for(params.method, n, model.a, model.b));
            rec.delta = params.method == Method::metric_poly ? samples.partition.norm()
                                                              : (model.b - model.a) / static_cast<double>(n);
            std::tie(rec.pct_error_left, rec.pct_error_right) =
                worst_pct_errors(model, approximate_pcts(samples, params));
        } catch (const std::exception& e) {
            rec.failure = e.what();
        }
        report.records.push_back(std::move(rec));
    }
    fill_slopes(report.records, &ErrorRecord::pct_error_left);
    return report;
}

std::string to_csv(const ErrorReport& report) {
    std::ostringstream os;
    os << "method,model,N,delta,max_error,ratio,pct_error_left,pct_error_right,slope\n";
    for (const ErrorRecord& r : report.records) {
        os << report.method << ',' << report.model << ',' << r.n << ',' << number(r.delta) << ','
           << number(r.max_error) << ',' << number(r.ratio) << ',' << number(r.pct_error_left) << ','
           << number(r.pct_error_right) << ',' << number(r.slope) << '\n';
    }
    return os.str();
}

}  // namespace svf
