#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svf/chains.hpp"
#include "svf/interp.hpp"
#include "svf/svf_model.hpp"

namespace svf {

struct ReconstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Point2 = std::pair<double, double>;

enum class CurveKind { polynomial, spline, spline_plus_singular };

/// One reconstructed boundary. Evaluation clamps x into [lo, hi], so the
/// curve is continued by its end values outside its interval.
struct BoundaryCurve {
    CurveKind kind = CurveKind::polynomial;
    PolyInterpolant poly;
    CubicSpline spline;
    SingularExpansion p;  // spline_plus_singular only
    SingularExpansion q;
    double lo = 0.0;
    double hi = 0.0;

    [[nodiscard]] double operator()(double x) const;

    static BoundaryCurve polynomial(PolyInterpolant poly, double lo, double hi);
    static BoundaryCurve cubic_spline(CubicSpline spline, double lo, double hi);
    static BoundaryCurve singular(CubicSpline s, SingularExpansion p, SingularExpansion q, double lo, double hi);
};

struct ApproxHole {
    double c = 0.0;  // approximated closing points
    double d = 0.0;
    double c_ext = 0.0;  // extension interval, the hole is active on [c_ext, d_ext]
    double d_ext = 0.0;
    BoundaryCurve lower;
    BoundaryCurve upper;
    Point2 pct_left{};
    Point2 pct_right{};
    bool flagged = false;  // fell back to metric-poly caps
};

enum class Method { metric_poly, c4, holder };

struct MethodParams {
    Method method = Method::metric_poly;
    std::size_t k = 3;
    std::size_t r = 4;
};

struct Approximant {
    double a = 0.0;
    double b = 1.0;
    BoundaryCurve ell;
    BoundaryCurve u;
    std::vector<ApproxHole> holes;
    Method method = Method::metric_poly;
    std::size_t n = 0;  // number of nodes minus one
    double delta = 0.0;
    std::size_t k = 0;
    std::size_t r = 0;
    std::size_t s = 3;
    std::vector<std::string> warnings;
};

[[nodiscard]] Approximant reconstruct_metric_poly(const SampleSet& samples);

/// Left (or right) closing point of one hole from the cubics through the
/// four boundary values nearest that side.
[[nodiscard]] Point2 refine_pct_c4(const BoundaryChainPair& bc, double delta, Side side);

[[nodiscard]] Approximant reconstruct_c4(const SampleSet& samples);

/// Closing point estimate from the reflected graph x = p(y), p of degree
/// 2k-1 through the 2k values on the k nodes nearest the side.
[[nodiscard]] Point2 approx_pct_holder(const BoundaryChainPair& bc, std::size_t k, Side side);

/// One Holder hole from known closing points: half-power fits P and Q at
/// both ends, a not-a-knot spline through the remaining regular part.
[[nodiscard]] ApproxHole holder_hole(const BoundaryChainPair& bc, Point2 left_pct, Point2 right_pct, std::size_t r);

[[nodiscard]] Approximant reconstruct_holder(const SampleSet& samples, std::size_t k = 3, std::size_t r = 4);

[[nodiscard]] Approximant reconstruct(const SampleSet& samples, const MethodParams& params);

/// Per hole, the closing points the chosen method would use, computed from
/// the boundary chains alone.
[[nodiscard]] std::vector<std::pair<Point2, Point2>> approximate_pcts(const SampleSet& samples,
                                                                      const MethodParams& params);

[[nodiscard]] CompactSet evaluate_approximant(const Approximant& approx, double x);

std::string to_string(Method method);
/// Accepts "metric-poly", "c4", "holder".
[[nodiscard]] Method parse_method(const std::string& name);

}  // namespace svf
