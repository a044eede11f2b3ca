#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "svf/sets.hpp"

namespace svf {

/// Lagrange interpolating polynomial in barycentric form (second kind).
class PolyInterpolant {
public:
    PolyInterpolant() = default;
    /// Throws DomainError on duplicate nodes or length mismatch.
    PolyInterpolant(std::vector<double> nodes, std::vector<double> values);
    /// Rebuilds from stored weights (used when reading exported approximants).
    PolyInterpolant(std::vector<double> nodes, std::vector<double> values, std::vector<double> weights);

    [[nodiscard]] double operator()(double x) const;
    [[nodiscard]] double derivative(double x) const;

    [[nodiscard]] std::size_t degree() const { return nodes_.empty() ? 0 : nodes_.size() - 1; }
    [[nodiscard]] const std::vector<double>& nodes() const { return nodes_; }
    [[nodiscard]] const std::vector<double>& values() const { return values_; }
    [[nodiscard]] const std::vector<double>& weights() const { return weights_; }

    /// Lagrange basis values l_i(x).
    [[nodiscard]] std::vector<double> basis(double x) const;

private:
    std::vector<double> nodes_;
    std::vector<double> values_;
    std::vector<double> weights_;
};

[[nodiscard]] PolyInterpolant poly_fit(std::vector<double> nodes, std::vector<double> values);
[[nodiscard]] double poly_derivative_eval(const PolyInterpolant& p, double x);

/// max over grid of sum_i |l_i(x)|.
[[nodiscard]] double lebesgue_constant(std::span<const double> nodes, std::span<const double> grid);

/// C2 cubic spline with not-a-knot end conditions. Each piece is stored as
/// y_i + c1 t + c2 t^2 + c3 t^3 with t = x - x_i.
class CubicSpline {
public:
    struct Piece {
        double c0, c1, c2, c3;
    };

    CubicSpline() = default;
    CubicSpline(std::vector<double> knots, std::vector<Piece> pieces);

    [[nodiscard]] double operator()(double x) const;
    /// d-th derivative, d in 0..3.
    [[nodiscard]] double derivative(double x, int order = 1) const;

    [[nodiscard]] const std::vector<double>& knots() const { return knots_; }
    [[nodiscard]] const std::vector<Piece>& pieces() const { return pieces_; }

private:
    [[nodiscard]] std::size_t locate(double x) const;
    std::vector<double> knots_;
    std::vector<Piece> pieces_;
};

/// Needs at least 4 strictly ascending knots.
[[nodiscard]] CubicSpline spline_fit_not_a_knot(std::span<const double> knots, std::span<const double> values);

enum class Side { left, right };

/// sum_j coeffs[j] |x - origin|^(j/2). `side` records on which side of the
/// origin the fitted data lay.
struct SingularExpansion {
    double origin = 0.0;
    Side side = Side::right;
    std::vector<double> coeffs;

    [[nodiscard]] double operator()(double x) const;
};

/// Interpolates r+1 points (first one at the origin) in the half-power
/// basis through the substitution s = sqrt|x - origin|.
[[nodiscard]] SingularExpansion singular_fit(double origin, Side side, std::span<const double> xs,
                                             std::span<const double> ys, std::size_t r);

/// Bisection root of f in [lo, hi] down to bracket width tol. Returns
/// nullopt when f has the same strict sign at both ends.
[[nodiscard]] std::optional<double> bracketed_root(const std::function<double(double)>& f, double lo, double hi,
                                                   double tol = 1e-12);

enum class Extremum { min, max };

struct ExtremumPoint {
    double arg;
    double value;
};

/// Global extremum of p over [lo, hi]: scans p' for sign changes on 1000
/// subintervals, refines each by bisection, compares with the endpoints.
[[nodiscard]] ExtremumPoint poly_extremum_on_interval(const PolyInterpolant& p, double lo, double hi, Extremum kind);

}  // namespace svf
