#include "svf/interp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace svf {

// ---------------------------------------------------------------- polynomial

PolyInterpolant::PolyInterpolant(std::vector<double> nodes, std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
    if (nodes_.size() != values_.size()) throw DomainError("poly_fit: node/value count mismatch");
    if (nodes_.empty()) throw DomainError("poly_fit: no nodes");
    const auto [lo, hi] = std::minmax_element(nodes_.begin(), nodes_.end());
    // capacity scaling keeps the products in range for ~100 nodes
    const double scale = *hi > *lo ? 4.0 / (*hi - *lo) : 1.0;
    weights_.assign(nodes_.size(), 1.0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        for (std::size_t j = 0; j < nodes_.size(); ++j) {
            if (i == j) continue;
            const double diff = nodes_[i] - nodes_[j];
            if (diff == 0.0) throw DomainError("poly_fit: duplicate node " + std::to_string(nodes_[i]));
            weights_[i] /= diff * scale;
        }
    }
}

PolyInterpolant::PolyInterpolant(std::vector<double> nodes, std::vector<double> values, std::vector<double> weights)
    : nodes_(std::move(nodes)), values_(std::move(values)), weights_(std::move(weights)) {
    if (nodes_.size() != values_.size() || nodes_.size() != weights_.size() || nodes_.empty()) {
        throw DomainError("polynomial record: inconsistent array lengths");
    }
}

double PolyInterpolant::operator()(double x) const {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const double diff = x - nodes_[i];
        if (diff == 0.0) return values_[i];
        const double t = weights_[i] / diff;
        num += t * values_[i];
        den += t;
    }
    return num / den;
}

double PolyInterpolant::derivative(double x) const {
    if (nodes_.size() < 2) return 0.0;
    const auto [lo, hi] = std::minmax_element(nodes_.begin(), nodes_.end());
    // (p(x) - y_i) / (x - x_i) cancels badly this close to a node
    const double near = 1.5e-8 * (*hi - *lo);
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
        if (std::abs(x - nodes_[j]) > near) continue;
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (i == j) continue;
            sum += (weights_[i] / weights_[j]) * (values_[i] - values_[j]) / (nodes_[j] - nodes_[i]);
        }
        return sum;
    }
    const double px = (*this)(x);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const double diff = x - nodes_[i];
        const double t = weights_[i] / diff;
        num += t * (px - values_[i]) / diff;
        den += t;
    }
    return num / den;
}

std::vector<double> PolyInterpolant::basis(double x) const {
    std::vector<double> l(nodes_.size(), 0.0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (x == nodes_[i]) {
            l[i] = 1.0;
            return l;
        }
    }
    double den = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        l[i] = weights_[i] / (x - nodes_[i]);
        den += l[i];
    }
    for (double& li : l) li /= den;
    return l;
}

PolyInterpolant poly_fit(std::vector<double> nodes, std::vector<double> values) {
    return PolyInterpolant(std::move(nodes), std::move(values));
}

double poly_derivative_eval(const PolyInterpolant& p, double x) { return p.derivative(x); }

double lebesgue_constant(std::span<const double> nodes, std::span<const double> grid) {
    const PolyInterpolant p(std::vector<double>(nodes.begin(), nodes.end()), std::vector<double>(nodes.size(), 0.0));
    double worst = 0.0;
    for (double x : grid) {
        double sum = 0.0;
        for (double li : p.basis(x)) sum += std::abs(li);
        worst = std::max(worst, sum);
    }
    return worst;
}

// -------------------------------------------------------------------- spline

namespace {

// Solves a tridiagonal system with partial pivoting (LAPACK gtsv scheme).
// sub[i] couples row i+1 to column i, sup[i] couples row i to column i+1.
std::vector<double> solve_tridiagonal(std::vector<double> sub, std::vector<double> diag, std::vector<double> sup,
                                      std::vector<double> rhs) {
    const std::size_t n = diag.size();
    std::vector<double> sup2(n, 0.0);  // second superdiagonal filled by row swaps
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(diag[i]) >= std::abs(sub[i])) {
            if (diag[i] == 0.0) throw DomainError("spline: singular system");
            const double f = sub[i] / diag[i];
            diag[i + 1] -= f * sup[i];
            rhs[i + 1] -= f * rhs[i];
            sub[i] = 0.0;
        } else {
            const double f = diag[i] / sub[i];
            diag[i] = sub[i];
            const double tmp = diag[i + 1];
            diag[i + 1] = sup[i] - f * tmp;
            if (i + 2 < n) {
                sup2[i] = sup[i + 1];
                sup[i + 1] = -f * sup2[i];
            }
            sup[i] = tmp;
            std::swap(rhs[i], rhs[i + 1]);
            rhs[i + 1] -= f * rhs[i];
        }
    }
    if (diag[n - 1] == 0.0) throw DomainError("spline: singular system");
    std::vector<double> x(n);
    x[n - 1] = rhs[n - 1] / diag[n - 1];
    if (n >= 2) x[n - 2] = (rhs[n - 2] - sup[n - 2] * x[n - 1]) / diag[n - 2];
    for (std::size_t k = n - 2; k-- > 0;) {
        x[k] = (rhs[k] - sup[k] * x[k + 1] - sup2[k] * x[k + 2]) / diag[k];
    }
    return x;
}

}  // namespace

CubicSpline::CubicSpline(std::vector<double> knots, std::vector<Piece> pieces)
    : knots_(std::move(knots)), pieces_(std::move(pieces)) {
    if (knots_.size() < 2 || pieces_.size() + 1 != knots_.size()) {
        throw DomainError("spline record: need one piece per knot interval");
    }
}

std::size_t CubicSpline::locate(double x) const {
    auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
    std::size_t i = it == knots_.begin() ? 0 : static_cast<std::size_t>(it - knots_.begin()) - 1;
    return std::min(i, pieces_.size() - 1);
}

double CubicSpline::operator()(double x) const {
    const std::size_t i = locate(x);
    const Piece& p = pieces_[i];
    const double t = x - knots_[i];
    return p.c0 + t * (p.c1 + t * (p.c2 + t * p.c3));
}

double CubicSpline::derivative(double x, int order) const {
    const std::size_t i = locate(x);
    const Piece& p = pieces_[i];
    const double t = x - knots_[i];
    switch (order) {
        case 0: return (*this)(x);
        case 1: return p.c1 + t * (2.0 * p.c2 + 3.0 * t * p.c3);
        case 2: return 2.0 * p.c2 + 6.0 * t * p.c3;
        case 3: return 6.0 * p.c3;
        default: return 0.0;
    }
}

CubicSpline spline_fit_not_a_knot(std::span<const double> knots, std::span<const double> values) {
    const std::size_t n = knots.size();
    if (n != values.size()) throw DomainError("spline: knot/value count mismatch");
    if (n < 4) throw DomainError("spline: not-a-knot needs at least 4 knots, got " + std::to_string(n));
    std::vector<double> h(n - 1);
    std::vector<double> slope(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = knots[i + 1] - knots[i];
        if (!(h[i] > 0.0)) throw DomainError("spline: knots must be strictly ascending");
        slope[i] = (values[i + 1] - values[i]) / h[i];
    }

    // Unknowns are the first derivatives at the knots.
    std::vector<double> sub(n - 1), diag(n), sup(n - 1), rhs(n);
    const double d0 = h[0] + h[1];
    diag[0] = h[1];
    sup[0] = d0;
    rhs[0] = ((h[0] + 2.0 * d0) * h[1] * slope[0] + h[0] * h[0] * slope[1]) / d0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        sub[i - 1] = h[i];
        diag[i] = 2.0 * (h[i - 1] + h[i]);
        sup[i] = h[i - 1];
        rhs[i] = 3.0 * (h[i] * slope[i - 1] + h[i - 1] * slope[i]);
    }
    const double dn = h[n - 2] + h[n - 3];
    sub[n - 2] = dn;
    diag[n - 1] = h[n - 3];
    rhs[n - 1] = (h[n - 2] * h[n - 2] * slope[n - 3] + (2.0 * dn + h[n - 2]) * h[n - 3] * slope[n - 2]) / dn;

    const std::vector<double> s = solve_tridiagonal(std::move(sub), std::move(diag), std::move(sup), std::move(rhs));

    std::vector<CubicSpline::Piece> pieces(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double c2 = (3.0 * slope[i] - 2.0 * s[i] - s[i + 1]) / h[i];
        const double c3 = (s[i] + s[i + 1] - 2.0 * slope[i]) / (h[i] * h[i]);
        pieces[i] = {values[i], s[i], c2, c3};
    }
    return CubicSpline(std::vector<double>(knots.begin(), knots.end()), std::move(pieces));
}

// ------------------------------------------------------------------ singular

double SingularExpansion::operator()(double x) const {
    const double s = std::sqrt(std::abs(x - origin));
    double acc = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * s + coeffs[j];
    return acc;
}

SingularExpansion singular_fit(double origin, Side side, std::span<const double> xs, std::span<const double> ys,
                               std::size_t r) {
    if (xs.size() != ys.size()) throw DomainError("singular_fit: x/y count mismatch");
    if (xs.size() != r + 1) {
        throw DomainError("singular_fit: expected " + std::to_string(r + 1) + " points, got " +
                          std::to_string(xs.size()));
    }
    if (std::abs(xs[0] - origin) > 1e-14 * (1.0 + std::abs(origin))) {
        throw DomainError("singular_fit: first point must sit at the origin");
    }
    std::vector<double> s(r + 1);
    s[0] = 0.0;
    for (std::size_t i = 1; i <= r; ++i) {
        const double offset = xs[i] - origin;
        if ((side == Side::right && !(offset > 0.0)) || (side == Side::left && !(offset < 0.0))) {
            throw DomainError("singular_fit: data point on the wrong side of the origin");
        }
        s[i] = std::sqrt(std::abs(offset));
    }

    // Newton divided differences in s.
    std::vector<double> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level <= r; ++level) {
        for (std::size_t i = r; i >= level; --i) {
            const double ds = s[i] - s[i - level];
            if (ds == 0.0) throw DomainError("singular_fit: coincident abscissas in s");
            dd[i] = (dd[i] - dd[i - 1]) / ds;
        }
    }
    // Expand the Newton form into monomial coefficients of s.
    std::vector<double> coeffs(r + 1, 0.0);
    coeffs[0] = dd[r];
    std::size_t deg = 0;
    for (std::size_t k = r; k-- > 0;) {
        // coeffs <- coeffs * (s - s[k]) + dd[k]
        ++deg;
        for (std::size_t j = deg; j > 0; --j) coeffs[j] = coeffs[j - 1] - s[k] * coeffs[j];
        coeffs[0] = -s[k] * coeffs[0] + dd[k];
    }
    return {origin, side, std::move(coeffs)};
}

// ------------------------------------------------------------ root / extrema

std::optional<double> bracketed_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (lo > hi) std::swap(lo, hi);
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) return std::nullopt;
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

ExtremumPoint poly_extremum_on_interval(const PolyInterpolant& p, double lo, double hi, Extremum kind) {
    if (!(lo < hi)) throw DomainError("poly_extremum_on_interval: empty interval");
    constexpr int kScan = 1000;
    const auto better = [kind](double candidate, double incumbent) {
        return kind == Extremum::min ? candidate < incumbent : candidate > incumbent;
    };
    ExtremumPoint best{lo, p(lo)};
    if (better(p(hi), best.value)) best = {hi, p(hi)};

    const auto dp = [&p](double y) { return p.derivative(y); };
    double y0 = lo;
    double d0 = dp(y0);
    for (int k = 1; k <= kScan; ++k) {
        const double y1 = lo + (hi - lo) * static_cast<double>(k) / kScan;
        const double d1 = dp(y1);
        if ((d0 <= 0.0 && d1 >= 0.0) || (d0 >= 0.0 && d1 <= 0.0)) {
            if (auto root = bracketed_root(dp, y0, y1, 1e-15 * (1.0 + std::abs(y1)))) {
                const double v = p(*root);
                if (better(v, best.value)) best = {*root, v};
            }
        }
        y0 = y1;
        d0 = d1;
    }
    return best;
}

}  // namespace svf
