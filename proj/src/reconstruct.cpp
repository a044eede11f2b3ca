#include "svf/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace svf {

double BoundaryCurve::operator()(double x) const {
    const double t = std::clamp(x, lo, hi);
    switch (kind) {
        case CurveKind::polynomial: return poly(t);
        case CurveKind::spline: return spline(t);
        case CurveKind::spline_plus_singular: return spline(t) + p(t) + q(t);
    }
    return 0.0;
}

BoundaryCurve BoundaryCurve::polynomial(PolyInterpolant poly, double lo, double hi) {
    BoundaryCurve c;
    c.kind = CurveKind::polynomial;
    c.poly = std::move(poly);
    c.lo = lo;
    c.hi = hi;
    return c;
}

BoundaryCurve BoundaryCurve::cubic_spline(CubicSpline spline, double lo, double hi) {
    BoundaryCurve c;
    c.kind = CurveKind::spline;
    c.spline = std::move(spline);
    c.lo = lo;
    c.hi = hi;
    return c;
}

BoundaryCurve BoundaryCurve::singular(CubicSpline s, SingularExpansion p, SingularExpansion q, double lo, double hi) {
    BoundaryCurve c;
    c.kind = CurveKind::spline_plus_singular;
    c.spline = std::move(s);
    c.p = std::move(p);
    c.q = std::move(q);
    c.lo = lo;
    c.hi = hi;
    return c;
}

namespace {

constexpr double kExtensionFactor = 2.0;

double sample_delta(const SampleSet& samples) {
    const std::size_t n = samples.size() - 1;
    if (samples.partition.kind == PartitionKind::uniform && n > 0) return (samples.b - samples.a) / static_cast<double>(n);
    return samples.partition.norm();
}

double spacing_left(const SampleSet& samples, std::size_t i) {
    if (i > 0) return samples.node(i) - samples.node(i - 1);
    return samples.size() > 1 ? samples.node(1) - samples.node(0) : samples.b - samples.a;
}

double spacing_right(const SampleSet& samples, std::size_t i) {
    if (i + 1 < samples.size()) return samples.node(i + 1) - samples.node(i);
    return i > 0 ? samples.node(i) - samples.node(i - 1) : samples.b - samples.a;
}

std::vector<double> outer(const SampleSet& samples, bool upper) {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const CompactSet& v : samples.values) out.push_back(upper ? v.max() : v.min());
    return out;
}

Approximant base(const SampleSet& samples, Method method) {
    Approximant A;
    A.a = samples.a;
    A.b = samples.b;
    A.method = method;
    A.n = samples.size() - 1;
    A.delta = sample_delta(samples);
    return A;
}

void spline_outer(Approximant& A, const SampleSet& samples) {
    if (samples.size() < 4) throw ReconstructionError("spline reconstruction needs at least 4 nodes");
    const auto& xs = samples.partition.nodes;
    A.ell = BoundaryCurve::cubic_spline(spline_fit_not_a_knot(xs, outer(samples, false)), samples.a, samples.b);
    A.u = BoundaryCurve::cubic_spline(spline_fit_not_a_knot(xs, outer(samples, true)), samples.a, samples.b);
}

Point2 cap_left(const SampleSet& samples, const BoundaryChainPair& bc) {
    const std::size_t n = bc.lower.first;
    const double x = n > 0 ? samples.node(n - 1) : samples.a;
    return {x, 0.5 * (bc.lower.values.front() + bc.upper.values.front())};
}

Point2 cap_right(const SampleSet& samples, const BoundaryChainPair& bc) {
    const std::size_t m = bc.lower.last;
    const double x = m + 1 < samples.size() ? samples.node(m + 1) : samples.b;
    return {x, 0.5 * (bc.lower.values.back() + bc.upper.values.back())};
}

// Knots (c, chain nodes, d) with the caps as end values; spline when
// there are at least 4 knots, polynomial otherwise.
BoundaryCurve capped_curve(const BoundaryChain& chain, Point2 left, Point2 right) {
    std::vector<double> xs{left.first};
    std::vector<double> ys{left.second};
    xs.insert(xs.end(), chain.xs.begin(), chain.xs.end());
    ys.insert(ys.end(), chain.values.begin(), chain.values.end());
    xs.push_back(right.first);
    ys.push_back(right.second);
    if (xs.size() >= 4) return BoundaryCurve::cubic_spline(spline_fit_not_a_knot(xs, ys), left.first, right.first);
    return BoundaryCurve::polynomial(poly_fit(xs, ys), left.first, right.first);
}

std::string hole_tag(std::size_t h, const BoundaryChainPair& bc) {
    return "hole " + std::to_string(h) + " (nodes " + std::to_string(bc.lower.first) + ".." +
           std::to_string(bc.lower.last) + ")";
}

}  // namespace

Approximant reconstruct_metric_poly(const SampleSet& samples) {
    samples.check();
    Approximant A = base(samples, Method::metric_poly);
    const ChainForest forest = build_chain_forest(samples);
    ClassifiedChains cc = classify_chains(enumerate_chains(forest), samples);
    A.warnings = cc.warnings;

    const auto& xs = samples.partition.nodes;
    auto fit = [&](const Chain& c, double lo, double hi) {
        return BoundaryCurve::polynomial(poly_fit(xs, c.values), lo, hi);
    };
    A.ell = fit(cc.find(ChainLabel::lower), samples.a, samples.b);
    A.u = fit(cc.find(ChainLabel::upper), samples.a, samples.b);

    const auto pairs = boundary_chain_pairs(samples);
    for (std::size_t h = 0; h < pairs.size(); ++h) {
        ApproxHole hole;
        hole.pct_left = cap_left(samples, pairs[h]);
        hole.pct_right = cap_right(samples, pairs[h]);
        hole.c = hole.pct_left.first;
        hole.d = hole.pct_right.first;
        hole.c_ext = hole.c;
        hole.d_ext = hole.d;
        // both chains pass through the cap values at x_{n-1} and x_{m+1}
        const std::size_t n = pairs[h].lower.first;
        const std::size_t m = pairs[h].lower.last;
        auto capped = [&](Chain c) {
            if (n > 0) c.values[n - 1] = hole.pct_left.second;
            if (m + 1 < c.values.size()) c.values[m + 1] = hole.pct_right.second;
            return c;
        };
        hole.lower = fit(capped(cc.find(ChainLabel::hole_lower, h)), hole.c, hole.d);
        hole.upper = fit(capped(cc.find(ChainLabel::hole_upper, h)), hole.c, hole.d);
        A.holes.push_back(std::move(hole));
    }
    return A;
}

Point2 refine_pct_c4(const BoundaryChainPair& bc, double delta, Side side) {
    const std::size_t len = bc.lower.values.size();
    if (len < 4) throw ReconstructionError("PCT refinement needs at least 4 boundary values");
    const std::size_t from = side == Side::left ? 0 : len - 4;
    auto slice = [from](const std::vector<double>& v) {
        return std::vector<double>(v.begin() + static_cast<std::ptrdiff_t>(from),
                                   v.begin() + static_cast<std::ptrdiff_t>(from + 4));
    };
    const PolyInterpolant g = poly_fit(slice(bc.lower.xs), slice(bc.lower.values));
    const PolyInterpolant h = poly_fit(slice(bc.upper.xs), slice(bc.upper.values));
    auto psi = [&](double x) { return h(x) - g(x); };

    const double edge = side == Side::left ? bc.lower.xs.front() : bc.lower.xs.back();
    const double far = side == Side::left ? edge - delta : edge + delta;
    const auto root = bracketed_root(psi, std::min(edge, far), std::max(edge, far));
    if (root) return {*root, g(*root)};
    return {far, 0.5 * (g(far) + h(far))};
}

Approximant reconstruct_c4(const SampleSet& samples) {
    samples.check();
    Approximant A = base(samples, Method::c4);
    spline_outer(A, samples);
    const auto pairs = boundary_chain_pairs(samples);
    for (std::size_t h = 0; h < pairs.size(); ++h) {
        const BoundaryChainPair& bc = pairs[h];
        const std::size_t n = bc.lower.first;
        const std::size_t m = bc.lower.last;
        const double dl = spacing_left(samples, n);
        const double dr = spacing_right(samples, m);
        ApproxHole hole;
        if (bc.lower.values.size() >= 4) {
            hole.pct_left = refine_pct_c4(bc, dl, Side::left);
            hole.pct_right = refine_pct_c4(bc, dr, Side::right);
            // keep the cap strictly outside the chain nodes
            hole.pct_left.first = std::min(hole.pct_left.first, bc.lower.xs.front() - 1e-9 * dl);
            hole.pct_right.first = std::max(hole.pct_right.first, bc.lower.xs.back() + 1e-9 * dr);
        } else {
            hole.flagged = true;
            hole.pct_left = cap_left(samples, bc);
            hole.pct_right = cap_right(samples, bc);
            if (n == 0) hole.pct_left.first = samples.node(0) - dl;
            if (m + 1 == samples.size()) hole.pct_right.first = samples.node(m) + dr;
            A.warnings.push_back(hole_tag(h, bc) + ": fewer than 4 nodes, using midpoint caps");
        }
        hole.c = hole.pct_left.first;
        hole.d = hole.pct_right.first;
        hole.c_ext = hole.c - kExtensionFactor * dl;
        hole.d_ext = hole.d + kExtensionFactor * dr;
        hole.lower = capped_curve(bc.lower, hole.pct_left, hole.pct_right);
        hole.upper = capped_curve(bc.upper, hole.pct_left, hole.pct_right);
        A.holes.push_back(std::move(hole));
    }
    return A;
}

Point2 approx_pct_holder(const BoundaryChainPair& bc, std::size_t k, Side side) {
    const std::size_t len = bc.lower.values.size();
    if (k < 1 || len < k) {
        throw ReconstructionError("PCT approximation needs " + std::to_string(k) + " boundary values per side, got " +
                                  std::to_string(len));
    }
    if (len < 2) throw ReconstructionError("PCT approximation needs at least 2 nodes in the hole");
    const std::size_t from = side == Side::left ? 0 : len - k;

    auto strictly_monotone = [&](const std::vector<double>& v) {
        bool up = true;
        bool down = true;
        for (std::size_t i = from; i + 1 < from + k; ++i) {
            up = up && v[i + 1] > v[i];
            down = down && v[i + 1] < v[i];
        }
        return up || down;
    };
    if (!strictly_monotone(bc.lower.values) || !strictly_monotone(bc.upper.values)) {
        throw ReconstructionError("non-monotone boundary values near the closing point");
    }

    std::vector<double> ys;
    std::vector<double> xs;
    for (std::size_t i = from; i < from + k; ++i) {
        ys.push_back(bc.lower.values[i]);
        xs.push_back(bc.lower.xs[i]);
        ys.push_back(bc.upper.values[i]);
        xs.push_back(bc.upper.xs[i]);
    }
    PolyInterpolant p;
    try {
        p = poly_fit(ys, xs);
    } catch (const DomainError& e) {
        throw ReconstructionError(std::string("reflected data not invertible: ") + e.what());
    }

    const std::size_t inner = side == Side::left ? from + k - 1 : from;
    const double lo = bc.lower.values[inner];
    const double hi = bc.upper.values[inner];
    const ExtremumPoint e = poly_extremum_on_interval(p, lo, hi, side == Side::left ? Extremum::min : Extremum::max);

    // keep p_x on the open side of the outermost chain node, no further
    // than two spacings away
    const double edge = side == Side::left ? bc.lower.xs.front() : bc.lower.xs.back();
    const double step = len > 1 ? std::abs(bc.lower.xs[1] - bc.lower.xs[0]) : 1.0;
    double px = e.value;
    if (side == Side::left) {
        px = std::clamp(px, edge - 2.0 * step, edge - 1e-3 * step);
    } else {
        px = std::clamp(px, edge + 1e-3 * step, edge + 2.0 * step);
    }
    return {px, e.arg};
}

ApproxHole holder_hole(const BoundaryChainPair& bc, Point2 left_pct, Point2 right_pct, std::size_t r) {
    const std::size_t len = bc.lower.values.size();
    if (r < 1 || r > len) {
        throw ReconstructionError("half-power fit needs r in 1.." + std::to_string(len) + ", got " + std::to_string(r));
    }
    auto one = [&](const BoundaryChain& chain) {
        std::vector<double> px{left_pct.first};
        std::vector<double> py{left_pct.second};
        std::vector<double> qx{right_pct.first};
        std::vector<double> qy{right_pct.second};
        for (std::size_t i = 0; i < r; ++i) {
            px.push_back(chain.xs[i]);
            py.push_back(chain.values[i]);
            qx.push_back(chain.xs[len - 1 - i]);
            qy.push_back(chain.values[len - 1 - i]);
        }
        SingularExpansion P;
        SingularExpansion Q;
        try {
            P = singular_fit(left_pct.first, Side::right, px, py, r);
            Q = singular_fit(right_pct.first, Side::left, qx, qy, r);
        } catch (const DomainError& e) {
            throw ReconstructionError(std::string("half-power fit failed: ") + e.what());
        }
        auto R = [&](double x) { return P(x) + Q(x); };
        std::vector<double> knots{left_pct.first};
        std::vector<double> data{left_pct.second - R(left_pct.first)};
        for (std::size_t i = 0; i < len; ++i) {
            knots.push_back(chain.xs[i]);
            data.push_back(chain.values[i] - R(chain.xs[i]));
        }
        knots.push_back(right_pct.first);
        data.push_back(right_pct.second - R(right_pct.first));
        return BoundaryCurve::singular(spline_fit_not_a_knot(knots, data), std::move(P), std::move(Q), left_pct.first,
                                       right_pct.first);
    };
    ApproxHole hole;
    hole.pct_left = left_pct;
    hole.pct_right = right_pct;
    hole.c = left_pct.first;
    hole.d = right_pct.first;
    hole.c_ext = hole.c;
    hole.d_ext = hole.d;
    hole.lower = one(bc.lower);
    hole.upper = one(bc.upper);
    return hole;
}

Approximant reconstruct_holder(const SampleSet& samples, std::size_t k, std::size_t r) {
    samples.check();
    Approximant A = base(samples, Method::holder);
    A.k = k;
    A.r = r;
    spline_outer(A, samples);
    const auto pairs = boundary_chain_pairs(samples);

    std::ostringstream problems;
    for (std::size_t h = 0; h < pairs.size(); ++h) {
        const BoundaryChainPair& bc = pairs[h];
        const std::size_t width = bc.lower.last - bc.lower.first;
        if (width <= 2 * k) {
            problems << hole_tag(h, bc) << ": m - n = " << width << " must exceed 2k = " << 2 * k << "\n";
        }
    }
    if (!problems.str().empty()) throw ReconstructionError(problems.str());

    for (std::size_t h = 0; h < pairs.size(); ++h) {
        const BoundaryChainPair& bc = pairs[h];
        try {
            const Point2 left = approx_pct_holder(bc, k, Side::left);
            const Point2 right = approx_pct_holder(bc, k, Side::right);
            ApproxHole hole = holder_hole(bc, left, right, r);
            hole.c_ext = hole.c - kExtensionFactor * spacing_left(samples, bc.lower.first);
            hole.d_ext = hole.d + kExtensionFactor * spacing_right(samples, bc.lower.last);
            A.holes.push_back(std::move(hole));
        } catch (const ReconstructionError& e) {
            throw ReconstructionError(hole_tag(h, bc) + ": " + e.what());
        }
    }
    return A;
}

Approximant reconstruct(const SampleSet& samples, const MethodParams& params) {
    switch (params.method) {
        case Method::metric_poly: return reconstruct_metric_poly(samples);
        case Method::c4: return reconstruct_c4(samples);
        case Method::holder: return reconstruct_holder(samples, params.k, params.r);
    }
    throw ReconstructionError("unknown method");
}

std::vector<std::pair<Point2, Point2>> approximate_pcts(const SampleSet& samples, const MethodParams& params) {
    samples.check();
    std::vector<std::pair<Point2, Point2>> out;
    for (const BoundaryChainPair& bc : boundary_chain_pairs(samples)) {
        const std::size_t n = bc.lower.first;
        const std::size_t m = bc.lower.last;
        switch (params.method) {
            case Method::metric_poly: out.emplace_back(cap_left(samples, bc), cap_right(samples, bc)); break;
            case Method::c4:
                if (bc.lower.values.size() >= 4) {
                    out.emplace_back(refine_pct_c4(bc, spacing_left(samples, n), Side::left),
                                     refine_pct_c4(bc, spacing_right(samples, m), Side::right));
                } else {
                    out.emplace_back(cap_left(samples, bc), cap_right(samples, bc));
                }
                break;
            case Method::holder:
                out.emplace_back(approx_pct_holder(bc, params.k, Side::left),
                                 approx_pct_holder(bc, params.k, Side::right));
                break;
        }
    }
    return out;
}

CompactSet evaluate_approximant(const Approximant& approx, double x) {
    const double tol = 1e-12 * (1.0 + std::abs(approx.a) + std::abs(approx.b));
    if (!(x >= approx.a - tol && x <= approx.b + tol)) {
        throw DomainError("x = " + std::to_string(x) + " outside [a, b]");
    }
    const double lo = approx.ell(x);
    const double hi = approx.u(x);

    std::vector<Interval> gaps;
    for (const ApproxHole& hole : approx.holes) {
        if (x < hole.c_ext || x > hole.d_ext) continue;
        const double g = hole.lower(x);
        const double h = hole.upper(x);
        if (g < h) gaps.push_back({g, h});  // crossed or touching curves leave no gap
    }
    std::sort(gaps.begin(), gaps.end(), [](const Interval& p, const Interval& q) { return p.lo < q.lo; });

    std::vector<Interval> pieces;
    double cursor = std::min(lo, hi);
    const double top = std::max(lo, hi);
    for (const Interval& gap : gaps) {
        if (gap.hi <= cursor || gap.lo >= top) continue;
        if (gap.lo >= cursor) pieces.push_back({cursor, gap.lo});
        cursor = std::max(cursor, gap.hi);
    }
    if (cursor <= top) pieces.push_back({cursor, top});
    if (pieces.empty()) pieces.push_back({top, top});
    return CompactSet(std::move(pieces));
}

std::string to_string(Method method) {
    switch (method) {
        case Method::metric_poly: return "metric-poly";
        case Method::c4: return "c4";
        case Method::holder: return "holder";
    }
    return "?";
}

Method parse_method(const std::string& name) {
    if (name == "metric-poly") return Method::metric_poly;
    if (name == "c4") return Method::c4;
    if (name == "holder") return Method::holder;
    throw DomainError("unknown method '" + name + "' (expected metric-poly, c4 or holder)");
}

}  // namespace svf
