#include "svf/svf_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace svf {

double HoleSpec::lower(double x) const { return std::min(g(x), h(x)); }
double HoleSpec::upper(double x) const { return std::max(g(x), h(x)); }

double Partition::norm() const {
    double widest = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) widest = std::max(widest, nodes[i + 1] - nodes[i]);
    return widest;
}

void SampleSet::check() const {
    if (partition.nodes.size() != values.size()) throw DomainError("sample set: node/value count mismatch");
    if (values.empty()) throw DomainError("sample set: no samples");
    for (std::size_t i = 0; i + 1 < partition.nodes.size(); ++i) {
        if (!(partition.nodes[i] < partition.nodes[i + 1])) {
            throw DomainError("sample set: nodes are not strictly ascending");
        }
    }
    for (const auto& v : values) {
        if (v.empty()) throw DomainError("sample set: empty sample value");
    }
}

std::vector<std::string> SvfModel::validate(std::size_t grid) const {
    std::vector<std::string> warnings;
    if (!(a < b)) throw ModelError(name + ": empty domain");
    double max_ell = -INFINITY;
    double min_u = INFINITY;
    for (std::size_t j = 0; j < grid; ++j) {
        const double x = a + (b - a) * static_cast<double>(j) / static_cast<double>(grid - 1);
        if (!(ell(x) < u(x))) throw ModelError(name + ": lower boundary meets upper boundary");
        max_ell = std::max(max_ell, ell(x));
        min_u = std::min(min_u, u(x));
    }
    for (std::size_t i = 0; i < holes.size(); ++i) {
        const HoleSpec& hole = holes[i];
        const std::string tag = name + ": hole " + std::to_string(i);
        if (!(a < hole.c && hole.c < hole.d && hole.d < b)) throw ModelError(tag + ": [c, d] not inside (a, b)");
        if (std::abs(hole.g(hole.c) - hole.h(hole.c)) > 1e-12 || std::abs(hole.g(hole.d) - hole.h(hole.d)) > 1e-12) {
            throw ModelError(tag + ": boundaries do not meet at c and d");
        }
        bool swapped = false;
        for (std::size_t j = 1; j + 1 < grid; ++j) {
            const double x = hole.c + (hole.d - hole.c) * static_cast<double>(j) / static_cast<double>(grid - 1);
            const double gx = hole.g(x);
            const double hx = hole.h(x);
            if (gx == hx) throw ModelError(tag + ": boundaries touch inside (c, d)");
            swapped = swapped || gx > hx;
            if (!(ell(x) < std::min(gx, hx) && std::max(gx, hx) < u(x))) {
                throw ModelError(tag + ": hole touches the outer boundary");
            }
        }
        if (swapped) warnings.push_back(tag + ": g above h, boundary roles swapped at evaluation");
        const double yc = hole.g(hole.c);
        const double yd = hole.g(hole.d);
        if (!(max_ell < yc && yc < min_u && max_ell < yd && yd < min_u)) {
            warnings.push_back(tag + ": PCT heights outside (max ell, min u)");
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (!(holes[k].d < hole.c || hole.d < holes[k].c)) {
                // Overlapping x-ranges are allowed as long as the holes are
                // vertically separated; check it on the common range.
                const double lo = std::max(holes[k].c, hole.c);
                const double hi = std::min(holes[k].d, hole.d);
                for (std::size_t j = 0; j < grid; ++j) {
                    const double x = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(grid - 1);
                    const bool disjoint = holes[k].upper(x) < hole.lower(x) || hole.upper(x) < holes[k].lower(x);
                    if (!disjoint) throw ModelError(tag + ": intersects hole " + std::to_string(k));
                }
            }
        }
    }
    return warnings;
}

CompactSet evaluate(const SvfModel& model, double x) {
    if (!(x >= model.a && x <= model.b)) {
        throw DomainError(model.name + ": x = " + std::to_string(x) + " outside [a, b]");
    }
    struct Gap {
        double lo;
        double hi;
    };
    std::vector<Gap> gaps;
    for (const HoleSpec& hole : model.holes) {
        if (x > hole.c && x < hole.d) gaps.push_back({hole.lower(x), hole.upper(x)});
    }
    std::sort(gaps.begin(), gaps.end(), [](const Gap& p, const Gap& q) { return p.lo < q.lo; });

    std::vector<Interval> pieces;
    double lo = model.ell(x);
    for (const Gap& gap : gaps) {
        pieces.push_back({lo, gap.lo});
        lo = gap.hi;
    }
    pieces.push_back({lo, model.u(x)});
    for (Interval& piece : pieces) {
        if (piece.lo > piece.hi + kMergeTolerance) {
            throw ModelError(model.name + ": inconsistent boundaries at x = " + std::to_string(x));
        }
        piece.hi = std::max(piece.hi, piece.lo);
    }
    return CompactSet(std::move(pieces));
}

SampleSet sample(const SvfModel& model, const Partition& partition) {
    SampleSet out;
    out.a = model.a;
    out.b = model.b;
    out.partition = partition;
    out.values.reserve(partition.size());
    for (double x : partition.nodes) out.values.push_back(evaluate(model, x));
    return out;
}

Partition chebyshev_partition(std::size_t n, double a, double b) {
    Partition p;
    p.kind = PartitionKind::chebyshev;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double count = static_cast<double>(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        // ascending: i = n maps to the root nearest a
        const double theta = (2.0 * static_cast<double>(n - i) + 1.0) * std::numbers::pi / (2.0 * count);
        p.nodes.push_back(mid + half * std::cos(theta));
    }
    return p;
}

Partition uniform_partition(std::size_t n, double a, double b) {
    if (n == 0) throw DomainError("uniform partition needs N >= 1");
    Partition p;
    p.kind = PartitionKind::uniform;
    for (std::size_t i = 0; i <= n; ++i) {
        p.nodes.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(n));
    }
    p.nodes.back() = b;
    return p;
}

namespace {

BoundaryFn fn(std::function<double(double)> f, double lo, double hi) { return {std::move(f), lo, hi}; }

// Root of cos(2x)/2 + cos(3x)/3 in [0.6, 0.7] by bisection.
double fb_closing_point() {
    auto f = [](double x) { return std::cos(2.0 * x) / 2.0 + std::cos(3.0 * x) / 3.0; };
    double lo = 0.6;
    double hi = 0.7;
    const bool lo_positive = f(lo) > 0.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((f(mid) > 0.0) == lo_positive) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

SvfModel make_fa() {
    SvfModel m;
    m.name = "FA";
    m.a = -1.0;
    m.b = 1.0;
    m.ell = fn([](double x) { return -std::tanh(-x) - 1.0; }, -1.0, 1.0);
    m.u = fn([](double x) { return std::tanh(-x) + 1.0; }, -1.0, 1.0);

    // Holes 1 and 2 open where cosh(2x + 1) < 3/2, hole 3 where cosh(2x - 1) < 5/4.
    const double w12 = std::acosh(1.5);
    const double c12 = (-1.0 - w12) / 2.0;
    const double d12 = (-1.0 + w12) / 2.0;
    const double w3 = std::acosh(1.25);
    const double c3 = (1.0 - w3) / 2.0;
    const double d3 = (1.0 + w3) / 2.0;

    // g and h are listed as printed; at evaluation the smaller value is the
    // lower boundary.
    m.holes.push_back({c12, d12,
                       fn([](double x) { return 1.0 / std::cosh(2.0 * x + 1.0) - 4.0 / 3.0; }, c12, d12),
                       fn([](double x) { return -1.0 / std::cosh(2.0 * x + 1.0); }, c12, d12)});
    m.holes.push_back({c12, d12,
                       fn([](double x) { return 1.0 / std::cosh(2.0 * x + 1.0); }, c12, d12),
                       fn([](double x) { return -1.0 / std::cosh(2.0 * x + 1.0) + 4.0 / 3.0; }, c12, d12)});
    m.holes.push_back({c3, d3,
                       fn([](double x) { return 1.0 / std::cosh(2.0 * x - 1.0) - 0.8; }, c3, d3),
                       fn([](double x) { return -1.0 / std::cosh(2.0 * x - 1.0) + 0.8; }, c3, d3)});
    return m;
}

SvfModel make_fb() {
    SvfModel m;
    m.name = "FB";
    m.a = -1.0;
    m.b = 1.0;
    m.ell = fn([](double x) { return -std::exp(x); }, -1.0, 1.0);
    m.u = fn([](double x) { return std::exp(x); }, -1.0, 1.0);
    const double xa = fb_closing_point();
    m.holes.push_back({-xa, xa, fn([](double x) { return -std::cos(3.0 * x) / 3.0; }, -xa, xa),
                       fn([](double x) { return std::cos(2.0 * x) / 2.0; }, -xa, xa)});
    return m;
}

SvfModel make_fc() {
    SvfModel m;
    m.name = "FC";
    m.a = -1.0;
    m.b = 1.0;
    m.ell = fn([](double) { return -1.5; }, -1.0, 1.0);
    m.u = fn([](double) { return 1.5; }, -1.0, 1.0);
    auto radius = [](double x) { return std::sqrt(std::max(0.0, 1.0 - 4.0 * x * x)); };
    m.holes.push_back({-0.5, 0.5, fn([radius](double x) { return -radius(x); }, -0.5, 0.5),
                       fn([radius](double x) { return radius(x); }, -0.5, 0.5)});
    return m;
}

}  // namespace

SvfModel builtin(const std::string& name) {
    if (name == "FA") return make_fa();
    if (name == "FB") return make_fb();
    if (name == "FC") return make_fc();
    throw DomainError("unknown model '" + name + "' (expected FA, FB or FC)");
}

}  // namespace svf
