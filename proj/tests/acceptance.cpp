// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "svf/bench.hpp"
#include "svf/chains.hpp"
#include "svf/interp.hpp"
#include "svf/reconstruct.hpp"

using namespace svf;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi, std::size_t step = 1) {
    std::vector<std::size_t> out;
    for (std::size_t n = lo; n <= hi; n += step) out.push_back(n);
    return out;
}

double node_error(const SampleSet& s, const Approximant& A) {
    double worst = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        worst = std::max(worst, hausdorff(s.values[i], evaluate_approximant(A, s.node(i))));
    }
    return worst;
}

// Least-squares slope of a column over the records, skipping the two
// smallest N and failed entries.
double window_slope(const ErrorReport& r, double ErrorRecord::*field) {
    std::vector<double> d;
    std::vector<double> e;
    for (std::size_t i = 2; i < r.records.size(); ++i) {
        const double v = r.records[i].*field;
        if (std::isnan(v) || !(v > 0.0)) continue;
        d.push_back(r.records[i].delta);
        e.push_back(v);
    }
    return loglog_slope(d, e);
}

std::string failures(const ErrorReport& r) {
    std::string out;
    for (const auto& rec : r.records) {
        if (!rec.failure.empty()) out += " N=" + std::to_string(rec.n);
    }
    return out;
}

Outcome interpolation() {
    double fa = 0.0;
    double fb = 0.0;
    double fc = 0.0;
    const SvfModel FA = builtin("FA");
    const SvfModel FB = builtin("FB");
    const SvfModel FC = builtin("FC");
    for (std::size_t n : {10u, 20u, 30u}) {
        const SampleSet s = sample(FA, chebyshev_partition(n, -1, 1));
        fa = std::max(fa, node_error(s, reconstruct_metric_poly(s)));
    }
    for (std::size_t n : {10u, 20u, 30u, 40u, 50u}) {
        const SampleSet s = sample(FB, uniform_partition(n, -1, 1));
        fb = std::max(fb, node_error(s, reconstruct_c4(s)));
    }
    for (std::size_t n : {20u, 40u, 80u}) {
        const SampleSet s = sample(FC, uniform_partition(n, -1, 1));
        fc = std::max(fc, node_error(s, reconstruct_holder(s, 3, 4)));
    }
    const bool pass = fa <= 1e-9 && fb <= 1e-9 && fc <= 1e-9;
    return {pass, fmt("node d_H max: FA metric-poly %.2e, FB c4 %.2e, FC holder %.2e (limit 1e-9)", fa, fb, fc)};
}

Outcome metric_poly_rate() {
    const ErrorReport r = sweep(builtin("FA"), {Method::metric_poly, 3, 4}, range(10, 80, 10));
    double lo = INFINITY;
    double hi = 0.0;
    for (const auto& rec : r.records) {
        if (rec.n < 20) continue;
        if (!rec.failure.empty()) return {false, "N=" + std::to_string(rec.n) + " failed: " + rec.failure};
        lo = std::min(lo, rec.ratio);
        hi = std::max(hi, rec.ratio);
    }
    return {hi / lo <= 4.0, fmt("FA G = err/(log N/N) over N=20..80: min %.4f max %.4f, max/min %.3f (limit 4)", lo, hi,
                                hi / lo)};
}

const ErrorReport& fb_sweep() {
    static const ErrorReport r = sweep(builtin("FB"), {Method::c4, 3, 4}, range(10, 50));
    return r;
}

Outcome c4_rate() {
    const ErrorReport& r = fb_sweep();
    if (!failures(r).empty()) return {false, "failed at" + failures(r)};
    double lo = INFINITY;
    double hi = 0.0;
    for (const auto& rec : r.records) {
        if (rec.n < 14) continue;
        lo = std::min(lo, rec.ratio);
        hi = std::max(hi, rec.ratio);
    }
    const double slope = window_slope(r, &ErrorRecord::max_error);
    const bool pass = hi / lo <= 4.0 && slope >= 3.5;
    return {pass, fmt("FB err/D^4 over N=14..50: min %.4f max %.4f, max/min %.2f (limit 4); slope %.3f (limit 3.5)", lo,
                      hi, hi / lo, slope)};
}

Outcome c4_pct_rate() {
    const ErrorReport& r = fb_sweep();
    std::vector<double> scaled;
    for (const auto& rec : r.records) {
        if (rec.n >= 14) scaled.push_back(rec.pct_error_left / std::pow(rec.delta, 4));
    }
    const std::size_t half = scaled.size() / 2;
    const double early = *std::max_element(scaled.begin(), scaled.begin() + static_cast<std::ptrdiff_t>(half));
    const double late = *std::max_element(scaled.begin() + static_cast<std::ptrdiff_t>(half), scaled.end());
    const double slope = window_slope(r, &ErrorRecord::pct_error_left);
    const bool pass = late <= early && slope >= 3.5;
    return {pass, fmt("FB left PCT E/D^4 max: first half %.3f, second half %.3f (no growth); slope %.3f (limit 3.5)",
                      early, late, slope)};
}

Outcome holder_pct_rate() {
    const SvfModel FC = builtin("FC");
    std::vector<double> slopes;
    std::string detail = "FC PCT slopes:";
    bool pass = true;
    for (std::size_t k : {2u, 3u, 4u}) {
        const ErrorReport r = pct_sweep(FC, {Method::holder, k, 4}, range(20, 80));
        if (!failures(r).empty()) return {false, "k=" + std::to_string(k) + " failed at" + failures(r)};
        const double s = window_slope(r, &ErrorRecord::pct_error_left);
        detail += fmt(" k=%zu %.3f (limit %zu)", k, s, k - 1);
        pass = pass && s >= static_cast<double>(k - 1);
        if (!slopes.empty()) pass = pass && s > slopes.back();
        slopes.push_back(s);
    }
    return {pass, detail + ", strictly increasing in k"};
}

Outcome holder_rate() {
    const SvfModel FC = builtin("FC");
    const ErrorReport r3 = sweep(FC, {Method::holder, 3, 4}, range(30, 80));
    const ErrorReport r5 = sweep(FC, {Method::holder, 5, 4}, range(30, 80));
    if (!failures(r3).empty()) return {false, "k=3 failed at" + failures(r3)};
    if (!failures(r5).empty()) return {false, "k=5 failed at" + failures(r5)};
    const double s3 = window_slope(r3, &ErrorRecord::max_error);
    const double s5 = window_slope(r5, &ErrorRecord::max_error);
    return {s3 >= 1.1 && s5 >= 1.8, fmt("FC r=4 max-error slope: k=3 %.3f (limit 1.1), k=5 %.3f (limit 1.8)", s3, s5)};
}

Outcome hausdorff_oracle() {
    std::mt19937_64 rng(20240601);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const CompactSet a = oracle::random_set(rng, 5);
        const CompactSet b = oracle::random_set(rng, 5);
        worst = std::max(worst, std::abs(hausdorff(a, b) - oracle::hausdorff_grid(a, b, 1e-4)));
    }
    return {worst <= 2e-4, fmt("1000 pairs, max |exact - grid| = %.2e (limit 2e-4)", worst)};
}

Outcome union_lemma() {
    std::mt19937_64 rng(77);
    double worst = -INFINITY;
    for (int trial = 0; trial < 1000; ++trial) {
        const CompactSet a1 = oracle::random_set(rng, 3);
        const CompactSet a2 = oracle::random_set(rng, 3);
        const CompactSet b1 = oracle::random_set(rng, 3);
        const CompactSet b2 = oracle::random_set(rng, 3);
        const double excess =
            hausdorff(a1.unite(a2), b1.unite(b2)) - std::max(hausdorff(a1, b1), hausdorff(a2, b2));
        worst = std::max(worst, excess);
    }
    return {worst <= 1e-12, fmt("1000 quadruples, max excess %.2e (limit 1e-12)", worst)};
}

Outcome chain_enumeration() {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> depth_dist(2, 4);
    std::uniform_int_distribution<int> size_dist(1, 6);
    std::uniform_int_distribution<int> lattice(0, 16);
    std::uniform_real_distribution<double> real(0.0, 4.0);
    int mismatches = 0;
    const int cases = 2000;
    for (int trial = 0; trial < cases; ++trial) {
        std::vector<AugmentedSample> layers;
        std::vector<std::vector<double>> raw;
        const int depth = depth_dist(rng);
        for (int l = 0; l < depth; ++l) {
            std::vector<double> pts;
            for (int k = size_dist(rng); k > 0; --k) pts.push_back(trial % 2 ? lattice(rng) * 0.25 : real(rng));
            const DiscretePointSet d(pts);
            AugmentedSample a;
            for (double p : d.points()) a.points.push_back({p, PointRole::endpoint});
            raw.push_back(d.points());
            layers.push_back(std::move(a));
        }
        std::vector<std::vector<double>> got;
        for (const Chain& c : enumerate_chains(chain_forest_from_layers(layers))) got.push_back(c.values);
        auto want = oracle::metric_chains(raw);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) ++mismatches;
    }
    return {mismatches == 0, fmt("%d random forests (2-4 layers, 1-6 points), %d mismatches", cases, mismatches)};
}

Outcome perturbation() {
    std::vector<double> grid;
    for (int j = 0; j <= 4000; ++j) grid.push_back(-1.0 + 2.0 * j / 4000.0);
    const double lambda10 = lebesgue_constant(chebyshev_partition(10, -1, 1).nodes, grid);
    const auto nodes = chebyshev_partition(20, -1, 1).nodes;
    const double lambda20 = lebesgue_constant(nodes, grid);

    std::vector<double> base;
    for (double x : nodes) base.push_back(std::tanh(-x) + 1.0);
    const PolyInterpolant p = poly_fit(nodes, base);

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double worst_excess = -INFINITY;
    for (int trial = 0; trial < 100; ++trial) {
        const double eps = std::pow(10.0, -1.0 - 5.0 * (unit(rng) + 1.0) / 2.0);
        std::vector<double> values = base;
        for (double& v : values) v += eps * unit(rng);
        const PolyInterpolant q = poly_fit(nodes, values);
        double dev = 0.0;
        for (double x : grid) dev = std::max(dev, std::abs(q(x) - p(x)));
        worst_excess = std::max(worst_excess, dev - (lambda20 * eps + 1e-12));
    }
    const bool pass = worst_excess <= 0.0 && lambda10 >= 2.0 && lambda10 <= 2.6;
    return {pass, fmt("Lebesgue(N=10) %.4f in [2.0, 2.6]; 100 perturbations at N=20 (Lebesgue %.4f), max excess over "
                      "bound %.2e",
                      lambda10, lambda20, worst_excess)};
}

Outcome spline_order() {
    auto sin_error = [](std::size_t intervals) {
        std::vector<double> knots;
        std::vector<double> values;
        for (std::size_t i = 0; i <= intervals; ++i) {
            knots.push_back(static_cast<double>(i) / static_cast<double>(intervals));
            values.push_back(std::sin(knots.back()));
        }
        const CubicSpline s = spline_fit_not_a_knot(knots, values);
        double worst = 0.0;
        for (int j = 0; j <= 4000; ++j) {
            const double x = j / 4000.0;
            worst = std::max(worst, std::abs(s(x) - std::sin(x)));
        }
        return worst;
    };
    const double e10 = sin_error(10);
    const double e20 = sin_error(20);
    const double e40 = sin_error(40);
    const double r1 = e10 / e20;
    const double r2 = e20 / e40;

    std::vector<double> knots{-1.0, -0.7, -0.2, 0.1, 0.5, 0.6, 1.0};
    auto cubic = [](double x) { return 0.5 - 2.0 * x + x * x - 3.0 * x * x * x; };
    std::vector<double> values;
    for (double x : knots) values.push_back(cubic(x));
    const CubicSpline s = spline_fit_not_a_knot(knots, values);
    double cubic_err = 0.0;
    for (int j = 0; j <= 1000; ++j) {
        const double x = -1.0 + 2.0 * j / 1000.0;
        cubic_err = std::max(cubic_err, std::abs(s(x) - cubic(x)));
    }
    const bool pass = r1 >= 12 && r1 <= 20 && r2 >= 12 && r2 <= 20 && cubic_err <= 1e-12;
    return {pass, fmt("sin on [0, 1], 10/20/40 intervals: halving ratios %.2f, %.2f in [12, 20]; cubic error %.2e (limit 1e-12)", r1, r2, cubic_err)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"interpolation property", interpolation},
        {"metric-poly rate", metric_poly_rate},
        {"C4 global rate", c4_rate},
        {"C4 PCT rate", c4_pct_rate},
        {"Holder PCT rate", holder_pct_rate},
        {"Holder global rate", holder_rate},
        {"Hausdorff oracle equivalence", hausdorff_oracle},
        {"union lemma", union_lemma},
        {"chain enumeration vs brute force", chain_enumeration},
        {"perturbation bound", perturbation},
        {"spline order", spline_order},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("criterion %2zu %-34s %s  %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
