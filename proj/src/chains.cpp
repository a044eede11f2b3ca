#include "svf/chains.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace svf {

namespace {

bool same_value(double p, double q) { return std::abs(p - q) <= 1e-12 * (1.0 + std::abs(p) + std::abs(q)); }

bool strictly_inside(const CompactSet& set, double p) {
    for (const Interval& iv : set.intervals()) {
        if (p > iv.lo && p < iv.hi) return true;
    }
    return false;
}

void push_unique(std::vector<double>& out, double p) {
    for (double q : out) {
        if (same_value(p, q)) return;
    }
    out.push_back(p);
}

}  // namespace

std::vector<double> AugmentedSample::values() const {
    std::vector<double> out;
    out.reserve(points.size());
    for (const TaggedPoint& p : points) out.push_back(p.value);
    return out;
}

ChainForest::ChainForest(std::vector<AugmentedSample> layers,
                         std::vector<std::vector<std::vector<std::size_t>>> children)
    : layers_(std::move(layers)), children_(std::move(children)) {}

void ChainForest::dump(std::ostream& os) const {
    os << "root -> layer 0 (" << (layers_.empty() ? 0 : layers_[0].points.size()) << " nodes)\n";
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        for (std::size_t k = 0; k < layers_[i].points.size(); ++k) {
            const TaggedPoint& p = layers_[i].points[k];
            os << "layer " << i << " value " << p.value << " role " << to_string(p.role) << " children [";
            if (i + 1 < layers_.size()) {
                const auto& kids = children_[i][k];
                for (std::size_t c = 0; c < kids.size(); ++c) {
                    if (c) os << ", ";
                    os << layers_[i + 1].points[kids[c]].value;
                }
            }
            os << "]\n";
        }
    }
}

const Chain& ClassifiedChains::find(ChainLabel label, std::size_t hole) const {
    for (const Chain& c : chains) {
        if (c.label != label) continue;
        if ((label == ChainLabel::hole_lower || label == ChainLabel::hole_upper) && c.hole != hole) continue;
        return c;
    }
    throw ClassificationError("no chain labelled " + to_string(label) + " for hole " + std::to_string(hole));
}

std::vector<DiscretePointSet> discretize(const SampleSet& samples) {
    samples.check();
    std::vector<DiscretePointSet> out;
    out.reserve(samples.size());
    for (const CompactSet& v : samples.values) out.emplace_back(v.endpoints());
    return out;
}

std::vector<std::vector<double>> detect_apct(const SampleSet& samples) {
    samples.check();
    const std::size_t n = samples.size();
    std::vector<std::vector<double>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : {i - 1, i + 1}) {
            if (j >= n) continue;  // i - 1 wraps for i == 0
            for (const Interval& gap : samples.values[j].gaps()) {
                const double p = 0.5 * (gap.lo + gap.hi);
                if (strictly_inside(samples.values[i], p) && !samples.values[j].contains(p)) push_unique(out[i], p);
            }
        }
        std::sort(out[i].begin(), out[i].end());
    }
    return out;
}

ExtendedPcts extend_pcts(const SampleSet& samples, const std::vector<std::vector<double>>& apcts) {
    const std::size_t n = samples.size();
    ExtendedPcts ep{std::vector<std::vector<double>>(n), std::vector<std::vector<double>>(n)};
    for (std::size_t j = 0; j < n; ++j) {
        for (double p : apcts[j]) {
            for (std::size_t i = j + 1; i < n && samples.values[i].contains(p, kMembershipTolerance); ++i) {
                push_unique(ep.right[i], p);
            }
            for (std::size_t i = j; i-- > 0 && samples.values[i].contains(p, kMembershipTolerance);) {
                push_unique(ep.left[i], p);
            }
        }
    }
    for (auto& v : ep.right) std::sort(v.begin(), v.end());
    for (auto& v : ep.left) std::sort(v.begin(), v.end());
    return ep;
}

std::vector<AugmentedSample> augmented_samples(const SampleSet& samples) {
    const auto discrete = discretize(samples);
    const auto apcts = detect_apct(samples);
    const auto ep = extend_pcts(samples, apcts);
    std::vector<AugmentedSample> layers(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        AugmentedSample& layer = layers[i];
        layer.node_index = i;
        auto add = [&layer](double p, PointRole role) {
            for (const TaggedPoint& q : layer.points) {
                if (same_value(p, q.value)) return;
            }
            layer.points.push_back({p, role});
        };
        for (double p : discrete[i].points()) add(p, PointRole::endpoint);
        for (double p : apcts[i]) add(p, PointRole::apct);
        for (double p : ep.right[i]) add(p, PointRole::extended_pct);
        for (double p : ep.left[i]) add(p, PointRole::extended_pct);
        std::sort(layer.points.begin(), layer.points.end(),
                  [](const TaggedPoint& a, const TaggedPoint& b) { return a.value < b.value; });
    }
    return layers;
}

ChainForest chain_forest_from_layers(std::vector<AugmentedSample> layers) {
    std::vector<std::vector<std::vector<std::size_t>>> children(layers.size());
    for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
        const std::vector<double> from = layers[i].values();
        const std::vector<double> to = layers[i + 1].values();
        children[i].resize(from.size());
        // (v, w) is a metric pair when w is nearest to v or v is nearest to w
        for (std::size_t a = 0; a < from.size(); ++a) {
            for (std::size_t b : nearest_indices(from[a], to)) children[i][a].push_back(b);
        }
        for (std::size_t b = 0; b < to.size(); ++b) {
            for (std::size_t a : nearest_indices(to[b], from)) children[i][a].push_back(b);
        }
        for (auto& kids : children[i]) {
            std::sort(kids.begin(), kids.end());
            kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
        }
    }
    return ChainForest(std::move(layers), std::move(children));
}

ChainForest build_chain_forest(const SampleSet& samples) { return chain_forest_from_layers(augmented_samples(samples)); }

std::vector<Chain> enumerate_chains(const ChainForest& forest, std::size_t max_chains) {
    std::vector<Chain> out;
    const std::size_t depth = forest.layer_count();
    if (depth == 0) return out;
    std::vector<std::size_t> path;
    path.reserve(depth);

    // pre-order traversal from the implicit root
    auto visit = [&](auto&& self, std::size_t layer, std::size_t index) -> void {
        path.push_back(index);
        if (layer + 1 == depth) {
            if (out.size() >= max_chains) {
                throw ClassificationError("chain enumeration exceeded " + std::to_string(max_chains) + " paths");
            }
            Chain c;
            c.values.reserve(depth);
            for (std::size_t i = 0; i < depth; ++i) c.values.push_back(forest.layer(i).points[path[i]].value);
            out.push_back(std::move(c));
        } else {
            for (std::size_t child : forest.children(layer, index)) self(self, layer + 1, child);
        }
        path.pop_back();
    };
    for (std::size_t k = 0; k < forest.layer(0).points.size(); ++k) visit(visit, 0, k);
    return out;
}

std::vector<HoleRun> find_hole_runs(const SampleSet& samples) {
    samples.check();
    const std::size_t n = samples.size();
    std::vector<std::vector<Interval>> gaps(n);
    for (std::size_t i = 0; i < n; ++i) gaps[i] = samples.values[i].gaps();

    auto overlaps = [](const Interval& p, const Interval& q) { return std::max(p.lo, q.lo) < std::min(p.hi, q.hi); };

    std::vector<HoleRun> runs;
    // run_of[k] = index into runs of gap k at the previous node
    std::vector<std::size_t> previous;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> current(gaps[i].size());
        std::vector<int> claimed(i == 0 ? 0 : gaps[i - 1].size(), 0);
        for (std::size_t k = 0; k < gaps[i].size(); ++k) {
            std::size_t match = SIZE_MAX;
            if (i > 0) {
                for (std::size_t q = 0; q < gaps[i - 1].size(); ++q) {
                    if (!overlaps(gaps[i][k], gaps[i - 1][q])) continue;
                    if (match != SIZE_MAX) {
                        throw ClassificationError("ambiguous holes: gap at node " + std::to_string(i) +
                                                  " overlaps two gaps of node " + std::to_string(i - 1));
                    }
                    match = q;
                }
            }
            if (match != SIZE_MAX) {
                if (++claimed[match] > 1) {
                    throw ClassificationError("ambiguous holes: gap at node " + std::to_string(i - 1) +
                                              " overlaps two gaps of node " + std::to_string(i));
                }
                HoleRun& run = runs[previous[match]];
                run.last = i;
                run.gaps.push_back(gaps[i][k]);
                current[k] = previous[match];
            } else {
                runs.push_back({i, i, {gaps[i][k]}});
                current[k] = runs.size() - 1;
            }
        }
        previous = std::move(current);
    }
    std::stable_sort(runs.begin(), runs.end(), [](const HoleRun& p, const HoleRun& q) {
        if (p.first != q.first) return p.first < q.first;
        return p.gaps.front().lo < q.gaps.front().lo;
    });
    return runs;
}

ClassifiedChains classify_chains(std::vector<Chain> chains, const SampleSet& samples) {
    ClassifiedChains out;
    out.holes = find_hole_runs(samples);
    if (chains.empty()) throw ClassificationError("no chains to classify");
    const std::size_t depth = chains.front().values.size();

    for (Chain& c : chains) c.label = ChainLabel::unclassified;

    auto extreme = [&](bool want_max) -> std::size_t {
        for (std::size_t k = 0; k < chains.size(); ++k) {
            bool dominant = true;
            for (std::size_t i = 0; i < depth && dominant; ++i) {
                for (const Chain& other : chains) {
                    if (want_max ? other.values[i] > chains[k].values[i] : other.values[i] < chains[k].values[i]) {
                        dominant = false;
                        break;
                    }
                }
            }
            if (dominant) return k;
        }
        throw ClassificationError(std::string("no pointwise ") + (want_max ? "maximal" : "minimal") + " chain");
    };
    const std::size_t top = extreme(true);
    const std::size_t bottom = extreme(false);
    chains[top].label = ChainLabel::upper;
    if (bottom != top) chains[bottom].label = ChainLabel::lower;

    for (std::size_t h = 0; h < out.holes.size(); ++h) {
        const HoleRun& run = out.holes[h];
        auto tracks = [&](const Chain& c, bool upper_side) {
            for (std::size_t i = run.first; i <= run.last; ++i) {
                const Interval& gap = run.gaps[i - run.first];
                if (!same_value(c.values[i], upper_side ? gap.hi : gap.lo)) return false;
            }
            return true;
        };
        for (bool upper_side : {false, true}) {
            std::size_t best = SIZE_MAX;
            for (std::size_t k = 0; k < chains.size(); ++k) {
                if (chains[k].label != ChainLabel::unclassified || !tracks(chains[k], upper_side)) continue;
                if (best == SIZE_MAX || chains[k].values < chains[best].values) best = k;
            }
            if (best == SIZE_MAX) {
                throw ClassificationError("hole " + std::to_string(h) + " (nodes " + std::to_string(run.first) + ".." +
                                          std::to_string(run.last) + ") has no " + (upper_side ? "upper" : "lower") +
                                          " boundary chain");
            }
            chains[best].label = upper_side ? ChainLabel::hole_upper : ChainLabel::hole_lower;
            chains[best].hole = h;
        }
    }

    const std::size_t bound = 2 + 4 * out.holes.size();
    if (chains.size() > bound) {
        out.warnings.push_back(std::to_string(chains.size()) + " significant chains exceed the expected bound " +
                               std::to_string(bound));
    }
    out.chains = std::move(chains);
    return out;
}

std::vector<BoundaryChain> extract_boundary_chains(const SampleSet& samples) {
    std::vector<BoundaryChain> out;
    const auto runs = find_hole_runs(samples);
    for (std::size_t h = 0; h < runs.size(); ++h) {
        const HoleRun& run = runs[h];
        BoundaryChain lower{h, BoundarySide::lower, run.first, run.last, {}, {}};
        BoundaryChain upper{h, BoundarySide::upper, run.first, run.last, {}, {}};
        for (std::size_t i = run.first; i <= run.last; ++i) {
            lower.xs.push_back(samples.node(i));
            upper.xs.push_back(samples.node(i));
            lower.values.push_back(run.gaps[i - run.first].lo);
            upper.values.push_back(run.gaps[i - run.first].hi);
        }
        out.push_back(std::move(lower));
        out.push_back(std::move(upper));
    }
    return out;
}

std::vector<BoundaryChainPair> boundary_chain_pairs(const SampleSet& samples) {
    auto flat = extract_boundary_chains(samples);
    std::vector<BoundaryChainPair> out;
    for (std::size_t k = 0; k + 1 < flat.size(); k += 2) out.push_back({std::move(flat[k]), std::move(flat[k + 1])});
    return out;
}

std::string to_string(PointRole role) {
    switch (role) {
        case PointRole::endpoint: return "endpoint";
        case PointRole::apct: return "apct";
        case PointRole::extended_pct: return "extended_pct";
    }
    return "?";
}

std::string to_string(ChainLabel label) {
    switch (label) {
        case ChainLabel::upper: return "upper";
        case ChainLabel::lower: return "lower";
        case ChainLabel::hole_upper: return "hole_upper";
        case ChainLabel::hole_lower: return "hole_lower";
        case ChainLabel::unclassified: return "unclassified";
    }
    return "?";
}

}  // namespace svf
