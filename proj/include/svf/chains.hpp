#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "svf/sets.hpp"
#include "svf/svf_model.hpp"

namespace svf {

/// Tolerance for p in F(x_i) tests on sampled data.
inline constexpr double kMembershipTolerance = 1e-9;

struct ClassificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class PointRole { endpoint, apct, extended_pct };

struct TaggedPoint {
    double value = 0.0;
    PointRole role = PointRole::endpoint;
};

/// T_i: the endpoints of F(x_i) plus the approximated and extended PCT
/// points that landed on node i, sorted by value.
struct AugmentedSample {
    std::size_t node_index = 0;
    std::vector<TaggedPoint> points;

    [[nodiscard]] std::vector<double> values() const;
};

/// Layered DAG whose edges are the metric pairs of consecutive T_i. A
/// synthetic root (implicit) precedes layer 0, so every root-to-leaf path
/// is a significant metric chain.
class ChainForest {
public:
    ChainForest(std::vector<AugmentedSample> layers, std::vector<std::vector<std::vector<std::size_t>>> children);

    [[nodiscard]] std::size_t layer_count() const { return layers_.size(); }
    [[nodiscard]] const AugmentedSample& layer(std::size_t i) const { return layers_[i]; }
    [[nodiscard]] const std::vector<AugmentedSample>& layers() const { return layers_; }
    /// Indices into layer i+1 of the children of point `point` of layer i.
    [[nodiscard]] const std::vector<std::size_t>& children(std::size_t i, std::size_t point) const {
        return children_[i][point];
    }

    /// Text adjacency listing: one line per node with layer, value, role
    /// and child values.
    void dump(std::ostream& os) const;

private:
    std::vector<AugmentedSample> layers_;
    std::vector<std::vector<std::vector<std::size_t>>> children_;
};

enum class ChainLabel { upper, lower, hole_upper, hole_lower, unclassified };

struct Chain {
    std::vector<double> values;
    ChainLabel label = ChainLabel::unclassified;
    std::size_t hole = 0;  // meaningful for hole_upper / hole_lower
};

/// A maximal run of nodes n..m whose samples show the same hole, with that
/// hole's gap (g(x_i), h(x_i)) at each node.
struct HoleRun {
    std::size_t first = 0;
    std::size_t last = 0;
    std::vector<Interval> gaps;
};

enum class BoundarySide { lower, upper };

/// Values of one hole boundary on the nodes first..last.
struct BoundaryChain {
    std::size_t hole = 0;
    BoundarySide side = BoundarySide::lower;
    std::size_t first = 0;
    std::size_t last = 0;
    std::vector<double> xs;
    std::vector<double> values;
};

struct BoundaryChainPair {
    BoundaryChain lower;
    BoundaryChain upper;
};

struct ClassifiedChains {
    std::vector<Chain> chains;
    std::vector<HoleRun> holes;
    std::vector<std::string> warnings;

    /// The kept chain with the given label (and hole for hole labels).
    [[nodiscard]] const Chain& find(ChainLabel label, std::size_t hole = 0) const;
};

[[nodiscard]] std::vector<DiscretePointSet> discretize(const SampleSet& samples);

/// Per node: midpoints of the gaps of an adjacent sample that fall inside
/// F(x_i) (and outside the neighbour).
[[nodiscard]] std::vector<std::vector<double>> detect_apct(const SampleSet& samples);

struct ExtendedPcts {
    std::vector<std::vector<double>> right;  // EP_R per node
    std::vector<std::vector<double>> left;   // EP_L per node
};

[[nodiscard]] ExtendedPcts extend_pcts(const SampleSet& samples, const std::vector<std::vector<double>>& apcts);

[[nodiscard]] std::vector<AugmentedSample> augmented_samples(const SampleSet& samples);

/// Forest over given layers, edges = metric pairs of consecutive layers.
[[nodiscard]] ChainForest chain_forest_from_layers(std::vector<AugmentedSample> layers);

[[nodiscard]] ChainForest build_chain_forest(const SampleSet& samples);

/// All root-to-leaf paths. Throws ClassificationError past max_chains.
[[nodiscard]] std::vector<Chain> enumerate_chains(const ChainForest& forest, std::size_t max_chains = 1u << 20);

/// Groups consecutive nodes' gaps into holes by overlap of the open gaps.
/// Throws ClassificationError when a gap overlaps two gaps of a neighbour.
[[nodiscard]] std::vector<HoleRun> find_hole_runs(const SampleSet& samples);

/// Labels the pointwise-maximal chain upper, the pointwise-minimal lower,
/// and per hole keeps the lexicographically smallest chain tracking its
/// lower (resp. upper) gap endpoints. Everything else is unclassified.
/// Throws ClassificationError when a hole has no tracking chain.
[[nodiscard]] ClassifiedChains classify_chains(std::vector<Chain> chains, const SampleSet& samples);

/// Per hole: its lower chain then its upper chain, on exactly the nodes
/// whose samples show the gap.
[[nodiscard]] std::vector<BoundaryChain> extract_boundary_chains(const SampleSet& samples);

/// extract_boundary_chains grouped per hole.
[[nodiscard]] std::vector<BoundaryChainPair> boundary_chain_pairs(const SampleSet& samples);

std::string to_string(PointRole role);
std::string to_string(ChainLabel label);

}  // namespace svf
