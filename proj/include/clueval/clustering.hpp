#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace clueval {

// Original node identifier as it appears in the input files.
using NodeId = std::uint64_t;
// Dense node id: position of the original id in the sorted universe of a clustering.
using DenseId = std::uint32_t;
// Ordinal of a cluster within its clustering.
using ClusterId = std::uint32_t;

inline constexpr ClusterId kNoCluster = std::numeric_limits<ClusterId>::max();

// Semantics of a node shared between several clusters of one clustering:
// in an overlapping clustering it contributes 1/shares to each of them,
// in a multi-resolution clustering it fully belongs to each one.
enum class ContributionMode { Overlapping, MultiResolution };

// Accumulator for the matched contribution between a pair of clusters.
// Adding with a different origin than the stored one restarts the
// accumulation, which keeps a single counter valid for a whole sequential
// traversal of a counterpart clustering.
struct MatchCounter {
    ClusterId origin = kNoCluster;
    double mass = 0.0;

    double add(ClusterId from, double contribution) {
        if (origin != from) {
            origin = from;
            mass = 0.0;
        }
        mass += contribution;
        return mass;
    }
};

struct Cluster {
    // Members as dense ids, ascending.
    std::vector<DenseId> members;
    // Members as original ids in file order; kept for faithful serialization.
    std::vector<NodeId> raw_members;
    // |x|: member count in multi-resolution mode, sum of 1/shares in
    // overlapping mode. Zero until compute_contributions has run.
    double weight = 0.0;

    std::size_t size() const { return members.size(); }
};

struct Clustering {
    std::vector<Cluster> clusters;
    // Sorted original node ids; the dense id of a node is its position here.
    std::vector<NodeId> universe;

    std::uint32_t node_count() const { return static_cast<std::uint32_t>(universe.size()); }
    std::uint32_t cluster_count() const { return static_cast<std::uint32_t>(clusters.size()); }
    // Total membership: sum of cluster sizes.
    std::uint64_t total_membership() const {
        std::uint64_t total = 0;
        for (const auto& c : clusters) total += c.size();
        return total;
    }
};

struct parse_error : std::runtime_error {
    std::size_t line;
    parse_error(std::string msg, std::size_t line_no)
        : std::runtime_error(std::move(msg)), line(line_no) {}
};

struct universe_mismatch : std::runtime_error {
    std::size_t only_in_first;
    std::size_t only_in_second;
    universe_mismatch(std::string msg, std::size_t first, std::size_t second)
        : std::runtime_error(std::move(msg)), only_in_first(first), only_in_second(second) {}
};

struct degenerate_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-clustering association of every node with the clusters containing it
// (the inverse of the member lists), stored as a CSR-like array.
struct NodeIndex {
    std::uint32_t node_count = 0;
    std::uint32_t cluster_count = 0;
    std::vector<std::uint32_t> offsets;   // node_count + 1
    std::vector<ClusterId> cluster_ids;   // ascending within each node

    std::span<const ClusterId> of(DenseId node) const {
        return {cluster_ids.data() + offsets[node], cluster_ids.data() + offsets[node + 1]};
    }
    std::uint32_t shares(DenseId node) const { return offsets[node + 1] - offsets[node]; }
};

NodeIndex build_node_index(const Clustering& c);

enum class UniversePolicy { Strict, Intersect };

struct AlignStats {
    std::size_t dropped_from_first = 0;
    std::size_t dropped_from_second = 0;
    std::size_t dropped_clusters = 0;
};

// Checks (Strict) or establishes (Intersect) a common node universe.
// After a successful call both clusterings have identical `universe`
// vectors, so dense ids are directly comparable across them.
std::pair<Clustering, Clustering> align_universes(Clustering a, Clustering b,
                                                  UniversePolicy policy,
                                                  AlignStats* stats = nullptr);

// Per-node contribution to a cluster it belongs to, within its own clustering.
inline double node_contribution(const NodeIndex& own, DenseId node, ContributionMode mode) {
    return mode == ContributionMode::Overlapping ? 1.0 / own.shares(node) : 1.0;
}

// Per-node matched contribution between the two clusterings: overlapping
// mode discounts by the larger of the two share counts.
inline double matched_contribution(const NodeIndex& gt, const NodeIndex& cand, DenseId node,
                                   ContributionMode mode) {
    if (mode != ContributionMode::Overlapping) return 1.0;
    return 1.0 / std::max(gt.shares(node), cand.shares(node));
}

// Fills every cluster's weight |x| with the sum of its members' own
// contributions: the member count in multi-resolution mode, sum of
// 1/shares in overlapping mode.
Clustering compute_contributions(Clustering c, const NodeIndex& own, ContributionMode mode);

}  // namespace clueval
