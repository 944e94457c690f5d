#include "clueval/clustering.hpp"

#include <algorithm>
#include <unordered_map>

namespace clueval {

NodeIndex build_node_index(const Clustering& c) {
    NodeIndex idx;
    idx.node_count = c.node_count();
    idx.cluster_count = c.cluster_count();
    idx.offsets.assign(idx.node_count + 1, 0);
    for (const auto& cluster : c.clusters)
        for (DenseId nd : cluster.members) ++idx.offsets[nd + 1];
    for (std::uint32_t i = 0; i < idx.node_count; ++i) idx.offsets[i + 1] += idx.offsets[i];
    idx.cluster_ids.resize(idx.offsets.back());
    std::vector<std::uint32_t> fill(idx.offsets.begin(), idx.offsets.end() - 1);
    for (ClusterId ci = 0; ci < c.clusters.size(); ++ci)
        for (DenseId nd : c.clusters[ci].members) idx.cluster_ids[fill[nd]++] = ci;
    return idx;
}

namespace {

// Restricts a clustering to the given sorted universe, dropping emptied
// clusters and renumbering dense ids.
Clustering restrict_to(Clustering c, const std::vector<NodeId>& universe, AlignStats* stats,
                       bool first) {
    std::unordered_map<NodeId, DenseId> dense;
    dense.reserve(universe.size());
    for (DenseId i = 0; i < universe.size(); ++i) dense.emplace(universe[i], i);

    std::size_t dropped_nodes = 0;
    std::vector<Cluster> kept;
    kept.reserve(c.clusters.size());
    for (auto& cluster : c.clusters) {
        Cluster next;
        next.raw_members.reserve(cluster.raw_members.size());
        for (NodeId id : cluster.raw_members) {
            auto it = dense.find(id);
            if (it == dense.end()) {
                ++dropped_nodes;
                continue;
            }
            next.raw_members.push_back(id);
            next.members.push_back(it->second);
        }
        if (next.members.empty()) {
            if (stats) ++stats->dropped_clusters;
            continue;
        }
        std::sort(next.members.begin(), next.members.end());
        kept.push_back(std::move(next));
    }
    if (stats) (first ? stats->dropped_from_first : stats->dropped_from_second) += dropped_nodes;
    c.clusters = std::move(kept);
    c.universe = universe;
    return c;
}

}  // namespace

std::pair<Clustering, Clustering> align_universes(Clustering a, Clustering b,
                                                  UniversePolicy policy, AlignStats* stats) {
    if (a.universe == b.universe) return {std::move(a), std::move(b)};

    std::vector<NodeId> shared;
    shared.reserve(std::min(a.universe.size(), b.universe.size()));
    std::set_intersection(a.universe.begin(), a.universe.end(), b.universe.begin(),
                          b.universe.end(), std::back_inserter(shared));
    const std::size_t only_a = a.universe.size() - shared.size();
    const std::size_t only_b = b.universe.size() - shared.size();

    if (policy == UniversePolicy::Strict) {
        throw universe_mismatch("universe mismatch: " + std::to_string(only_a) +
                                    " node(s) only in the first clustering, " +
                                    std::to_string(only_b) + " only in the second",
                                only_a, only_b);
    }
    if (shared.empty()) {
        throw universe_mismatch("universe mismatch: the node universes are disjoint", only_a,
                                only_b);
    }
    return {restrict_to(std::move(a), shared, stats, true),
            restrict_to(std::move(b), shared, stats, false)};
}

Clustering compute_contributions(Clustering c, const NodeIndex& own, ContributionMode mode) {
    for (auto& cluster : c.clusters) {
        double total = 0.0;
        for (DenseId nd : cluster.members) total += node_contribution(own, nd, mode);
        cluster.weight = total;
    }
    return c;
}

}  // namespace clueval
