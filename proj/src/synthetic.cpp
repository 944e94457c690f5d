#include "clueval/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace clueval {

Clustering generate_synthetic(std::uint32_t nodes, std::uint32_t clusters, double avg_membership,
                              std::uint64_t seed) {
    if (clusters == 0 || nodes < clusters)
        throw std::invalid_argument("generate_synthetic: need nodes >= clusters >= 1");
    if (avg_membership < 1.0)
        throw std::invalid_argument("generate_synthetic: average membership must be >= 1");
    const std::uint64_t target = std::uint64_t(std::llround(avg_membership * double(nodes)));
    if (target > std::uint64_t(nodes) * clusters)
        throw std::invalid_argument("generate_synthetic: average membership exceeds cluster count");

    std::mt19937_64 rng(seed);
    auto below = [&rng](std::uint32_t bound) {
        return std::uint32_t((unsigned __int128)(rng()) * bound >> 64);
    };

    // Primary assignment: the first k nodes seed the k clusters, the rest
    // land uniformly, so no cluster is empty and every node is covered.
    std::vector<std::vector<std::uint32_t>> memberships(nodes);
    std::vector<std::uint64_t> sizes(clusters, 0);
    for (std::uint32_t nd = 0; nd < nodes; ++nd) {
        const std::uint32_t c = nd < clusters ? nd : below(clusters);
        memberships[nd].push_back(c);
        ++sizes[c];
    }

    std::uint64_t extra = target - nodes;
    while (extra > 0) {
        const std::uint32_t nd = below(nodes);
        if (memberships[nd].size() >= clusters) continue;
        const std::uint32_t c = below(clusters);
        if (std::find(memberships[nd].begin(), memberships[nd].end(), c) != memberships[nd].end())
            continue;
        memberships[nd].push_back(c);
        ++sizes[c];
        --extra;
    }

    Clustering out;
    out.universe.resize(nodes);
    for (std::uint32_t nd = 0; nd < nodes; ++nd) out.universe[nd] = nd;
    out.clusters.resize(clusters);
    for (std::uint32_t c = 0; c < clusters; ++c) {
        out.clusters[c].members.reserve(sizes[c]);
        out.clusters[c].raw_members.reserve(sizes[c]);
    }
    for (std::uint32_t nd = 0; nd < nodes; ++nd) {
        for (std::uint32_t c : memberships[nd]) {
            out.clusters[c].members.push_back(nd);
            out.clusters[c].raw_members.push_back(nd);
        }
    }
    return out;
}

}  // namespace clueval
