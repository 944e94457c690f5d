#pragma once

#include <cstdint>

#include "clueval/clustering.hpp"

namespace clueval {

// Deterministic random clustering over nodes 0..n-1: every node belongs to
// at least one of the k clusters, no cluster is empty, and the total
// membership equals round(avg_membership * n). avg_membership = 1 yields a
// partition. Throws std::invalid_argument on infeasible parameters.
Clustering generate_synthetic(std::uint32_t nodes, std::uint32_t clusters, double avg_membership,
                              std::uint64_t seed);

}  // namespace clueval
