#pragma once

#include <cstdint>
#include <vector>

#include "clueval/clustering.hpp"

namespace clueval {

// Pair-occurrence statistics of a clustering pair. ranked_gt[j] counts the
// node pairs sharing exactly j ground-truth clusters, ranked_cand[j] the
// pairs sharing exactly j candidate clusters. Both start sized by the
// cluster count of their clustering and grow only if a pair occurs in
// every cluster.
struct PairProfile {
    std::vector<std::uint64_t> ranked_gt;
    std::vector<std::uint64_t> ranked_cand;
    double agreed = 0.0;          // A_j sum; soft mode weights by min(j',j)/max(j',j)
    std::uint64_t total_pairs = 0;  // N (N - 1) / 2
};

struct OmegaScore {
    double value = 0.0;
    double observed = 0.0;
    double expected = 0.0;
};

// Counts the mutual cluster memberships of every unordered node pair.
// Hard mode credits a pair only when both counts are equal; soft mode
// credits min/max of the two counts. O(N^2) pairs; auxiliary state is the
// two ranked vectors. Deterministic for any worker count.
PairProfile pair_profile(const NodeIndex& gt, const NodeIndex& cand, bool soft,
                         unsigned workers = 1);

// Omega Index: observed pair agreement adjusted by the agreement expected
// from the ranked pair counts alone.
OmegaScore omega(const Clustering& gt, const Clustering& cand, unsigned workers = 1);

// Soft Omega Index: as omega, but partially credits pairs occurring in a
// different number of clusters than categories, with a matching correction
// of the expected agreement.
OmegaScore omega_soft(const Clustering& gt, const Clustering& cand, unsigned workers = 1);

}  // namespace clueval
