#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "clueval/clustering.hpp"

namespace clueval {

enum class NmiNorm { Max, Avg, Geo };

// Overlap masses of every (category, cluster) pair with a common member,
// with the row/column sums and the grand total used as the normalizer.
struct JointOverlapTable {
    std::unordered_map<std::uint64_t, double> entries;  // key: category << 32 | cluster
    std::vector<double> gt_marginals;
    std::vector<double> cand_marginals;
    double total_mass = 0.0;

    static std::uint64_t key(ClusterId category, ClusterId cluster) {
        return (std::uint64_t(category) << 32) | cluster;
    }
};

// Entropy in bits of the cluster size distribution.
double entropy(const Clustering& c);

// Builds the overlap table in one pass over the node index, costing the
// sum over nodes of shares_gt * shares_cand instead of |C'| * |C| set
// intersections.
JointOverlapTable joint_overlap_table(const Clustering& gt, const Clustering& cand);

// Exact NMI over the normalized overlap table. Throws degenerate_input
// when the normalizing entropy is zero (single-cluster clustering).
double nmi_exact(const Clustering& gt, const Clustering& cand, NmiNorm norm = NmiNorm::Max);

// Mutual information and NMI of an already-built table; exposed for the
// stochastic estimator which reuses the same computation on sampled tables.
double table_mi(const JointOverlapTable& table);
double table_nmi(const JointOverlapTable& table, NmiNorm norm);

}  // namespace clueval
