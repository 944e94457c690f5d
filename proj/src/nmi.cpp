#include "clueval/nmi.hpp"

#include <algorithm>
#include <cmath>

namespace clueval {

double entropy(const Clustering& c) {
    double total = 0.0;
    for (const auto& cluster : c.clusters) total += double(cluster.size());
    double h = 0.0;
    for (const auto& cluster : c.clusters) {
        const double p = double(cluster.size()) / total;
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

JointOverlapTable joint_overlap_table(const Clustering& gt, const Clustering& cand) {
    const NodeIndex gi = build_node_index(gt);
    const NodeIndex ci = build_node_index(cand);
    if (gi.node_count != ci.node_count)
        throw universe_mismatch("joint_overlap_table requires aligned universes", gi.node_count,
                                ci.node_count);

    JointOverlapTable table;
    table.gt_marginals.assign(gt.cluster_count(), 0.0);
    table.cand_marginals.assign(cand.cluster_count(), 0.0);
    for (DenseId nd = 0; nd < gi.node_count; ++nd)
        for (ClusterId g : gi.of(nd))
            for (ClusterId c : ci.of(nd)) table.entries[JointOverlapTable::key(g, c)] += 1.0;
    for (const auto& [key, mass] : table.entries) {
        table.gt_marginals[key >> 32] += mass;
        table.cand_marginals[key & 0xffffffffu] += mass;
        table.total_mass += mass;
    }
    return table;
}

namespace {

double marginal_entropy(const std::vector<double>& marginals, double total) {
    double h = 0.0;
    for (double mass : marginals) {
        if (mass <= 0.0) continue;
        const double p = mass / total;
        h -= p * std::log2(p);
    }
    return h;
}

}  // namespace

double table_mi(const JointOverlapTable& table) {
    const double total = table.total_mass;
    double mi = 0.0;
    for (const auto& [key, mass] : table.entries) {
        if (mass <= 0.0) continue;
        const double joint = mass / total;
        const double pg = table.gt_marginals[key >> 32] / total;
        const double pc = table.cand_marginals[key & 0xffffffffu] / total;
        mi += joint * std::log2(joint / (pg * pc));
    }
    return mi;
}

double table_nmi(const JointOverlapTable& table, NmiNorm norm) {
    const double hg = marginal_entropy(table.gt_marginals, table.total_mass);
    const double hc = marginal_entropy(table.cand_marginals, table.total_mass);
    double denom = 0.0;
    switch (norm) {
        case NmiNorm::Max: denom = std::max(hg, hc); break;
        case NmiNorm::Avg: denom = 0.5 * (hg + hc); break;
        case NmiNorm::Geo: denom = std::sqrt(hg * hc); break;
    }
    if (denom <= 0.0)
        throw degenerate_input("degenerate clustering (single cluster): NMI undefined");
    const double value = table_mi(table) / denom;
    // MI can stray a few ulps outside [0, denom].
    return std::clamp(value, 0.0, 1.0);
}

double nmi_exact(const Clustering& gt, const Clustering& cand, NmiNorm norm) {
    return table_nmi(joint_overlap_table(gt, cand), norm);
}

}  // namespace clueval
