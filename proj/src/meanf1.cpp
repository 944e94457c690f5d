#include "clueval/meanf1.hpp"

#include <cmath>

namespace clueval {

std::vector<double> best_matches(const Clustering& target, const NodeIndex& target_index,
                                 const NodeIndex& own_index, const Clustering& traversed,
                                 bool prob, ContributionMode mode) {
    std::vector<MatchCounter> counters(target.cluster_count());
    std::vector<double> bests;
    bests.reserve(traversed.cluster_count());

    for (ClusterId ci = 0; ci < traversed.cluster_count(); ++ci) {
        const Cluster& cluster = traversed.clusters[ci];
        double best = 0.0;
        for (DenseId nd : cluster.members) {
            const double contrib = matched_contribution(target_index, own_index, nd, mode);
            for (ClusterId ti : target_index.of(nd)) {
                const double mass = counters[ti].add(ci, contrib);
                const double w_target = target.clusters[ti].weight;
                const double match = prob ? match_pprob(mass, w_target, cluster.weight)
                                          : match_f1(mass, w_target, cluster.weight);
                if (match > best) best = match;
            }
        }
        bests.push_back(prob ? std::sqrt(best) : best);
    }
    return bests;
}

namespace {

// Weighted average of the best matches, weights being the traversed
// clusters' own weights.
double side_average(const Clustering& traversed, const std::vector<double>& bests) {
    double total = 0.0, weighted = 0.0;
    for (ClusterId ci = 0; ci < traversed.cluster_count(); ++ci) {
        total += traversed.clusters[ci].weight;
        weighted += traversed.clusters[ci].weight * bests[ci];
    }
    return total > 0.0 ? weighted / total : 0.0;
}

}  // namespace

double mean_f1(const Clustering& gt, const Clustering& cand, MatchVariant variant,
               ContributionMode mode) {
    const NodeIndex gt_index = build_node_index(gt);
    const NodeIndex cand_index = build_node_index(cand);
    if (gt_index.node_count != cand_index.node_count)
        throw universe_mismatch("mean_f1 requires aligned universes", gt_index.node_count,
                                cand_index.node_count);

    const Clustering gtw = compute_contributions(gt, gt_index, mode);
    const Clustering candw = compute_contributions(cand, cand_index, mode);
    const bool prob = variant == MatchVariant::F1p;

    const auto gt_bests = best_matches(candw, cand_index, gt_index, gtw, prob, mode);
    const auto cand_bests = best_matches(gtw, gt_index, cand_index, candw, prob, mode);
    const double f_gt = side_average(gtw, gt_bests);
    const double f_cand = side_average(candw, cand_bests);

    if (variant == MatchVariant::F1a) return 0.5 * (f_gt + f_cand);
    // Harmonic mean, defined as 0 when both sides are fully dissimilar.
    const double sum = f_gt + f_cand;
    return sum > 0.0 ? 2.0 * f_gt * f_cand / sum : 0.0;
}

}  // namespace clueval
