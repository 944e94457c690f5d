#pragma once

#include <vector>

#include "clueval/clustering.hpp"

namespace clueval {

enum class MatchVariant { F1a, F1h, F1p };

// Local match of a cluster pair from the matched mass m and the two
// cluster weights: the F1 of the contribution-based precision and recall.
inline double match_f1(double m, double w_gt, double w_cand) {
    return 2.0 * m / (w_gt + w_cand);
}

// Probability-flavoured local match: product of the two match fractions.
inline double match_pprob(double m, double w_gt, double w_cand) {
    return m * m / (w_gt * w_cand);
}

// Best local match per traversed cluster against the target clustering,
// computed in a single pass over the members of the traversed clusters.
// Each target cluster carries one accumulator that restarts whenever the
// traversed cluster changes, so no per-pair state is kept. Weights must
// have been filled by compute_contributions with the same mode.
// With prob set the pprob match is used and each best value is
// square-rooted before emission.
std::vector<double> best_matches(const Clustering& target, const NodeIndex& target_index,
                                 const NodeIndex& own_index, const Clustering& traversed,
                                 bool prob, ContributionMode mode);

// Mean F1 family over the best matches of both evaluation directions,
// each direction averaged with the cluster weights:
//   F1a - arithmetic mean of the two averages,
//   F1h - harmonic mean,
//   F1p - harmonic mean of the pprob-based averages.
double mean_f1(const Clustering& gt, const Clustering& cand, MatchVariant variant,
               ContributionMode mode);

}  // namespace clueval
