#pragma once

// Brute-force reference implementations used only by tests and the
// acceptance suite. They deliberately share no computational code with the
// fast paths in src/: membership counts are rebuilt by scanning clusters,
// matches by explicit set intersections, pair statistics by per-pair
// recomputation. Inputs are expected to stay small (N <= a few hundred).

#include <string>

#include "clueval/clustering.hpp"
#include "clueval/meanf1.hpp"

namespace clueval::oracle {

struct OracleReport {
    std::string metric;
    double oracle_value = 0.0;
    double fast_value = 0.0;
    double difference() const {
        const double d = oracle_value - fast_value;
        return d < 0 ? -d : d;
    }
};

// Classical Adjusted Rand Index from the explicit contingency table.
// Throws degenerate_input unless both clusterings are partitions.
double ari_oracle(const Clustering& gt, const Clustering& cand);

// Mean F1 family by explicit all-pairs best matching.
double naive_mean_f1(const Clustering& gt, const Clustering& cand, MatchVariant variant,
                     ContributionMode mode);

// Omega / Soft Omega by direct per-pair recomputation.
double naive_omega(const Clustering& gt, const Clustering& cand, bool soft);

// NMI (max-normalized, bits) from the explicit contingency table;
// partitions only.
double nmi_oracle(const Clustering& gt, const Clustering& cand);

}  // namespace clueval::oracle
