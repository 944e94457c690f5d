#pragma once

#include <cstdint>
#include <random>
#include <unordered_set>

#include "clueval/nmi.hpp"

namespace clueval {

struct GnmiConfig {
    double rerr = 0.01;        // admissible error of the estimate
    double rrisk = 0.01;       // complement of the confidence level
    std::uint64_t seed = 1;
    std::uint32_t max_wall_events = 100;  // hard budget, as a multiple of evsmax

    void validate() const {
        if (!(rerr > 0.0 && rerr < 1.0)) throw std::invalid_argument("rerr must be in (0, 1)");
        if (!(rrisk > 0.0 && rrisk < 1.0)) throw std::invalid_argument("rrisk must be in (0, 1)");
        if (max_wall_events == 0) throw std::invalid_argument("max_wall_events must be positive");
    }
};

struct GnmiResult {
    double value = 0.0;
    bool converged = false;
    std::uint64_t events = 0;     // successful samples drawn
    std::uint64_t evsmax = 0;     // dynamic event budget
    double half_width = 0.0;      // confidence half-width at the stop point
};

// Dynamic budget of stochastic events: the smaller total membership, but
// never below the floor demanded by the admissible error and risk.
std::uint64_t max_events(const Clustering& gt, const Clustering& cand, const GnmiConfig& cfg);

// Deterministic pseudo-random source for the sampling process.
class SampleRng {
  public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}
    std::uint32_t below(std::uint32_t bound) {
        return std::uint32_t((unsigned __int128)(engine_()) * bound >> 64);
    }
    bool coin() { return engine_() >> 63; }

  private:
    std::mt19937_64 engine_;
};

// Accumulation state of the sampling process. Each walk contributes its
// uniformly drawn start pair to the joint count table; the pairs touched
// afterwards only steer the walk: apply() reports whether a pair is new
// for the current walk, and a walk stops at the first repeat. Counting
// later steps would overweight regions whose walks survive longer, which
// measurably breaks the NMI agreement on non-overlapping inputs.
class SampleMixer {
  public:
    SampleMixer(const Clustering& gt, const NodeIndex& gt_index, const Clustering& cand,
                const NodeIndex& cand_index)
        : gt_(gt), gt_index_(gt_index), cand_(cand), cand_index_(cand_index) {}

    void begin_walk() { walk_seen_.clear(); }
    bool apply(ClusterId g, ClusterId c) {
        const std::uint64_t key = JointOverlapTable::key(g, c);
        if (walk_seen_.empty()) table_.entries[key] += 1.0;
        return walk_seen_.insert(key).second;
    }

    const Clustering& gt() const { return gt_; }
    const Clustering& cand() const { return cand_; }
    const NodeIndex& gt_index() const { return gt_index_; }
    const NodeIndex& cand_index() const { return cand_index_; }

    // Takes the accumulated table, leaving the mixer empty for the next batch.
    JointOverlapTable drain() {
        JointOverlapTable out = std::move(table_);
        table_ = {};
        return out;
    }

  private:
    const Clustering& gt_;
    const NodeIndex& gt_index_;
    const Clustering& cand_;
    const NodeIndex& cand_index_;
    JointOverlapTable table_;
    std::unordered_set<std::uint64_t> walk_seen_;
};

// One adaptive sampling walk: starts at a uniform random node, repeatedly
// hops to a random member of one of the current pair's two clusters, and
// weights every step inversely to the geometric mean of the cluster sizes.
// Returns the average step importance.
double try_get_sample(std::uint32_t node_count, double rrisk, SampleMixer& mixer, SampleRng& rng);

// Stochastic GNMI: samples events until the budget is reached and the
// confidence half-width of the running estimate drops below rerr, or the
// hard budget is exhausted (flagged as non-converged).
GnmiResult gnmi(const Clustering& gt, const Clustering& cand, const GnmiConfig& cfg = {},
                unsigned workers = 1);

}  // namespace clueval
