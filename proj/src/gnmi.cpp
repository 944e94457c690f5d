#include "clueval/gnmi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <thread>
#include <utility>

namespace clueval {

namespace {

// Inverse standard normal CDF (Acklam's rational approximation, ~1e-9).
double probit(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) return -probit(1.0 - p);
    const double q = p - 0.5, r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

constexpr std::uint64_t kBatchEvents = 256;

struct RunningStats {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void push(double x) {
        ++n;
        const double d = x - mean;
        mean += d / double(n);
        m2 += d * (x - mean);
    }
    double stddev() const { return n > 1 ? std::sqrt(m2 / double(n - 1)) : 0.0; }
};

void merge_into(JointOverlapTable& global, const JointOverlapTable& batch) {
    for (const auto& [key, mass] : batch.entries) global.entries[key] += mass;
}

void finalize_marginals(JointOverlapTable& table, std::uint32_t gt_clusters,
                        std::uint32_t cand_clusters) {
    table.gt_marginals.assign(gt_clusters, 0.0);
    table.cand_marginals.assign(cand_clusters, 0.0);
    table.total_mass = 0.0;
    for (const auto& [key, mass] : table.entries) {
        table.gt_marginals[key >> 32] += mass;
        table.cand_marginals[key & 0xffffffffu] += mass;
        table.total_mass += mass;
    }
}

// NMI of a sampled joint table with the first-order (Miller-Madow) bias
// correction. The plug-in estimate overstates MI by roughly
// (cells - rows - cols + 1) / (2 events ln 2) bits, which dominates the
// error when many cells are estimated from few events.
double sampled_nmi(const JointOverlapTable& table) {
    const double total = table.total_mass;
    double hr = 0.0, hc = 0.0, hj = 0.0;
    std::size_t rows = 0, cols = 0;
    for (double mass : table.gt_marginals)
        if (mass > 0.0) { hr -= mass / total * std::log2(mass / total); ++rows; }
    for (double mass : table.cand_marginals)
        if (mass > 0.0) { hc -= mass / total * std::log2(mass / total); ++cols; }
    for (const auto& [key, mass] : table.entries)
        if (mass > 0.0) hj -= mass / total * std::log2(mass / total);
    const double cells = double(table.entries.size());
    const double scale = 1.0 / (2.0 * total * std::numbers::ln2);
    const double mi = hr + hc - hj - (cells - double(rows) - double(cols) + 1.0) * scale;
    const double denom =
        std::max(hr + (double(rows) - 1.0) * scale, hc + (double(cols) - 1.0) * scale);
    if (denom <= 0.0)
        throw degenerate_input("degenerate clustering (single cluster): NMI undefined");
    return std::clamp(mi / denom, 0.0, 1.0);
}

}  // namespace

std::uint64_t max_events(const Clustering& gt, const Clustering& cand, const GnmiConfig& cfg) {
    cfg.validate();
    const double memberships = double(std::min(gt.total_membership(), cand.total_membership()));
    const double floor_events = 1.0 / (cfg.rerr * std::sqrt(cfg.rrisk));
    return std::uint64_t(std::ceil(std::max(memberships, floor_events)));
}

double try_get_sample(std::uint32_t node_count, double rrisk, SampleMixer& mixer, SampleRng& rng) {
    const auto& gt = mixer.gt();
    const auto& cand = mixer.cand();
    const auto& gti = mixer.gt_index();
    const auto& ci = mixer.cand_index();

    auto cls_pair = [&](DenseId nd) {
        const auto gs = gti.of(nd);
        const auto cs = ci.of(nd);
        const ClusterId g = gs.size() == 1 ? gs[0] : gs[rng.below(std::uint32_t(gs.size()))];
        const ClusterId c = cs.size() == 1 ? cs[0] : cs[rng.below(std::uint32_t(cs.size()))];
        return std::pair<ClusterId, ClusterId>(g, c);
    };
    auto step_weight = [&](ClusterId g, ClusterId c) {
        const double gz = double(gt.clusters[g].size());
        const double cz = double(cand.clusters[c].size());
        return 1.0 / std::max(std::sqrt(gz * cz), 1.0);
    };

    mixer.begin_walk();
    DenseId node = rng.below(node_count);
    std::pair<ClusterId, ClusterId> pair = cls_pair(node);
    const double attempts =
        double(gt.clusters[pair.first].size() + cand.clusters[pair.second].size()) / (2.0 * rrisk);
    double importance = step_weight(pair.first, pair.second);
    std::uint64_t steps_done = 1;

    while (mixer.apply(pair.first, pair.second) && double(++steps_done) <= attempts) {
        const auto& members =
            rng.coin() ? gt.clusters[pair.first].members : cand.clusters[pair.second].members;
        node = members[rng.below(std::uint32_t(members.size()))];
        pair = cls_pair(node);
        importance += step_weight(pair.first, pair.second);
    }
    return importance / double(steps_done);
}

GnmiResult gnmi(const Clustering& gt, const Clustering& cand, const GnmiConfig& cfg,
                unsigned workers) {
    cfg.validate();
    if (gt.cluster_count() < 2 && cand.cluster_count() < 2)
        throw degenerate_input("degenerate clustering (single cluster): NMI undefined");

    const NodeIndex gt_index = build_node_index(gt);
    const NodeIndex cand_index = build_node_index(cand);
    if (gt_index.node_count != cand_index.node_count)
        throw universe_mismatch("gnmi requires aligned universes", gt_index.node_count,
                                cand_index.node_count);

    GnmiResult result;
    result.evsmax = max_events(gt, cand, cfg);
    const std::uint64_t hard_budget = result.evsmax * cfg.max_wall_events;
    const double z = probit(1.0 - cfg.rrisk / 2.0);

    if (workers == 0) workers = 1;
    std::vector<SampleRng> rngs;
    std::vector<SampleMixer> mixers;
    rngs.reserve(workers);
    mixers.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        rngs.emplace_back(cfg.seed + w);
        mixers.emplace_back(gt, gt_index, cand, cand_index);
    }
    const std::uint64_t quota = (kBatchEvents + workers - 1) / workers;

    JointOverlapTable global;
    RunningStats batch_stats;
    result.half_width = std::numeric_limits<double>::infinity();
    // Corrected running estimates per batch, for the bias drift gate: with a
    // ~1/events residual bias, the change from half the events to the full
    // count equals the remaining bias.
    std::vector<std::pair<std::uint64_t, double>> history;
    double latest = 0.0;
    bool latest_valid = false;

    auto run_quota = [&](unsigned w) {
        for (std::uint64_t e = 0; e < quota; ++e)
            try_get_sample(gt_index.node_count, cfg.rrisk, mixers[w], rngs[w]);
    };

    while (result.events < hard_budget) {
        if (workers == 1) {
            run_quota(0);
        } else {
            std::vector<std::thread> threads;
            threads.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run_quota, w);
            for (auto& t : threads) t.join();
        }
        result.events += quota * workers;

        // Merge the batch in worker order, keeping results reproducible for
        // a fixed (seed, workers) pair.
        JointOverlapTable batch;
        for (unsigned w = 0; w < workers; ++w) merge_into(batch, mixers[w].drain());
        finalize_marginals(batch, gt.cluster_count(), cand.cluster_count());
        if (batch.total_mass > 0.0) {
            try {
                batch_stats.push(table_nmi(batch, NmiNorm::Max));
            } catch (const degenerate_input&) {
                // Batch too sparse to span two clusters on a side; skip it.
            }
        }
        merge_into(global, batch);
        finalize_marginals(global, gt.cluster_count(), cand.cluster_count());
        try {
            latest = sampled_nmi(global);
            latest_valid = true;
            history.emplace_back(result.events, latest);
        } catch (const degenerate_input&) {
            latest_valid = false;
        }

        if (result.events >= result.evsmax && batch_stats.n > 1 && latest_valid) {
            result.half_width = z * batch_stats.stddev() / std::sqrt(double(batch_stats.n));
            double drift = std::numeric_limits<double>::infinity();
            for (auto it = history.rbegin(); it != history.rend(); ++it) {
                if (it->first * 2 <= result.events) {
                    drift = std::abs(latest - it->second);
                    break;
                }
            }
            if (result.half_width <= cfg.rerr && drift <= 0.5 * cfg.rerr) {
                result.converged = true;
                break;
            }
        }
    }

    if (!latest_valid) {
        result.converged = false;
        return result;
    }
    result.value = latest;
    return result;
}

}  // namespace clueval
