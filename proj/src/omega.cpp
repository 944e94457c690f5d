#include "clueval/omega.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace clueval {

namespace {

std::uint32_t mutual_count(std::span<const ClusterId> a, std::span<const ClusterId> b) {
    std::uint32_t n = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

void bump(std::vector<std::uint64_t>& ranked, std::uint32_t j) {
    if (j >= ranked.size()) ranked.resize(j + 1, 0);
    ++ranked[j];
}

struct RowResult {
    std::vector<std::uint64_t> ranked_gt;
    std::vector<std::uint64_t> ranked_cand;
};

void merge_counts(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
    if (from.size() > into.size()) into.resize(from.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

}  // namespace

PairProfile pair_profile(const NodeIndex& gt, const NodeIndex& cand, bool soft, unsigned workers) {
    if (gt.node_count != cand.node_count)
        throw universe_mismatch("pair_profile requires aligned universes",
                                gt.node_count, cand.node_count);
    const std::uint32_t n = gt.node_count;
    if (n < 2) throw degenerate_input("degenerate input: fewer than two nodes");

    PairProfile profile;
    profile.total_pairs = std::uint64_t(n) * (n - 1) / 2;
    profile.ranked_gt.assign(gt.cluster_count, 0);
    profile.ranked_cand.assign(cand.cluster_count, 0);

    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, n);

    // Work is handed out in fixed blocks of outer nodes; each block is owned
    // by exactly one worker and its agreement sum is accumulated in ascending
    // pair order, then blocks are reduced in block order. The result is
    // bit-identical for any worker count.
    constexpr std::uint32_t kBlock = 256;
    const std::uint32_t block_count = (n + kBlock - 1) / kBlock;
    std::vector<double> block_agreed(block_count, 0.0);
    std::vector<RowResult> partial(workers);
    std::atomic<std::uint32_t> next_block{0};

    auto work = [&](unsigned w) {
        auto& local = partial[w];
        for (;;) {
            const std::uint32_t b = next_block.fetch_add(1, std::memory_order_relaxed);
            if (b >= block_count) break;
            const std::uint32_t row_end = std::min(n, (b + 1) * kBlock);
            double agreed = 0.0;
            for (std::uint32_t i = b * kBlock; i < row_end; ++i) {
                const auto gi = gt.of(i);
                const auto ci = cand.of(i);
                for (std::uint32_t j = i + 1; j < n; ++j) {
                    const std::uint32_t gn = mutual_count(gi, gt.of(j));
                    const std::uint32_t cn = mutual_count(ci, cand.of(j));
                    if (gn == cn) {
                        agreed += 1.0;
                    } else if (soft && gn != 0 && cn != 0) {
                        agreed += double(std::min(gn, cn)) / double(std::max(gn, cn));
                    }
                    bump(local.ranked_gt, gn);
                    bump(local.ranked_cand, cn);
                }
            }
            block_agreed[b] = agreed;
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }

    for (std::uint32_t b = 0; b < block_count; ++b) profile.agreed += block_agreed[b];
    for (auto& local : partial) {
        merge_counts(profile.ranked_gt, local.ranked_gt);
        merge_counts(profile.ranked_cand, local.ranked_cand);
    }
    return profile;
}

namespace {

OmegaScore score_from(double observed, double expected) {
    OmegaScore s;
    s.observed = observed;
    s.expected = expected;
    if (expected >= 1.0 - 1e-12) {
        if (observed >= 1.0 - 1e-12) {
            s.value = 1.0;
            return s;
        }
        throw degenerate_input("undefined omega: expected agreement saturates at 1");
    }
    s.value = (observed - expected) / (1.0 - expected);
    return s;
}

OmegaScore omega_impl(const Clustering& gt, const Clustering& cand, bool soft, unsigned workers) {
    const NodeIndex gi = build_node_index(gt);
    const NodeIndex ci = build_node_index(cand);
    const PairProfile p = pair_profile(gi, ci, soft, workers);
    const double pairs = double(p.total_pairs);

    const double observed = p.agreed / pairs;
    double raw = 0.0;
    const std::size_t shorter = std::min(p.ranked_gt.size(), p.ranked_cand.size());
    for (std::size_t j = 0; j < shorter; ++j)
        raw += double(p.ranked_gt[j]) * double(p.ranked_cand[j]);
    if (soft) {
        // Soft expected-agreement correction: the tail of the longer ranked
        // vector is added unweighted.
        const auto& longer = p.ranked_gt.size() > shorter ? p.ranked_gt : p.ranked_cand;
        for (std::size_t j = shorter; j < longer.size(); ++j) raw += double(longer[j]);
    }
    const double expected = raw / (pairs * pairs);
    return score_from(observed, expected);
}

}  // namespace

OmegaScore omega(const Clustering& gt, const Clustering& cand, unsigned workers) {
    return omega_impl(gt, cand, false, workers);
}

OmegaScore omega_soft(const Clustering& gt, const Clustering& cand, unsigned workers) {
    return omega_impl(gt, cand, true, workers);
}

}  // namespace clueval
