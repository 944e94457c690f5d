#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "clueval/cnl.hpp"
#include "clueval/meanf1.hpp"
#include "clueval/synthetic.hpp"
#include "oracles.hpp"

using namespace clueval;

namespace {

Clustering parse(const std::string& text) {
    std::istringstream in(text);
    return parse_cnl(in);
}

const char* kTableGt = "1 2 3\n2 3 4\n3 4 1\n4 1 2\n";
const char* kTableHigh = "1 2\n2 3\n3 4\n4 1\n";

std::vector<double> indexed_bests(const Clustering& traversed, const Clustering& target,
                                  bool prob, ContributionMode mode) {
    const NodeIndex ti = build_node_index(target);
    const NodeIndex oi = build_node_index(traversed);
    const Clustering targetw = compute_contributions(target, ti, mode);
    const Clustering traversedw = compute_contributions(traversed, oi, mode);
    return best_matches(targetw, ti, oi, traversedw, prob, mode);
}

}  // namespace

TEST_CASE("local match functions") {
    CHECK(match_f1(2, 3, 2) == doctest::Approx(0.8));
    CHECK(match_f1(4, 4, 4) == doctest::Approx(1.0));
    CHECK(match_f1(0, 3, 5) == doctest::Approx(0.0));
    CHECK(match_pprob(2, 3, 2) == doctest::Approx(2.0 / 3.0));
    CHECK(match_pprob(4, 4, 4) == doctest::Approx(1.0));
    CHECK(match_pprob(1, 2, 2) == doctest::Approx(0.25));
}

TEST_CASE("best matches of the printed example, f1 in multi-resolution mode") {
    const auto bests = indexed_bests(parse(kTableHigh), parse(kTableGt), false,
                                     ContributionMode::MultiResolution);
    REQUIRE(bests.size() == 4);
    for (double b : bests) CHECK(b == doctest::Approx(0.8));
}

TEST_CASE("best matches with pprob emit the square root of the best raw value") {
    const auto bests = indexed_bests(parse(kTableHigh), parse(kTableGt), true,
                                     ContributionMode::MultiResolution);
    for (double b : bests) CHECK(b == doctest::Approx(std::sqrt(2.0 / 3.0)));
}

TEST_CASE("identical clusterings give best match one everywhere") {
    const Clustering c = parse(kTableGt);
    for (bool prob : {false, true}) {
        for (auto mode : {ContributionMode::MultiResolution, ContributionMode::Overlapping}) {
            const auto bests = indexed_bests(c, c, prob, mode);
            for (double b : bests) CHECK(b == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("indexed best matches equal the brute-force per-cluster maxima") {
    for (std::uint64_t seed : {31u, 32u, 33u, 34u}) {
        const Clustering a = generate_synthetic(50, 7, 1.6, seed);
        const Clustering b = generate_synthetic(50, 6, 1.3, seed + 9);
        for (auto mode : {ContributionMode::MultiResolution, ContributionMode::Overlapping}) {
            for (bool prob : {false, true}) {
                const auto fast = indexed_bests(a, b, prob, mode);
                // explicit all-pairs recomputation
                const NodeIndex ai = build_node_index(a);
                const NodeIndex bi = build_node_index(b);
                const Clustering aw = compute_contributions(a, ai, mode);
                const Clustering bw = compute_contributions(b, bi, mode);
                for (ClusterId i = 0; i < aw.cluster_count(); ++i) {
                    double best = 0.0;
                    for (ClusterId j = 0; j < bw.cluster_count(); ++j) {
                        double m = 0.0;
                        for (DenseId nd : aw.clusters[i].members) {
                            const auto& other = bw.clusters[j].members;
                            if (std::binary_search(other.begin(), other.end(), nd))
                                m += matched_contribution(ai, bi, nd, mode);
                        }
                        const double w_i = aw.clusters[i].weight, w_j = bw.clusters[j].weight;
                        best = std::max(best,
                                        prob ? match_pprob(m, w_j, w_i) : match_f1(m, w_j, w_i));
                    }
                    if (prob) best = std::sqrt(best);
                    CHECK(fast[i] == doctest::Approx(best).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("mean F1 of identical clusterings is one in every variant and mode") {
    const Clustering c = parse(kTableGt);
    for (auto variant : {MatchVariant::F1a, MatchVariant::F1h, MatchVariant::F1p}) {
        for (auto mode : {ContributionMode::MultiResolution, ContributionMode::Overlapping}) {
            CHECK(mean_f1(c, c, variant, mode) == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("mean F1 of the printed example") {
    const Clustering gt = parse(kTableGt);
    const Clustering high = parse(kTableHigh);
    const auto mode = ContributionMode::MultiResolution;
    CHECK(mean_f1(gt, high, MatchVariant::F1a, mode) == doctest::Approx(0.8));
    CHECK(mean_f1(gt, high, MatchVariant::F1h, mode) == doctest::Approx(0.8));
    CHECK(mean_f1(gt, high, MatchVariant::F1p, mode) == doctest::Approx(std::sqrt(2.0 / 3.0)));
}

TEST_CASE("indexed mean F1 equals the naive oracle") {
    for (std::uint64_t seed : {41u, 42u, 43u, 44u, 45u}) {
        const std::uint32_t n = 20 + std::uint32_t(seed % 60);
        const Clustering a = generate_synthetic(n, 5 + seed % 4, 1.0 + (seed % 10) / 10.0, seed);
        const Clustering b =
            generate_synthetic(n, 4 + seed % 5, 1.0 + (seed % 7) / 8.0, seed + 77);
        for (auto variant : {MatchVariant::F1a, MatchVariant::F1h, MatchVariant::F1p}) {
            for (auto mode : {ContributionMode::MultiResolution, ContributionMode::Overlapping}) {
                const double fast = mean_f1(a, b, variant, mode);
                const double naive = oracle::naive_mean_f1(a, b, variant, mode);
                CHECK(fast == doctest::Approx(naive).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("harmonic variant never exceeds the arithmetic variant") {
    for (std::uint64_t seed : {51u, 52u, 53u}) {
        const Clustering a = generate_synthetic(40, 6, 1.5, seed);
        const Clustering b = generate_synthetic(40, 8, 1.2, seed + 5);
        for (auto mode : {ContributionMode::MultiResolution, ContributionMode::Overlapping}) {
            const double f1a = mean_f1(a, b, MatchVariant::F1a, mode);
            const double f1h = mean_f1(a, b, MatchVariant::F1h, mode);
            CHECK(f1h <= f1a + 1e-12);
        }
    }
}

TEST_CASE("mean F1 is symmetric in its arguments") {
    for (std::uint64_t seed : {61u, 62u}) {
        const Clustering a = generate_synthetic(30, 5, 1.4, seed);
        const Clustering b = generate_synthetic(30, 6, 1.1, seed + 11);
        for (auto variant : {MatchVariant::F1a, MatchVariant::F1h, MatchVariant::F1p}) {
            const auto mode = ContributionMode::Overlapping;
            CHECK(mean_f1(a, b, variant, mode) ==
                  doctest::Approx(mean_f1(b, a, variant, mode)).epsilon(1e-12));
        }
    }
}

TEST_CASE("all-subsets candidate keeps the ground-truth side at one") {
    // ground truth: balanced 2-partition of 8 nodes; candidate: all 255 subsets
    Clustering gt;
    gt.universe = {0, 1, 2, 3, 4, 5, 6, 7};
    gt.clusters.resize(2);
    for (DenseId nd = 0; nd < 8; ++nd) {
        gt.clusters[nd / 4].members.push_back(nd);
        gt.clusters[nd / 4].raw_members.push_back(nd);
    }
    Clustering cand;
    cand.universe = gt.universe;
    for (std::uint32_t mask = 1; mask < 256; ++mask) {
        Cluster c;
        for (DenseId nd = 0; nd < 8; ++nd)
            if (mask & (1u << nd)) {
                c.members.push_back(nd);
                c.raw_members.push_back(nd);
            }
        cand.clusters.push_back(std::move(c));
    }
    const auto mode = ContributionMode::MultiResolution;
    const double f1a = mean_f1(gt, cand, MatchVariant::F1a, mode);
    const double f1h = mean_f1(gt, cand, MatchVariant::F1h, mode);
    // F_{C',C} = 1 (each category has its exact subset), so F1a exceeds 1/2
    CHECK(f1a > 0.5);
    const double f_cand = 2.0 * f1a - 1.0;
    CHECK(f1h <= 2.0 * f_cand + 1e-12);
    CHECK(f1h <= f1a + 1e-12);
}
