#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "clueval/clustering.hpp"
#include "clueval/gnmi.hpp"

namespace clueval {

enum class Metric { Omega, OmegaSoft, F1a, F1h, F1p, Nmi, Gnmi };

const char* metric_name(Metric m);
// Parses a metric name as used on the command line ("omega", "omega-soft",
// "f1a", "f1h", "f1p", "nmi", "gnmi"); throws std::invalid_argument.
Metric metric_from_name(const std::string& name);

enum class OutputFormat { Plain, Json };

struct RunSpec {
    std::string gt_path;
    std::string cand_path;
    std::vector<Metric> metrics;
    ContributionMode mode = ContributionMode::MultiResolution;
    UniversePolicy universe = UniversePolicy::Strict;
    GnmiConfig gnmi;
    OutputFormat output = OutputFormat::Plain;
    unsigned workers = 1;
};

// Scalar score plus the evaluation metadata reported in JSON mode.
struct MetricResult {
    std::string name;
    double value = 0.0;
    bool stochastic = false;
    bool converged = true;
    std::uint64_t events = 0;
    std::uint64_t seed = 0;
    double elapsed_ms = 0.0;
};

// Exit codes of run(); GNMI non-convergence is not an error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitUniverseMismatch = 3;
inline constexpr int kExitDegenerateInput = 4;

std::vector<MetricResult> evaluate(const Clustering& gt, const Clustering& cand,
                                   const RunSpec& spec);

// Loads the two clusterings, aligns their universes, evaluates the selected
// metrics and prints the report; diagnostics go to err.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace clueval
