#include "clueval/runner.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <tuple>

#include <json.hpp>

#include "clueval/cnl.hpp"
#include "clueval/meanf1.hpp"
#include "clueval/nmi.hpp"
#include "clueval/omega.hpp"

namespace clueval {

const char* metric_name(Metric m) {
    switch (m) {
        case Metric::Omega: return "omega";
        case Metric::OmegaSoft: return "omega-soft";
        case Metric::F1a: return "f1a";
        case Metric::F1h: return "f1h";
        case Metric::F1p: return "f1p";
        case Metric::Nmi: return "nmi";
        case Metric::Gnmi: return "gnmi";
    }
    return "?";
}

Metric metric_from_name(const std::string& name) {
    for (Metric m : {Metric::Omega, Metric::OmegaSoft, Metric::F1a, Metric::F1h, Metric::F1p,
                     Metric::Nmi, Metric::Gnmi}) {
        if (name == metric_name(m)) return m;
    }
    throw std::invalid_argument("unknown metric: " + name);
}

std::vector<MetricResult> evaluate(const Clustering& gt, const Clustering& cand,
                                   const RunSpec& spec) {
    std::vector<MetricResult> results;
    results.reserve(spec.metrics.size());
    for (Metric m : spec.metrics) {
        MetricResult r;
        r.name = metric_name(m);
        const auto start = std::chrono::steady_clock::now();
        switch (m) {
            case Metric::Omega: r.value = omega(gt, cand, spec.workers).value; break;
            case Metric::OmegaSoft: r.value = omega_soft(gt, cand, spec.workers).value; break;
            case Metric::F1a: r.value = mean_f1(gt, cand, MatchVariant::F1a, spec.mode); break;
            case Metric::F1h: r.value = mean_f1(gt, cand, MatchVariant::F1h, spec.mode); break;
            case Metric::F1p: r.value = mean_f1(gt, cand, MatchVariant::F1p, spec.mode); break;
            case Metric::Nmi: r.value = nmi_exact(gt, cand); break;
            case Metric::Gnmi: {
                const GnmiResult g = gnmi(gt, cand, spec.gnmi, spec.workers);
                r.value = g.value;
                r.stochastic = true;
                r.converged = g.converged;
                r.events = g.events;
                r.seed = spec.gnmi.seed;
                break;
            }
        }
        r.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        results.push_back(std::move(r));
    }
    return results;
}

namespace {

void print_plain(const std::vector<MetricResult>& results, std::ostream& out) {
    char buf[64];
    for (const auto& r : results) {
        std::snprintf(buf, sizeof buf, "%.6f", r.value);
        out << r.name << '\t' << buf << '\n';
    }
}

void print_json(const std::vector<MetricResult>& results, std::ostream& out) {
    nlohmann::json doc = nlohmann::json::object();
    for (const auto& r : results) {
        doc[r.name] = {{"value", r.value},
                       {"converged", r.converged},
                       {"events", r.events},
                       {"seed", r.seed},
                       {"elapsed_ms", r.elapsed_ms}};
    }
    out << doc.dump(2) << '\n';
}

}  // namespace

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        Clustering gt = parse_cnl_file(spec.gt_path);
        Clustering cand = parse_cnl_file(spec.cand_path);
        AlignStats stats;
        std::tie(gt, cand) = align_universes(std::move(gt), std::move(cand), spec.universe, &stats);
        if (stats.dropped_from_first + stats.dropped_from_second > 0) {
            err << "warning: dropped " << stats.dropped_from_first << " + "
                << stats.dropped_from_second << " one-sided node(s), " << stats.dropped_clusters
                << " emptied cluster(s)\n";
        }
        const auto results = evaluate(gt, cand, spec);
        if (spec.output == OutputFormat::Json)
            print_json(results, out);
        else
            print_plain(results, out);
        for (const auto& r : results) {
            if (r.stochastic && !r.converged)
                err << "warning: " << r.name << " did not converge after " << r.events
                    << " events\n";
        }
        return kExitOk;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const universe_mismatch& e) {
        err << e.what() << '\n';
        return kExitUniverseMismatch;
    } catch (const degenerate_input& e) {
        err << e.what() << '\n';
        return kExitDegenerateInput;
    }
}

}  // namespace clueval
