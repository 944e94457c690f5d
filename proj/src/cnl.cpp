#include "clueval/cnl.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

namespace clueval {

Clustering parse_cnl(std::istream& in, const CnlOptions& opts) {
    Clustering out;
    std::string line;
    std::size_t line_no = 0;
    std::unordered_set<NodeId> seen_in_line;
    std::unordered_set<NodeId> universe;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos || line[pos] == opts.comment_prefix) continue;

        Cluster cluster;
        seen_in_line.clear();
        const char* cur = line.data() + pos;
        const char* end = line.data() + line.size();
        while (cur != end) {
            if (*cur == ' ' || *cur == '\t') {
                ++cur;
                continue;
            }
            NodeId id = 0;
            auto [next, ec] = std::from_chars(cur, end, id);
            if (ec != std::errc{} || (next != end && *next != ' ' && *next != '\t')) {
                throw parse_error("invalid node id token at line " + std::to_string(line_no), line_no);
            }
            if (!seen_in_line.insert(id).second) {
                throw parse_error("duplicate node id " + std::to_string(id) + " at line " +
                                      std::to_string(line_no),
                                  line_no);
            }
            cluster.raw_members.push_back(id);
            cur = next;
        }
        universe.insert(cluster.raw_members.begin(), cluster.raw_members.end());
        out.clusters.push_back(std::move(cluster));
    }
    if (out.clusters.empty()) throw parse_error("empty clustering", line_no);

    out.universe.assign(universe.begin(), universe.end());
    std::sort(out.universe.begin(), out.universe.end());

    std::unordered_map<NodeId, DenseId> dense;
    dense.reserve(out.universe.size());
    for (DenseId i = 0; i < out.universe.size(); ++i) dense.emplace(out.universe[i], i);
    for (auto& cluster : out.clusters) {
        cluster.members.reserve(cluster.raw_members.size());
        for (NodeId id : cluster.raw_members) cluster.members.push_back(dense.at(id));
        std::sort(cluster.members.begin(), cluster.members.end());
    }
    return out;
}

Clustering parse_cnl_file(const std::string& path, const CnlOptions& opts) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path, 0);
    return parse_cnl(in, opts);
}

void serialize_cnl(const Clustering& c, std::ostream& out) {
    for (const auto& cluster : c.clusters) {
        for (std::size_t i = 0; i < cluster.raw_members.size(); ++i) {
            if (i) out << ' ';
            out << cluster.raw_members[i];
        }
        out << '\n';
    }
}

}  // namespace clueval
