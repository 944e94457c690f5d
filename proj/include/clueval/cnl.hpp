#pragma once

#include <iosfwd>
#include <string>

#include "clueval/clustering.hpp"

namespace clueval {

struct CnlOptions {
    char comment_prefix = '#';
};

// Parses the clusters-per-line format: one whitespace-separated list of
// non-negative integer node ids per line; blank lines and lines starting
// with the comment prefix are skipped. Throws parse_error (with the
// 1-based line number) on malformed tokens, duplicate ids within one line,
// or an input without a single cluster.
Clustering parse_cnl(std::istream& in, const CnlOptions& opts = {});
Clustering parse_cnl_file(const std::string& path, const CnlOptions& opts = {});

// Writes one cluster per line, members in their original file order,
// separated by single spaces.
void serialize_cnl(const Clustering& c, std::ostream& out);

}  // namespace clueval
