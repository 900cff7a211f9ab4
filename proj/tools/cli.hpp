#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kBadInput = 2;
inline constexpr int kMismatch = 3;

/// "n m" header, then m lines "u v"; '#' lines are comments. Duplicate
/// edges and a wrong edge count are InputErrors.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdim::cli
