#pragma once

#include <string>
#include <vector>

#include "kirchhoff/multigraph.hpp"

namespace kirchhoff {

struct CliResult {
  std::string output;  // rendered report (JSON by default, table on request)
  int exit_code = 0;   // 0 ok/verified, 1 verification failure, 2 usage error
};

// Runs one CLI invocation; args exclude argv[0].  Never throws: errors become
// exit code 2 with a diagnostic in `output`.
CliResult run_cli(const std::vector<std::string>& args);

// Graph descriptor parsing, shared by CLI and tests:
//   "Kn:5"       complete graph
//   "Kmn:2,3"    complete bipartite
//   "file:PATH"  edge-list file: first line "vertices N", then one "u v" per line
MultiGraph parse_graph_descriptor(const std::string& descriptor);

}  // namespace kirchhoff
