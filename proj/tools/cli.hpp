#ifndef MBOOK_TOOLS_CLI_HPP
#define MBOOK_TOOLS_CLI_HPP

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "mbook/constructions.hpp"
#include "mbook/graph.hpp"
#include "mbook/layout.hpp"
#include "mbook/solver.hpp"

namespace mbook::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2 };

struct Embedded {
  BookEmbedding embedding;
  std::string scheme;  // a construction scheme name or "solver"
  bool repaired = false;
};

struct EmbedOptions {
  // "auto", "solver", or "construction:<scheme>".
  std::string method = "auto";
  bool solver_fallback = false;
  SolveOptions solve;
  RepairOptions repair;
};

// Thrown for requests that do not fit the graph (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Picks and runs a construction from the graph's family metadata, or the
// solver. Unresolved is returned only for K3 x C_odd without fallback.
std::variant<Embedded, Unresolved> embed_graph(const Graph& g, const EmbedOptions& opts);

// Entry point shared by the binary and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mbook::cli

#endif  // MBOOK_TOOLS_CLI_HPP
