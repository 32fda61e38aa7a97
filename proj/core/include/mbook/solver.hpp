#ifndef MBOOK_SOLVER_HPP
#define MBOOK_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mbook/coloring.hpp"
#include "mbook/graph.hpp"
#include "mbook/layout.hpp"

namespace mbook {

enum class BoundReason { kMaxDegree, kChromaticIndex, kRegularNonbipartite };

std::string_view bound_reason_name(BoundReason reason);

struct EdgeChromatic {
  // Empty when the budget ran out before the value was settled.
  std::optional<int> value;
  // Proper edge coloring with `value` colors, parallel to g.edges().
  std::vector<int> coloring;
  std::uint64_t nodes = 0;
};

// Exact chromatic index by running the coloring kernel on the line graph
// for k = Delta, Delta + 1, ...
EdgeChromatic edge_chromatic_exact(const Graph& g, std::uint64_t node_budget = 2'000'000);

// Lower bound on the matching book thickness with re-checkable evidence.
struct BoundCertificate {
  int value = 0;
  // Every reason whose bound equals value.
  std::vector<BoundReason> reasons;

  int max_degree = 0;
  std::optional<int> chromatic_index;
  std::vector<int> edge_coloring;
  std::uint64_t chromatic_nodes = 0;
  std::optional<int> regular_degree;
  std::optional<OddCycle> odd_cycle;

  bool has_reason(BoundReason r) const;
};

struct LowerBoundOptions {
  // Skip the chromatic-index search above this many edges.
  std::size_t max_chromatic_edges = 80;
  std::uint64_t chromatic_node_budget = 2'000'000;
};

BoundCertificate lower_bound(const Graph& g, const LowerBoundOptions& opts = {});

// Recomputes every piece of evidence against g. The chromatic-index claim
// is re-proved by rerunning the exhaustive search at value - 1 colors.
bool recheck_certificate(const Graph& g, const BoundCertificate& cert);

// Items are the edges of g; two edges conflict when they share an endpoint
// or interleave under the spine. Proper k-colorings are exactly the
// k-page matching book embeddings on this spine.
ConflictGraph build_conflict_graph(const Graph& g, std::span<const int> spine);

struct PageAssignment {
  SearchStatus status = SearchStatus::kUnknown;
  std::vector<int> pages;  // compacted, filled when status == kFound
  std::uint64_t nodes = 0;
};

PageAssignment feasible_pages(const Graph& g, std::span<const int> spine, int k,
                              const SearchBudget& budget = SearchBudget::unlimited());

struct SolveOptions {
  // Give up above this many pages (0: edge count).
  int max_pages = 0;
  // First page count to try; defaults to the lower bound.
  std::optional<int> start_pages;
  std::chrono::milliseconds timeout{600'000};
  std::chrono::milliseconds per_order_timeout{1'000};
  int jobs = 1;
  // Enumerate spines up to rotation and reflection only.
  bool use_symmetry = true;
  LowerBoundOptions bound;
};

struct SolveStats {
  std::uint64_t orders_explored = 0;
  std::uint64_t infeasible_orders = 0;
  std::uint64_t unknown_orders = 0;
  std::uint64_t coloring_nodes = 0;
  double seconds = 0.0;
};

struct SolveResult {
  int value = 0;
  BookEmbedding witness;
  // True iff no spine order admits value - 1 pages: either value - 1 is
  // below the certified lower bound, or every enumerated order was proven
  // infeasible at every page count from the start up to value - 1.
  bool exhaustive = false;
  bool timed_out = false;
  BoundCertificate bound;
  SolveStats stats;
};

// Throws GraphError on disconnected input.
SolveResult exact_mbt(const Graph& g, const SolveOptions& opts = {});

// Size of the index space enumerated by exact_mbt for n vertices.
std::uint64_t spine_order_count(int n, bool use_symmetry);

// The index-th order of the enumeration (factoradic over positions 1..n-1
// when symmetric, over all positions otherwise). Returns false if the
// index is skipped by the reflection rule spine[1] < spine[n-1].
bool spine_order_at(std::uint64_t index, int n, bool use_symmetry, std::vector<int>& spine);

}  // namespace mbook

#endif  // MBOOK_SOLVER_HPP
