#ifndef MBOOK_COLORING_HPP
#define MBOOK_COLORING_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace mbook {

// Adjacency-list graph whose vertices are the items being colored (edges of
// the input graph, for page assignment and edge coloring).
struct ConflictGraph {
  std::vector<std::vector<int>> adjacency;

  int size() const { return static_cast<int>(adjacency.size()); }
  void add_conflict(int a, int b);
};

struct SearchBudget {
  std::uint64_t max_nodes = UINT64_MAX;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  const std::atomic<bool>* cancel = nullptr;

  static SearchBudget unlimited() { return {}; }
  static SearchBudget for_duration(std::chrono::steady_clock::duration d);
};

enum class SearchStatus { kFound, kInfeasible, kUnknown };

struct ColoringResult {
  SearchStatus status = SearchStatus::kUnknown;
  std::vector<int> colors;  // filled when status == kFound
  std::uint64_t nodes = 0;
};

// Exact k-colorability by DSATUR-ordered backtracking. Ties on saturation
// go to the higher conflict degree, then the lower index. Colors are tried
// in ascending order, and a branch opens at most one previously unused
// color, so color permutations are never revisited.
ColoringResult color_with_k(const ConflictGraph& graph, int k, const SearchBudget& budget);

// Greedy DSATUR without backtracking; always succeeds.
std::vector<int> greedy_coloring(const ConflictGraph& graph);

}  // namespace mbook

#endif  // MBOOK_COLORING_HPP
