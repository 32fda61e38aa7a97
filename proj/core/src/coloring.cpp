#include "mbook/coloring.hpp"

#include <algorithm>

namespace mbook {

void ConflictGraph::add_conflict(int a, int b) {
  adjacency[a].push_back(b);
  adjacency[b].push_back(a);
}

SearchBudget SearchBudget::for_duration(std::chrono::steady_clock::duration d) {
  SearchBudget budget;
  budget.deadline = std::chrono::steady_clock::now() + d;
  return budget;
}

namespace {

class Dsatur {
 public:
  Dsatur(const ConflictGraph& graph, int k, const SearchBudget& budget)
      : graph_(graph),
        k_(k),
        budget_(budget),
        color_(graph.size(), -1),
        forbid_(static_cast<std::size_t>(graph.size()) * k, 0),
        saturation_(graph.size(), 0) {}

  ColoringResult run() {
    ColoringResult result;
    const bool found = expand(0, -1);
    result.nodes = nodes_;
    if (found) {
      result.status = SearchStatus::kFound;
      result.colors = color_;
    } else {
      result.status = aborted_ ? SearchStatus::kUnknown : SearchStatus::kInfeasible;
    }
    return result;
  }

 private:
  bool out_of_budget() {
    if (nodes_ >= budget_.max_nodes) return true;
    if (budget_.cancel && budget_.cancel->load(std::memory_order_relaxed)) return true;
    if (budget_.deadline && (nodes_ & 1023) == 0 &&
        std::chrono::steady_clock::now() >= *budget_.deadline) {
      return true;
    }
    return false;
  }

  int pick() const {
    int best = -1;
    for (int v = 0; v < graph_.size(); ++v) {
      if (color_[v] != -1) continue;
      if (best == -1 || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] &&
           graph_.adjacency[v].size() > graph_.adjacency[best].size())) {
        best = v;
      }
    }
    return best;
  }

  void assign(int v, int c) {
    color_[v] = c;
    for (int w : graph_.adjacency[v]) {
      if (forbid_[index(w, c)]++ == 0) ++saturation_[w];
    }
  }

  void unassign(int v) {
    const int c = color_[v];
    color_[v] = -1;
    for (int w : graph_.adjacency[v]) {
      if (--forbid_[index(w, c)] == 0) --saturation_[w];
    }
  }

  bool expand(int colored, int max_used) {
    ++nodes_;
    if (out_of_budget()) {
      aborted_ = true;
      return false;
    }
    if (colored == graph_.size()) return true;
    const int v = pick();
    const int limit = std::min(k_ - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if (forbid_[index(v, c)] != 0) continue;
      assign(v, c);
      if (expand(colored + 1, std::max(max_used, c))) return true;
      unassign(v);
      if (aborted_) return false;
    }
    return false;
  }

  std::size_t index(int v, int c) const {
    return static_cast<std::size_t>(v) * k_ + c;
  }

  const ConflictGraph& graph_;
  const int k_;
  const SearchBudget& budget_;
  std::vector<int> color_;
  std::vector<int> forbid_;
  std::vector<int> saturation_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

ColoringResult color_with_k(const ConflictGraph& graph, int k, const SearchBudget& budget) {
  if (graph.size() == 0) return {SearchStatus::kFound, {}, 0};
  if (k <= 0) return {SearchStatus::kInfeasible, {}, 0};
  return Dsatur(graph, k, budget).run();
}

std::vector<int> greedy_coloring(const ConflictGraph& graph) {
  const int n = graph.size();
  std::vector<int> color(n, -1);
  std::vector<std::vector<char>> seen(n);
  std::vector<int> saturation(n, 0);
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (color[u] != -1) continue;
      if (v == -1 || saturation[u] > saturation[v] ||
          (saturation[u] == saturation[v] &&
           graph.adjacency[u].size() > graph.adjacency[v].size())) {
        v = u;
      }
    }
    int c = 0;
    while (c < static_cast<int>(seen[v].size()) && seen[v][c]) ++c;
    color[v] = c;
    for (int w : graph.adjacency[v]) {
      if (static_cast<int>(seen[w].size()) <= c) seen[w].resize(c + 1, 0);
      if (!seen[w][c]) {
        seen[w][c] = 1;
        ++saturation[w];
      }
    }
  }
  return color;
}

}  // namespace mbook
