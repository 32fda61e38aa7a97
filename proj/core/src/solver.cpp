#include "mbook/solver.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

namespace mbook {

std::string_view bound_reason_name(BoundReason reason) {
  switch (reason) {
    case BoundReason::kMaxDegree: return "max-degree";
    case BoundReason::kChromaticIndex: return "chromatic-index";
    case BoundReason::kRegularNonbipartite: return "regular-nonbipartite";
  }
  return "unknown";
}

namespace {

ConflictGraph line_graph(const Graph& g) {
  ConflictGraph lg;
  lg.adjacency.resize(g.edge_count());
  std::vector<std::vector<int>> incident(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    incident[g.edge(i).u].push_back(static_cast<int>(i));
    incident[g.edge(i).v].push_back(static_cast<int>(i));
  }
  for (const auto& list : incident)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) lg.add_conflict(list[a], list[b]);
  return lg;
}

bool is_proper_edge_coloring(const Graph& g, std::span<const int> coloring, int colors) {
  if (coloring.size() != g.edge_count()) return false;
  std::vector<std::vector<char>> used(g.vertex_count(), std::vector<char>(colors, 0));
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const int c = coloring[i];
    if (c < 0 || c >= colors) return false;
    const Edge& e = g.edge(i);
    if (used[e.u][c] || used[e.v][c]) return false;
    used[e.u][c] = used[e.v][c] = 1;
  }
  return true;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

bool BoundCertificate::has_reason(BoundReason r) const {
  return std::find(reasons.begin(), reasons.end(), r) != reasons.end();
}

EdgeChromatic edge_chromatic_exact(const Graph& g, std::uint64_t node_budget) {
  EdgeChromatic out;
  if (g.edge_count() == 0) {
    out.value = 0;
    return out;
  }
  const ConflictGraph lg = line_graph(g);
  SearchBudget budget;
  budget.max_nodes = node_budget;
  for (int k = max_degree(g);; ++k) {
    ColoringResult r = color_with_k(lg, k, budget);
    out.nodes += r.nodes;
    if (r.status == SearchStatus::kUnknown) return out;
    if (r.status == SearchStatus::kFound) {
      out.value = k;
      out.coloring = std::move(r.colors);
      return out;
    }
  }
}

BoundCertificate lower_bound(const Graph& g, const LowerBoundOptions& opts) {
  BoundCertificate cert;
  cert.max_degree = max_degree(g);
  std::vector<std::pair<BoundReason, int>> candidates{
      {BoundReason::kMaxDegree, cert.max_degree}};

  if (g.edge_count() <= opts.max_chromatic_edges) {
    EdgeChromatic chi = edge_chromatic_exact(g, opts.chromatic_node_budget);
    cert.chromatic_nodes = chi.nodes;
    if (chi.value) {
      cert.chromatic_index = chi.value;
      cert.edge_coloring = std::move(chi.coloring);
      candidates.emplace_back(BoundReason::kChromaticIndex, *chi.value);
    }
  }

  // A regular graph that is not bipartite cannot be dispersable.
  if (auto degree = is_regular(g); degree && g.edge_count() > 0) {
    const Bipartition parts = bipartition(g);
    if (const auto* odd = std::get_if<OddCycle>(&parts)) {
      cert.regular_degree = degree;
      cert.odd_cycle = *odd;
      candidates.emplace_back(BoundReason::kRegularNonbipartite, *degree + 1);
    }
  }

  for (const auto& [reason, value] : candidates) cert.value = std::max(cert.value, value);
  for (const auto& [reason, value] : candidates)
    if (value == cert.value) cert.reasons.push_back(reason);
  return cert;
}

bool recheck_certificate(const Graph& g, const BoundCertificate& cert) {
  if (cert.max_degree != max_degree(g)) return false;
  int best = cert.max_degree;
  if (cert.chromatic_index) {
    const int chi = *cert.chromatic_index;
    if (!is_proper_edge_coloring(g, cert.edge_coloring, chi)) return false;
    if (chi > 0) {
      SearchBudget budget;
      budget.max_nodes = std::max<std::uint64_t>(cert.chromatic_nodes, 1) * 4 + 1024;
      if (color_with_k(line_graph(g), chi - 1, budget).status != SearchStatus::kInfeasible) {
        return false;
      }
    }
    best = std::max(best, chi);
  }
  if (cert.regular_degree) {
    if (is_regular(g) != cert.regular_degree) return false;
    if (!cert.odd_cycle || !is_odd_cycle_of(g, *cert.odd_cycle)) return false;
    best = std::max(best, *cert.regular_degree + 1);
  }
  if (best != cert.value || cert.reasons.empty()) return false;
  for (BoundReason r : cert.reasons) {
    switch (r) {
      case BoundReason::kMaxDegree:
        if (cert.max_degree != cert.value) return false;
        break;
      case BoundReason::kChromaticIndex:
        if (cert.chromatic_index != cert.value) return false;
        break;
      case BoundReason::kRegularNonbipartite:
        if (!cert.regular_degree || *cert.regular_degree + 1 != cert.value) return false;
        break;
    }
  }
  return true;
}

ConflictGraph build_conflict_graph(const Graph& g, std::span<const int> spine) {
  const std::vector<int> position = spine_positions(spine, g.vertex_count());
  const int m = static_cast<int>(g.edge_count());
  ConflictGraph cg;
  cg.adjacency.resize(m);
  for (int a = 0; a < m; ++a) {
    const Edge& e = g.edge(a);
    for (int b = a + 1; b < m; ++b) {
      const Edge& f = g.edge(b);
      const bool shared = e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
      if (shared ||
          arcs_interleave(position[e.u], position[e.v], position[f.u], position[f.v])) {
        cg.add_conflict(a, b);
      }
    }
  }
  return cg;
}

PageAssignment feasible_pages(const Graph& g, std::span<const int> spine, int k,
                              const SearchBudget& budget) {
  const ConflictGraph cg = build_conflict_graph(g, spine);
  ColoringResult r = color_with_k(cg, k, budget);
  PageAssignment out;
  out.status = r.status;
  out.nodes = r.nodes;
  if (r.status == SearchStatus::kFound) out.pages = compact_pages(r.colors);
  return out;
}

std::uint64_t spine_order_count(int n, bool use_symmetry) {
  if (n <= 1) return 1;
  return factorial(use_symmetry ? n - 1 : n);
}

bool spine_order_at(std::uint64_t index, int n, bool use_symmetry, std::vector<int>& spine) {
  spine.resize(n);
  if (n == 0) return true;
  std::vector<int> pool;
  int first = 0;
  if (use_symmetry) {
    spine[0] = 0;
    pool.resize(n - 1);
    std::iota(pool.begin(), pool.end(), 1);
    first = 1;
  } else {
    pool.resize(n);
    std::iota(pool.begin(), pool.end(), 0);
  }
  for (int pos = first; pos < n; ++pos) {
    const std::uint64_t f = factorial(n - 1 - pos);
    const auto pick = static_cast<std::size_t>(index / f);
    index %= f;
    spine[pos] = pool[pick];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  if (use_symmetry && n >= 3) return spine[1] < spine[n - 1];
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct LevelOutcome {
  bool found = false;
  bool proven_infeasible = false;
  bool timed_out = false;
  std::vector<int> spine;
  std::vector<int> pages;
};

class LevelSearch {
 public:
  LevelSearch(const Graph& g, const SolveOptions& opts, Clock::time_point deadline,
              SolveStats& stats)
      : g_(g), opts_(opts), deadline_(deadline), stats_(stats) {}

  LevelOutcome run(int k) {
    const int n = g_.vertex_count();
    const std::uint64_t count = spine_order_count(n, opts_.use_symmetry);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{UINT64_MAX};
    std::atomic<bool> cancel{false};
    std::atomic<std::uint64_t> explored{0}, infeasible{0}, unknown{0}, nodes{0};
    std::mutex witness_mutex;
    LevelOutcome outcome;

    auto worker = [&] {
      std::vector<int> spine;
      while (!cancel.load(std::memory_order_relaxed)) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= count || i > best.load()) break;
        if (!spine_order_at(i, n, opts_.use_symmetry, spine)) continue;
        if (Clock::now() >= deadline_) {
          cancel = true;
          break;
        }
        SearchBudget budget;
        budget.deadline = std::min(deadline_, Clock::now() + opts_.per_order_timeout);
        budget.cancel = &cancel;
        PageAssignment r = feasible_pages(g_, spine, k, budget);
        explored.fetch_add(1);
        nodes.fetch_add(r.nodes);
        if (r.status == SearchStatus::kFound) {
          std::lock_guard lock(witness_mutex);
          if (i < best.load()) {
            best = i;
            outcome.spine = spine;
            outcome.pages = std::move(r.pages);
          }
        } else if (r.status == SearchStatus::kInfeasible) {
          infeasible.fetch_add(1);
        } else {
          unknown.fetch_add(1);
        }
      }
    };

    const int jobs = std::max(1, opts_.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }

    stats_.orders_explored += explored;
    stats_.infeasible_orders += infeasible;
    stats_.unknown_orders += unknown;
    stats_.coloring_nodes += nodes;

    outcome.found = best.load() != UINT64_MAX;
    outcome.timed_out = cancel.load() && !outcome.found;
    outcome.proven_infeasible = !outcome.found && !outcome.timed_out && unknown == 0;
    return outcome;
  }

 private:
  const Graph& g_;
  const SolveOptions& opts_;
  Clock::time_point deadline_;
  SolveStats& stats_;
};

}  // namespace

SolveResult exact_mbt(const Graph& g, const SolveOptions& opts) {
  if (!is_connected(g)) throw GraphError("exact_mbt requires a connected graph");
  const auto started = Clock::now();
  const auto deadline = started + opts.timeout;

  SolveResult result;
  result.bound = lower_bound(g, opts.bound);
  const int n = g.vertex_count();
  std::vector<int> natural(n);
  std::iota(natural.begin(), natural.end(), 0);

  if (g.edge_count() == 0) {
    result.witness = BookEmbedding(g, natural, {});
    result.exhaustive = true;
    return result;
  }

  // Upper bound from a greedy coloring on the natural spine.
  std::vector<int> greedy = compact_pages(greedy_coloring(build_conflict_graph(g, natural)));
  BookEmbedding best(g, natural, greedy);
  const int upper = best.page_count();

  const int start = std::max(1, opts.start_pages.value_or(result.bound.value));
  const int max_pages = opts.max_pages > 0 ? opts.max_pages
                                           : static_cast<int>(g.edge_count());
  bool proven = true;
  bool found = false;
  LevelSearch search(g, opts, deadline, result.stats);
  for (int k = start; k < upper && k <= max_pages; ++k) {
    LevelOutcome level = search.run(k);
    if (level.found) {
      best = BookEmbedding(g, std::move(level.spine), std::move(level.pages));
      found = true;
      break;
    }
    if (level.timed_out) {
      result.timed_out = true;
      proven = false;
      break;
    }
    if (!level.proven_infeasible) proven = false;
  }
  if (!found && upper > max_pages) proven = false;

  result.value = best.page_count();
  result.witness = std::move(best);
  if (result.value <= result.bound.value) {
    result.exhaustive = true;
  } else {
    result.exhaustive = proven && start <= result.bound.value;
  }
  result.stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return result;
}

}  // namespace mbook
