#include "mbook/layout.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace mbook {

std::vector<int> spine_positions(std::span<const int> spine, int n) {
  if (spine.size() != static_cast<std::size_t>(n)) {
    throw StructuralError("spine has " + std::to_string(spine.size()) +
                          " entries for " + std::to_string(n) + " vertices");
  }
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    const int v = spine[i];
    if (v < 0 || v >= n) {
      throw StructuralError("spine entry " + std::to_string(v) + " out of range");
    }
    if (position[v] != -1) {
      throw StructuralError("spine is not a permutation: vertex " +
                            std::to_string(v) + " repeats");
    }
    position[v] = i;
  }
  return position;
}

BookEmbedding::BookEmbedding(Graph graph, std::vector<int> spine,
                             std::vector<int> pages)
    : graph_(std::move(graph)), spine_(std::move(spine)), pages_(std::move(pages)) {
  position_ = spine_positions(spine_, graph_.vertex_count());
  if (pages_.size() != graph_.edge_count()) {
    throw StructuralError("pages has " + std::to_string(pages_.size()) +
                          " entries for " + std::to_string(graph_.edge_count()) +
                          " edges");
  }
  int max_page = -1;
  for (int p : pages_) {
    if (p < 0) throw StructuralError("negative page index");
    max_page = std::max(max_page, p);
  }
  page_count_ = max_page + 1;
  std::vector<char> used(page_count_, 0);
  for (int p : pages_) used[p] = 1;
  for (int p = 0; p < page_count_; ++p) {
    if (!used[p]) {
      throw StructuralError("page indices are not contiguous: page " +
                            std::to_string(p) + " is empty");
    }
  }
}

std::vector<int> compact_pages(std::span<const int> pages) {
  std::vector<int> used(pages.begin(), pages.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<int> out;
  out.reserve(pages.size());
  for (int p : pages) {
    out.push_back(static_cast<int>(std::lower_bound(used.begin(), used.end(), p) -
                                   used.begin()));
  }
  return out;
}

bool arcs_interleave(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (a == c || a == d || b == c || b == d) return false;
  const bool c_inside = a < c && c < b;
  const bool d_inside = a < d && d < b;
  return c_inside != d_inside;
}

bool edges_cross(std::span<const int> spine, Edge e1, Edge e2) {
  auto pos = [&](int v) {
    auto it = std::find(spine.begin(), spine.end(), v);
    if (it == spine.end()) {
      throw StructuralError("vertex " + std::to_string(v) + " is not on the spine");
    }
    return static_cast<int>(it - spine.begin());
  };
  return arcs_interleave(pos(e1.u), pos(e1.v), pos(e2.u), pos(e2.v));
}

std::size_t ValidationReport::crossing_count() const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(),
      [](const Violation& v) { return std::holds_alternative<Crossing>(v); }));
}

std::size_t ValidationReport::matching_violation_count() const {
  return violations.size() - crossing_count();
}

ValidationReport validate(const BookEmbedding& emb) {
  const Graph& g = emb.graph();
  const auto position = emb.position();
  const int pages = emb.page_count();

  std::vector<std::vector<std::size_t>> by_page(pages);
  for (std::size_t i = 0; i < g.edge_count(); ++i) by_page[emb.page_of(i)].push_back(i);

  ValidationReport report;
  report.page_count = pages;

  struct Arc {
    int left;
    int right;
    std::size_t edge;
  };
  std::vector<std::vector<std::size_t>> at_vertex(g.vertex_count());
  for (int page = 0; page < pages; ++page) {
    const auto& edges = by_page[page];

    for (auto& list : at_vertex) list.clear();
    for (std::size_t i : edges) {
      at_vertex[g.edge(i).u].push_back(i);
      at_vertex[g.edge(i).v].push_back(i);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (at_vertex[v].size() >= 2) {
        report.violations.emplace_back(MatchingViolation{page, v, at_vertex[v]});
      }
    }

    // Sweep arcs by left endpoint; only arcs starting inside [left, right]
    // can interleave with the current one.
    std::vector<Arc> arcs;
    arcs.reserve(edges.size());
    for (std::size_t i : edges) {
      const int a = position[g.edge(i).u];
      const int b = position[g.edge(i).v];
      arcs.push_back({std::min(a, b), std::max(a, b), i});
    }
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& x, const Arc& y) { return x.left < y.left; });
    std::vector<Crossing> crossings;
    for (std::size_t x = 0; x < arcs.size(); ++x) {
      for (std::size_t y = x + 1; y < arcs.size() && arcs[y].left < arcs[x].right; ++y) {
        if (arcs[y].left > arcs[x].left && arcs[y].right > arcs[x].right) {
          const auto [lo, hi] = std::minmax(arcs[x].edge, arcs[y].edge);
          crossings.push_back({page, lo, hi});
        }
      }
    }
    std::sort(crossings.begin(), crossings.end(), [](const Crossing& l, const Crossing& r) {
      return std::pair(l.edge_a, l.edge_b) < std::pair(r.edge_a, r.edge_b);
    });
    for (const Crossing& c : crossings) report.violations.emplace_back(c);
  }
  report.valid = report.violations.empty();
  return report;
}

BookEmbedding rotate_spine(const BookEmbedding& emb, int k) {
  const auto spine = emb.spine();
  const int n = static_cast<int>(spine.size());
  if (n == 0) return emb;
  const int shift = ((k % n) + n) % n;
  std::vector<int> rotated(n);
  for (int i = 0; i < n; ++i) rotated[i] = spine[(i + shift) % n];
  return BookEmbedding(emb.graph(), std::move(rotated),
                       std::vector<int>(emb.pages().begin(), emb.pages().end()));
}

BookEmbedding reflect_spine(const BookEmbedding& emb) {
  std::vector<int> reversed(emb.spine().rbegin(), emb.spine().rend());
  return BookEmbedding(emb.graph(), std::move(reversed),
                       std::vector<int>(emb.pages().begin(), emb.pages().end()));
}

BookEmbedding restrict_embedding(const BookEmbedding& emb, const Graph& sub) {
  const Graph& g = emb.graph();
  if (sub.vertex_count() != g.vertex_count()) {
    throw StructuralError("restriction must keep the vertex set");
  }
  std::vector<int> pages;
  pages.reserve(sub.edge_count());
  for (const Edge& e : sub.edges()) {
    const auto idx = g.edge_index(e.u, e.v);
    if (!idx) throw StructuralError("restriction target has an edge not in the embedding");
    pages.push_back(emb.page_of(*idx));
  }
  return BookEmbedding(sub, std::vector<int>(emb.spine().begin(), emb.spine().end()),
                       compact_pages(pages));
}

}  // namespace mbook
