#include "mbook/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <utility>

namespace mbook {

namespace {

Family make_family(std::string kind, std::map<std::string, int> params) {
  Family f;
  f.kind = std::move(kind);
  f.params = std::move(params);
  return f;
}

GraphMeta named(std::string name, Family family) {
  GraphMeta meta;
  meta.name = std::move(name);
  meta.family = std::move(family);
  return meta;
}

}  // namespace

Edge make_edge(int a, int b) {
  if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

int Family::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) {
    throw GraphError("family '" + kind + "' has no parameter '" + key + "'");
  }
  return it->second;
}

Graph::Graph(int n, std::vector<Edge> edges, GraphMeta meta)
    : n_(n), edges_(std::move(edges)), meta_(std::move(meta)) {
  if (n_ < 0) throw GraphError("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw GraphError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") has an endpoint out of range");
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," +
                     std::to_string(dup->v) + ")");
  }
  if (!meta_.labels.empty() &&
      meta_.labels.size() != static_cast<std::size_t>(n_)) {
    throw GraphError("label table size does not match vertex count");
  }
  adjacency_.assign(n_, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(int a, int b) const {
  return edge_index(a, b).has_value();
}

std::optional<std::size_t> Graph::edge_index(int a, int b) const {
  if (a == b) return std::nullopt;
  const Edge key = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::with_meta(GraphMeta meta) const {
  Graph copy = *this;
  if (!meta.labels.empty() && meta.labels.size() != static_cast<std::size_t>(n_)) {
    throw GraphError("label table size does not match vertex count");
  }
  copy.meta_ = std::move(meta);
  return copy;
}

Graph complete(int p) {
  if (p < 1) throw GraphError("complete graph needs p >= 1");
  std::vector<Edge> edges;
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b) edges.push_back({a, b});
  return Graph(p, std::move(edges),
               named("K" + std::to_string(p), make_family("complete", {{"n", p}})));
}

Graph cycle(int q) {
  if (q < 3) throw GraphError("cycle needs q >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < q; ++i) edges.push_back(make_edge(i, (i + 1) % q));
  return Graph(q, std::move(edges),
               named("C" + std::to_string(q), make_family("cycle", {{"n", q}})));
}

Graph path(int n) {
  if (n < 1) throw GraphError("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges),
               named("P" + std::to_string(n), make_family("path", {{"n", n}})));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw GraphError("complete bipartite graph needs a, b >= 1");
  std::vector<Edge> edges;
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y) edges.push_back({x, a + y});
  return Graph(a + b, std::move(edges),
               named("K" + std::to_string(a) + "," + std::to_string(b),
                     make_family("complete-bipartite", {{"a", a}, {"b", b}})));
}

Graph hypercube(int d) {
  if (d < 0) throw GraphError("hypercube needs d >= 0");
  if (d > 20) throw GraphError("hypercube dimension too large");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int bit = 0; bit < d; ++bit) {
      const int w = v ^ (1 << bit);
      if (v < w) edges.push_back({v, w});
    }
  return Graph(n, std::move(edges),
               named("Q" + std::to_string(d), make_family("hypercube", {{"d", d}})));
}

Graph cartesian_product(const Graph& g, const Graph& b) {
  const int gn = g.vertex_count();
  const int bn = b.vertex_count();
  if (gn == 0 || bn == 0) throw GraphError("cartesian product of an empty graph");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() * bn + b.edge_count() * gn);
  for (int r = 0; r < bn; ++r)
    for (const Edge& e : g.edges()) edges.push_back({r * gn + e.u, r * gn + e.v});
  for (const Edge& e : b.edges())
    for (int l = 0; l < gn; ++l) edges.push_back({e.u * gn + l, e.v * gn + l});

  GraphMeta meta;
  meta.name = g.name() + "x" + b.name();
  meta.labels.reserve(static_cast<std::size_t>(gn) * bn);
  for (int r = 0; r < bn; ++r)
    for (int l = 0; l < gn; ++l) meta.labels.push_back({l, r});
  Family family = make_family("product", {});
  family.left = std::make_shared<const Graph>(g);
  family.right = std::make_shared<const Graph>(b);
  meta.family = std::move(family);
  return Graph(gn * bn, std::move(edges), std::move(meta));
}

Graph kpcq(int p, int q) {
  Graph product = cartesian_product(complete(p), cycle(q));
  GraphMeta meta = product.meta();
  meta.family->kind = "kpcq";
  meta.family->params = {{"p", p}, {"q", q}};
  return product.with_meta(std::move(meta));
}

Graph delete_edge(const Graph& g, Edge e) {
  e = make_edge(e.u, e.v);
  if (!g.has_edge(e.u, e.v)) {
    throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     ") is not in " + (g.name().empty() ? "the graph" : g.name()));
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (const Edge& f : g.edges())
    if (f != e) edges.push_back(f);

  GraphMeta meta;
  meta.name = g.name() + "-e";
  meta.labels.assign(g.labels().begin(), g.labels().end());
  Family family = make_family("delete-edge", {{"u", e.u}, {"v", e.v}});
  family.left = std::make_shared<const Graph>(g);
  meta.family = std::move(family);
  return Graph(g.vertex_count(), std::move(edges), std::move(meta));
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::optional<int> is_regular(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  const int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Bipartition bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<int> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push(w);
        } else if (color[w] == color[v]) {
          // Same BFS parity: the two tree paths to the common ancestor plus
          // (v, w) close an odd cycle.
          std::vector<int> up_v{v};
          std::vector<int> up_w{w};
          int a = v;
          int b = w;
          while (depth[a] > depth[b]) up_v.push_back(a = parent[a]);
          while (depth[b] > depth[a]) up_w.push_back(b = parent[b]);
          while (a != b) {
            up_v.push_back(a = parent[a]);
            up_w.push_back(b = parent[b]);
          }
          up_w.pop_back();  // common ancestor is already in up_v
          OddCycle cycle;
          cycle.vertices = std::move(up_v);
          cycle.vertices.insert(cycle.vertices.end(), up_w.rbegin(), up_w.rend());
          return cycle;
        }
      }
    }
  }
  return TwoColoring{std::move(color)};
}

bool is_proper_two_coloring(const Graph& g, std::span<const int> color) {
  if (color.size() != static_cast<std::size_t>(g.vertex_count())) return false;
  for (int c : color)
    if (c != 0 && c != 1) return false;
  for (const Edge& e : g.edges())
    if (color[e.u] == color[e.v]) return false;
  return true;
}

bool is_odd_cycle_of(const Graph& g, const OddCycle& cycle) {
  const auto& vs = cycle.vertices;
  if (vs.size() < 3 || vs.size() % 2 == 0) return false;
  std::vector<int> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int v : vs)
    if (v < 0 || v >= g.vertex_count()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (!g.has_edge(vs[i], vs[(i + 1) % vs.size()])) return false;
  return true;
}

}  // namespace mbook
