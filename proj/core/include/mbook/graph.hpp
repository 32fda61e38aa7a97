#ifndef MBOOK_GRAPH_HPP
#define MBOOK_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace mbook {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes endpoint order. Throws GraphError on a self-loop.
Edge make_edge(int a, int b);

// Vertex (left, right) of G x B, stored at id = right * |V(G)| + left.
struct ProductLabel {
  int left = 0;
  int right = 0;

  friend bool operator==(const ProductLabel&, const ProductLabel&) = default;
};

class Graph;

// Generator provenance. Used to pick a construction for a graph read back
// from disk without isomorphism testing.
struct Family {
  std::string kind;
  std::map<std::string, int> params;
  // Factors of a product, or the base graph of an edge deletion (in left).
  std::shared_ptr<const Graph> left;
  std::shared_ptr<const Graph> right;

  int param(const std::string& key) const;
};

struct GraphMeta {
  std::string name;
  std::vector<ProductLabel> labels;
  std::optional<Family> family;
};

// Simple undirected graph on vertices 0..n-1 with a sorted edge list.
// Equality compares only vertex count and edges.
class Graph {
 public:
  Graph() = default;
  // Throws GraphError on self-loops, duplicate edges, or endpoints >= n.
  Graph(int n, std::vector<Edge> edges, GraphMeta meta = {});

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  const std::string& name() const { return meta_.name; }
  std::span<const ProductLabel> labels() const { return meta_.labels; }
  const std::optional<Family>& family() const { return meta_.family; }
  const GraphMeta& meta() const { return meta_; }

  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }

  bool has_edge(int a, int b) const;
  // Position of the edge in the canonical order.
  std::optional<std::size_t> edge_index(int a, int b) const;

  // Same structure, different name/metadata.
  Graph with_meta(GraphMeta meta) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  GraphMeta meta_;
};

Graph complete(int p);
Graph cycle(int q);
Graph path(int n);
Graph complete_bipartite(int a, int b);
Graph hypercube(int d);

// Vertex id = right * |V(g)| + left; labels() holds the inverse map.
Graph cartesian_product(const Graph& g, const Graph& b);
// K_p x C_q, tagged as family "kpcq".
Graph kpcq(int p, int q);

Graph delete_edge(const Graph& g, Edge e);

int max_degree(const Graph& g);
// Common degree when every vertex has the same degree.
std::optional<int> is_regular(const Graph& g);
bool is_connected(const Graph& g);

struct TwoColoring {
  std::vector<int> color;  // 0 or 1 per vertex
};

// Closed walk v0, v1, ..., v_{k-1}, v0 with k odd and distinct vertices.
struct OddCycle {
  std::vector<int> vertices;
};

using Bipartition = std::variant<TwoColoring, OddCycle>;

// Colors each component independently.
Bipartition bipartition(const Graph& g);

bool is_proper_two_coloring(const Graph& g, std::span<const int> color);
bool is_odd_cycle_of(const Graph& g, const OddCycle& cycle);

}  // namespace mbook

#endif  // MBOOK_GRAPH_HPP
