#ifndef MBOOK_LAYOUT_HPP
#define MBOOK_LAYOUT_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "mbook/graph.hpp"

namespace mbook {

// Malformed embedding data (as opposed to a well-formed but invalid one).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Spine order plus one page index per edge, parallel to graph().edges().
//
// Page indices are contiguous: page_count() == 1 + max index, and every
// page below that carries at least one edge. Edgeless graphs have zero pages.
class BookEmbedding {
 public:
  BookEmbedding() = default;
  // Throws StructuralError if spine is not a permutation of the vertices,
  // pages has the wrong length, or page indices are negative or have gaps.
  BookEmbedding(Graph graph, std::vector<int> spine, std::vector<int> pages);

  const Graph& graph() const { return graph_; }
  // spine()[i] is the vertex at position i.
  std::span<const int> spine() const { return spine_; }
  // position()[v] is the spine position of vertex v.
  std::span<const int> position() const { return position_; }
  std::span<const int> pages() const { return pages_; }
  int page_of(std::size_t edge) const { return pages_[edge]; }
  int page_count() const { return page_count_; }

 private:
  Graph graph_;
  std::vector<int> spine_;
  std::vector<int> position_;
  std::vector<int> pages_;
  int page_count_ = 0;
};

// Renumbers used page indices to 0..k-1 preserving their relative order.
std::vector<int> compact_pages(std::span<const int> pages);

// Throws StructuralError unless spine is a permutation of 0..n-1.
std::vector<int> spine_positions(std::span<const int> spine, int n);

// True iff the arcs at positions {a, b} and {c, d} interleave. Arcs sharing
// a position never interleave.
bool arcs_interleave(int a, int b, int c, int d);

// Throws StructuralError if an endpoint is not on the spine.
bool edges_cross(std::span<const int> spine, Edge e1, Edge e2);

struct Crossing {
  int page = 0;
  std::size_t edge_a = 0;  // edge_a < edge_b, canonical edge indices
  std::size_t edge_b = 0;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct MatchingViolation {
  int page = 0;
  int vertex = 0;
  std::vector<std::size_t> edges;  // ascending, at least two

  friend bool operator==(const MatchingViolation&, const MatchingViolation&) = default;
};

using Violation = std::variant<Crossing, MatchingViolation>;

struct ValidationReport {
  bool valid = true;
  int page_count = 0;
  // Sorted by page; within a page matching violations (by vertex) precede
  // crossings (by edge pair).
  std::vector<Violation> violations;

  std::size_t crossing_count() const;
  std::size_t matching_violation_count() const;
};

ValidationReport validate(const BookEmbedding& emb);

BookEmbedding rotate_spine(const BookEmbedding& emb, int k);
BookEmbedding reflect_spine(const BookEmbedding& emb);

// Keeps the spine and the pages of edges present in sub, which must have
// the same vertex count and a subset of the edges. Pages are compacted.
BookEmbedding restrict_embedding(const BookEmbedding& emb, const Graph& sub);

}  // namespace mbook

#endif  // MBOOK_LAYOUT_HPP
