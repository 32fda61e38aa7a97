#ifndef MBOOK_CONSTRUCTIONS_HPP
#define MBOOK_CONSTRUCTIONS_HPP

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mbook/graph.hpp"
#include "mbook/layout.hpp"

namespace mbook {

enum class Scheme {
  kCompleteCongruence,
  kEvenCycle,
  kPath,
  kProduct,
  kKpcqOddDirect,
  kKpcqEvenProduct,
};

std::string_view scheme_name(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);

// A construction broke its own guarantee; carries the validator output.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string& what, std::vector<Violation> violations = {})
      : std::runtime_error(what), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Matching book embedding of a bipartite graph in exactly max_degree pages,
// together with a proper 2-coloring.
class DispersableWitness {
 public:
  // Checks validity, page count, bipartiteness. Throws ConstructionError.
  static DispersableWitness from_embedding(BookEmbedding embedding);
  static DispersableWitness from_embedding(BookEmbedding embedding, std::vector<int> coloring);

  const BookEmbedding& embedding() const { return embedding_; }
  std::span<const int> coloring() const { return coloring_; }

 private:
  DispersableWitness(BookEmbedding embedding, std::vector<int> coloring)
      : embedding_(std::move(embedding)), coloring_(std::move(coloring)) {}

  BookEmbedding embedding_;
  std::vector<int> coloring_;
};

struct ConstructionOutcome {
  BookEmbedding embedding;
  Scheme scheme = Scheme::kCompleteCongruence;
  // Set when the scheme's page assignment failed validation and the page
  // assignment search on the same spine produced the result instead.
  bool repaired = false;
};

// No construction applies and the fixed-spine repair did not succeed.
struct Unresolved {
  std::string reason;
  std::vector<Violation> violations;
};

using KpcqResult = std::variant<ConstructionOutcome, Unresolved>;

// K_p on the natural spine, edge (a, b) on page (a + b) mod p, pages
// compacted (p = 2 gives one page).
BookEmbedding complete_embedding(int p);

// C_{2m}, m >= 2: even-start edges on page 0, the others on page 1.
DispersableWitness even_cycle_embedding(int m);

// P_n, n >= 2: edges alternate between pages 0 and 1.
DispersableWitness path_witness(int n);

// Block per B-vertex in witness spine order holding a copy of the G
// spine, reversed for color-1 vertices. G-edges keep their pages;
// the bundle of a B-edge on witness page c goes to page
// g_emb.page_count() + c. Throws ConstructionError on invalid input or
// an invalid result.
BookEmbedding product_embedding(const BookEmbedding& g_emb, const DispersableWitness& b_wit);

// Spine for K_p x C_q on the row/column grid: column i holds the p copies
// of cycle vertex i, in descending K-index for even i and ascending for
// odd i (0-based columns).
std::vector<int> snake_spine(int p, int q);

// Page assignment of the direct scheme for K_p x C_q with q odd, parallel
// to kpcq(p, q).edges(). Not validated.
std::vector<int> kpcq_odd_scheme_pages(int p, int q);

struct RepairOptions {
  std::chrono::milliseconds budget{60'000};
};

// K_p x C_{2m+1}, p >= 4, m >= 1, in p + 2 pages. Falls back to the page
// assignment search on the snake spine if the scheme does not validate.
// Throws ConstructionError if both fail.
ConstructionOutcome kpcq_odd_embedding(int p, int m, const RepairOptions& repair = {});

// Dispatcher for K_p x C_q, p, q >= 3. The only Unresolved case is p = 3
// with odd q when both the scheme and the repair fail.
KpcqResult kpcq_embedding(int p, int q, const RepairOptions& repair = {});

}  // namespace mbook

#endif  // MBOOK_CONSTRUCTIONS_HPP
