#include "mbook/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <utility>

#include "mbook/solver.hpp"

namespace mbook {

namespace {

constexpr std::array<std::pair<Scheme, std::string_view>, 6> kSchemeNames{{
    {Scheme::kCompleteCongruence, "complete-congruence"},
    {Scheme::kEvenCycle, "even-cycle"},
    {Scheme::kPath, "path"},
    {Scheme::kProduct, "product-lemma2.5"},
    {Scheme::kKpcqOddDirect, "kpcq-odd-direct"},
    {Scheme::kKpcqEvenProduct, "kpcq-even-product"},
}};

std::vector<int> natural_spine(int n) {
  std::vector<int> spine(n);
  std::iota(spine.begin(), spine.end(), 0);
  return spine;
}

void require_valid(const BookEmbedding& emb, const std::string& what) {
  ValidationReport report = validate(emb);
  if (!report.valid) throw ConstructionError(what, std::move(report.violations));
}

// Scheme, then fixed-spine repair. Empty optional: both failed.
std::optional<ConstructionOutcome> odd_scheme_or_repair(int p, int q,
                                                        const RepairOptions& repair,
                                                        std::vector<Violation>& violations) {
  Graph g = kpcq(p, q);
  std::vector<int> spine = snake_spine(p, q);
  BookEmbedding direct(g, spine, kpcq_odd_scheme_pages(p, q));
  ValidationReport report = validate(direct);
  if (report.valid) return ConstructionOutcome{std::move(direct), Scheme::kKpcqOddDirect, false};

  violations = std::move(report.violations);
  PageAssignment fixed =
      feasible_pages(g, spine, p + 2, SearchBudget::for_duration(repair.budget));
  if (fixed.status != SearchStatus::kFound) return std::nullopt;
  BookEmbedding repaired(std::move(g), std::move(spine), std::move(fixed.pages));
  require_valid(repaired, "page assignment search returned an invalid embedding");
  return ConstructionOutcome{std::move(repaired), Scheme::kKpcqOddDirect, true};
}

}  // namespace

std::string_view scheme_name(Scheme scheme) {
  for (const auto& [s, name] : kSchemeNames)
    if (s == scheme) return name;
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (const auto& [s, n] : kSchemeNames)
    if (n == name) return s;
  return std::nullopt;
}

DispersableWitness DispersableWitness::from_embedding(BookEmbedding embedding) {
  Bipartition parts = bipartition(embedding.graph());
  auto* coloring = std::get_if<TwoColoring>(&parts);
  if (!coloring) throw ConstructionError("dispersable witness graph is not bipartite");
  return from_embedding(std::move(embedding), std::move(coloring->color));
}

DispersableWitness DispersableWitness::from_embedding(BookEmbedding embedding,
                                                      std::vector<int> coloring) {
  const Graph& b = embedding.graph();
  if (!is_proper_two_coloring(b, coloring)) {
    throw ConstructionError("dispersable witness coloring is not a proper 2-coloring");
  }
  require_valid(embedding, "dispersable witness embedding is invalid");
  if (embedding.page_count() != max_degree(b)) {
    throw ConstructionError("dispersable witness uses " +
                            std::to_string(embedding.page_count()) + " pages, max degree is " +
                            std::to_string(max_degree(b)));
  }
  return DispersableWitness(std::move(embedding), std::move(coloring));
}

BookEmbedding complete_embedding(int p) {
  Graph g = complete(p);
  std::vector<int> pages;
  pages.reserve(g.edge_count());
  for (const Edge& e : g.edges()) pages.push_back((e.u + e.v) % p);
  return BookEmbedding(std::move(g), natural_spine(p), compact_pages(pages));
}

DispersableWitness even_cycle_embedding(int m) {
  if (m < 2) throw GraphError("even cycle embedding needs m >= 2");
  Graph g = cycle(2 * m);
  std::vector<int> pages;
  std::vector<int> coloring(2 * m);
  for (const Edge& e : g.edges()) {
    const bool closing = e.u == 0 && e.v == 2 * m - 1;
    pages.push_back(!closing && e.u % 2 == 0 ? 0 : 1);
  }
  for (int v = 0; v < 2 * m; ++v) coloring[v] = v % 2;
  return DispersableWitness::from_embedding(
      BookEmbedding(std::move(g), natural_spine(2 * m), std::move(pages)), std::move(coloring));
}

DispersableWitness path_witness(int n) {
  if (n < 2) throw GraphError("path witness needs n >= 2");
  Graph g = path(n);
  std::vector<int> pages;
  for (const Edge& e : g.edges()) pages.push_back(e.u % 2);
  std::vector<int> coloring(n);
  for (int v = 0; v < n; ++v) coloring[v] = v % 2;
  return DispersableWitness::from_embedding(
      BookEmbedding(std::move(g), natural_spine(n), std::move(pages)), std::move(coloring));
}

BookEmbedding product_embedding(const BookEmbedding& g_emb, const DispersableWitness& b_wit) {
  require_valid(g_emb, "factor embedding is invalid");
  const Graph& g = g_emb.graph();
  const BookEmbedding& b_emb = b_wit.embedding();
  const Graph& b = b_emb.graph();
  const int gn = g.vertex_count();
  const int lower_pages = g_emb.page_count();

  Graph product = cartesian_product(g, b);
  std::vector<int> spine;
  spine.reserve(product.vertex_count());
  for (int w : b_emb.spine()) {
    const bool forward = b_wit.coloring()[w] == 0;
    const auto block = g_emb.spine();
    for (int i = 0; i < gn; ++i) {
      const int x = forward ? block[i] : block[gn - 1 - i];
      spine.push_back(w * gn + x);
    }
  }

  std::vector<int> pages;
  pages.reserve(product.edge_count());
  for (const Edge& e : product.edges()) {
    const int l1 = e.u % gn, r1 = e.u / gn;
    const int l2 = e.v % gn, r2 = e.v / gn;
    if (r1 == r2) {
      pages.push_back(g_emb.page_of(*g.edge_index(l1, l2)));
    } else {
      pages.push_back(lower_pages + b_emb.page_of(*b.edge_index(r1, r2)));
    }
  }

  BookEmbedding out(std::move(product), std::move(spine), std::move(pages));
  require_valid(out, "product construction produced an invalid embedding");
  return out;
}

std::vector<int> snake_spine(int p, int q) {
  std::vector<int> spine;
  spine.reserve(static_cast<std::size_t>(p) * q);
  for (int c = 0; c < q; ++c) {
    for (int i = 0; i < p; ++i) {
      const int row = c % 2 == 0 ? p - 1 - i : i;
      spine.push_back(c * p + row);
    }
  }
  return spine;
}

std::vector<int> kpcq_odd_scheme_pages(int p, int q) {
  if (p < 1 || q < 3 || q % 2 == 0) throw GraphError("odd scheme needs p >= 1 and odd q >= 3");
  // Rows are 1-based (a, b in 1..p) below; pages 0..p-1 carry one wrap
  // edge each, page p the rungs leaving even columns, page p+1 the others.
  auto boundary_page = [p](int sum, int rung_free_page) {
    if (sum == p + 1) return rung_free_page;
    if (sum <= p) return sum - 1;
    return sum - p - 2;
  };
  const Graph g = kpcq(p, q);
  std::vector<int> pages;
  pages.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const int l1 = e.u % p, c1 = e.u / p;
    const int l2 = e.v % p, c2 = e.v / p;
    if (c1 == c2) {
      const int sum = l1 + l2 + 2;
      if (c1 == 0) {
        pages.push_back(boundary_page(sum, p + 1));
      } else if (c1 == q - 1) {
        pages.push_back(boundary_page(sum, p));
      } else {
        pages.push_back(sum % p);
      }
    } else if (c2 == c1 + 1) {
      pages.push_back(c1 % 2 == 0 ? p : p + 1);
    } else {
      pages.push_back(l1);  // wrap edge between the first and last column
    }
  }
  return pages;
}

ConstructionOutcome kpcq_odd_embedding(int p, int m, const RepairOptions& repair) {
  if (p < 4) throw GraphError("odd-cycle scheme needs p >= 4");
  if (m < 1) throw GraphError("odd-cycle scheme needs m >= 1");
  std::vector<Violation> violations;
  auto outcome = odd_scheme_or_repair(p, 2 * m + 1, repair, violations);
  if (!outcome) {
    throw ConstructionError("K" + std::to_string(p) + "xC" + std::to_string(2 * m + 1) +
                                ": scheme invalid and repair search failed",
                            std::move(violations));
  }
  return std::move(*outcome);
}

KpcqResult kpcq_embedding(int p, int q, const RepairOptions& repair) {
  if (p < 3 || q < 3) throw GraphError("kpcq embedding needs p, q >= 3");
  if (q % 2 == 0) {
    BookEmbedding prod = product_embedding(complete_embedding(p), even_cycle_embedding(q / 2));
    BookEmbedding tagged(kpcq(p, q), std::vector<int>(prod.spine().begin(), prod.spine().end()),
                         std::vector<int>(prod.pages().begin(), prod.pages().end()));
    return ConstructionOutcome{std::move(tagged), Scheme::kKpcqEvenProduct, false};
  }
  if (p >= 4) return kpcq_odd_embedding(p, (q - 1) / 2, repair);

  std::vector<Violation> violations;
  auto outcome = odd_scheme_or_repair(p, q, repair, violations);
  if (outcome) return std::move(*outcome);
  return Unresolved{"no construction for K3xC" + std::to_string(q) +
                        "; the scheme and the repair search both failed",
                    std::move(violations)};
}

}  // namespace mbook
