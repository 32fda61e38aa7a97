#include <gtest/gtest.h>

#include <random>

#include "mbook/constructions.hpp"
#include "mbook/layout.hpp"
#include "oracles.hpp"

namespace mbook {
namespace {

const std::vector<int> kLine{0, 1, 2, 3};

TEST(EdgesCross, Examples) {
  EXPECT_TRUE(edges_cross(kLine, {0, 2}, {1, 3}));
  EXPECT_FALSE(edges_cross(kLine, {0, 3}, {1, 2}));
  EXPECT_FALSE(edges_cross(kLine, {0, 1}, {2, 3}));
  EXPECT_FALSE(edges_cross(kLine, {0, 1}, {1, 2}));  // shared endpoint
  EXPECT_THROW(edges_cross(kLine, {0, 7}, {1, 2}), StructuralError);
}

TEST(EdgesCross, SymmetricAndOrientationFree) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    auto spine = oracle::random_spine(rng, 7);
    std::uniform_int_distribution<int> pick(0, 6);
    int a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
    if (a == b || c == d) continue;
    const bool x = edges_cross(spine, make_edge(a, b), make_edge(c, d));
    EXPECT_EQ(x, edges_cross(spine, make_edge(c, d), make_edge(a, b)));
    EXPECT_EQ(x, edges_cross(spine, Edge{std::max(a, b), std::min(a, b)}, make_edge(d, c)));
    EXPECT_EQ(x, oracle::interleaved(spine, make_edge(a, b), make_edge(c, d)));
  }
}

TEST(BookEmbedding, StructuralErrors) {
  Graph g = cycle(4);
  EXPECT_THROW(BookEmbedding(g, {0, 1, 1, 3}, {0, 1, 0, 1}), StructuralError);
  EXPECT_THROW(BookEmbedding(g, {0, 1, 2}, {0, 1, 0, 1}), StructuralError);
  EXPECT_THROW(BookEmbedding(g, {0, 1, 2, 3}, {0, 1, 0}), StructuralError);
  EXPECT_THROW(BookEmbedding(g, {0, 1, 2, 3}, {0, 2, 0, 2}), StructuralError);
  EXPECT_THROW(BookEmbedding(g, {0, 1, 2, 3}, {0, -1, 0, 1}), StructuralError);
  BookEmbedding ok(g, {0, 1, 2, 3}, {0, 1, 0, 1});
  EXPECT_EQ(ok.page_count(), 2);
  EXPECT_EQ(ok.position()[3], 3);
}

TEST(Validate, CompleteFiveIsValid) {
  ValidationReport r = validate(complete_embedding(5));
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.page_count, 5);
}

TEST(Validate, TriangleOnOnePage) {
  BookEmbedding emb(cycle(3), {0, 1, 2}, {0, 0, 0});
  ValidationReport r = validate(emb);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.matching_violation_count(), 3u);
  EXPECT_EQ(r.crossing_count(), 0u);
  for (const Violation& v : r.violations) {
    EXPECT_EQ(std::get<MatchingViolation>(v).edges.size(), 2u);
  }
}

TEST(Validate, SingleCrossing) {
  Graph g(4, {{0, 2}, {1, 3}});
  ValidationReport r = validate(BookEmbedding(g, {0, 1, 2, 3}, {0, 0}));
  EXPECT_FALSE(r.valid);
  ASSERT_EQ(r.violations.size(), 1u);
  const auto& c = std::get<Crossing>(r.violations[0]);
  EXPECT_EQ(c.page, 0);
  EXPECT_EQ(c.edge_a, 0u);
  EXPECT_EQ(c.edge_b, 1u);
}

TEST(Validate, EdgelessGraph) {
  ValidationReport r = validate(BookEmbedding(Graph(3, {}), {2, 0, 1}, {}));
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.page_count, 0);
}

TEST(Validate, ReportsAreExhaustive) {
  // Three mutually interleaving chords plus a shared-endpoint pair.
  Graph g(6, {{0, 3}, {1, 4}, {2, 5}, {0, 1}});
  ValidationReport r = validate(BookEmbedding(g, {0, 1, 2, 3, 4, 5}, {0, 0, 0, 0}));
  EXPECT_EQ(r.crossing_count(), 3u);
  EXPECT_EQ(r.matching_violation_count(), 2u);
}

TEST(Transform, RotateByZeroIsIdentity) {
  BookEmbedding emb = complete_embedding(4);
  BookEmbedding same = rotate_spine(emb, 0);
  EXPECT_TRUE(std::equal(emb.spine().begin(), emb.spine().end(), same.spine().begin()));
  EXPECT_TRUE(std::equal(emb.pages().begin(), emb.pages().end(), same.pages().begin()));
}

struct RandomEmbedding {
  Graph graph;
  std::vector<int> spine;
  std::vector<int> pages;
};

RandomEmbedding random_embedding(std::mt19937& rng, int max_n) {
  std::uniform_int_distribution<int> size(2, max_n);
  const int n = size(rng);
  Graph g = oracle::random_graph(rng, n, 0.5);
  std::uniform_int_distribution<int> kdist(1, 4);
  const int k = kdist(rng);
  std::uniform_int_distribution<int> page(0, k - 1);
  std::vector<int> pages;
  for (std::size_t i = 0; i < g.edge_count(); ++i) pages.push_back(page(rng));
  return {g, oracle::random_spine(rng, n), compact_pages(pages)};
}

TEST(ValidateProperty, RotationAndReflectionPreserveVerdict) {
  std::mt19937 rng(2024);
  int valid_seen = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    RandomEmbedding r = random_embedding(rng, 8);
    BookEmbedding emb(r.graph, r.spine, r.pages);
    // Bias toward valid samples: repage half of them greedily.
    if (trial % 2 == 0 && r.graph.edge_count() > 0) {
      std::vector<int> pages(r.graph.edge_count());
      for (std::size_t i = 0; i < pages.size(); ++i) pages[i] = static_cast<int>(i);
      emb = BookEmbedding(r.graph, r.spine, pages);
    }
    const bool verdict = validate(emb).valid;
    valid_seen += verdict;
    const int n = r.graph.vertex_count();
    for (int k = 0; k < n; ++k) {
      ASSERT_EQ(validate(rotate_spine(emb, k)).valid, verdict) << "trial " << trial;
    }
    ASSERT_EQ(validate(reflect_spine(emb)).valid, verdict);
    // Counts are preserved too, not just the verdict.
    EXPECT_EQ(validate(reflect_spine(rotate_spine(emb, 1))).violations.size(),
              validate(emb).violations.size());
  }
  EXPECT_GT(valid_seen, 500);
}

TEST(ValidateProperty, AgreesWithBruteForce) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    RandomEmbedding r = random_embedding(rng, 12);
    ValidationReport rep = validate(BookEmbedding(r.graph, r.spine, r.pages));
    std::vector<Edge> edges(r.graph.edges().begin(), r.graph.edges().end());
    oracle::Verdict v = oracle::brute_validate(edges, r.spine, r.pages);
    ASSERT_EQ(rep.valid, v.valid);
    ASSERT_EQ(rep.crossing_count(), v.crossings);
    ASSERT_EQ(rep.matching_violation_count(), v.matching_violations);
    for (const Violation& viol : rep.violations) {
      if (const auto* c = std::get_if<Crossing>(&viol)) {
        EXPECT_TRUE(oracle::interleaved(r.spine, edges[c->edge_a], edges[c->edge_b]));
        EXPECT_EQ(r.pages[c->edge_a], c->page);
        EXPECT_EQ(r.pages[c->edge_b], c->page);
      } else {
        EXPECT_GE(std::get<MatchingViolation>(viol).edges.size(), 2u);
      }
    }
  }
}

TEST(Restrict, CompactsEmptiedPages) {
  // K4 congruence: page 0 holds only (1,3).
  BookEmbedding k4 = complete_embedding(4);
  Graph sub = delete_edge(complete(4), {1, 3});
  BookEmbedding r = restrict_embedding(k4, sub);
  EXPECT_EQ(r.page_count(), 3);
  EXPECT_TRUE(validate(r).valid);
  EXPECT_THROW(restrict_embedding(k4, complete(5)), StructuralError);
}

}  // namespace
}  // namespace mbook
