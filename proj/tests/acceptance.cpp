// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
// and exits non-zero if any criterion fails.
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "cli.hpp"
#include "mbook/constructions.hpp"
#include "mbook/io.hpp"
#include "mbook/solver.hpp"
#include "oracles.hpp"

namespace {

using namespace mbook;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << what << "; ";
    ok = ok && cond;
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_seconds;
  std::function<void(Check&)> body;
};

int cli_call(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out) *out = o.str();
  return code;
}

void construction_grid(Check& c) {
  const fs::path dir = fs::temp_directory_path() / "mbook-acceptance-grid";
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (int p = 4; p <= 8; ++p) {
    for (int q = 3; q <= 8; ++q) {
      const std::string tag = "K" + std::to_string(p) + "xC" + std::to_string(q);
      const std::string graph_file = (dir / (tag + ".json")).string();
      const std::string emb_file = (dir / (tag + ".emb.json")).string();
      c.require(cli_call({"gen", "--family", "kpcq", "--p", std::to_string(p), "--q",
                          std::to_string(q), "-o", graph_file}) == 0,
                tag + ": gen failed");
      std::string out;
      c.require(cli_call({"embed", graph_file, "-o", emb_file}, &out) == 0, tag + ": embed failed");
      if (!c.ok) break;
      EmbeddingRecord rec = embedding_from_json(read_json_file(emb_file));
      const int delta = max_degree(rec.embedding.graph());
      c.require(validate(rec.embedding).valid, tag + ": not validator-clean");
      c.require(rec.embedding.page_count() == delta + 1 && delta + 1 == p + 2,
                tag + ": " + std::to_string(rec.embedding.page_count()) + " pages");
      c.require(cli_call({"verify", graph_file, emb_file}) == 0, tag + ": verify failed");
    }
  }
  fs::remove_all(dir);
  c.detail << "30 instances";
}

void reference_instances(Check& c) {
  for (auto [p, expected] : {std::pair{5, 7}, std::pair{6, 8}}) {
    auto r = cli::embed_graph(kpcq(p, 3), {});
    const auto& e = std::get<cli::Embedded>(r);
    c.require(validate(e.embedding).valid && e.embedding.page_count() == expected,
              "K" + std::to_string(p) + "xC3: " + std::to_string(e.embedding.page_count()) + " pages");
  }
  Graph gb = cartesian_product(delete_edge(complete(5), {0, 1}), path(3));
  cli::EmbedOptions opts;
  opts.method = "construction:product-lemma2.5";
  auto r = cli::embed_graph(gb, opts);
  const auto& e = std::get<cli::Embedded>(r);
  c.require(validate(e.embedding).valid && e.embedding.page_count() == 7,
            "(K5-e)xP3: " + std::to_string(e.embedding.page_count()) + " pages");
  c.detail << "7, 8, 7 pages";
}

void product_sweep(Check& c) {
  std::vector<std::pair<std::string, BookEmbedding>> factors;
  for (int p : {3, 4, 5}) factors.emplace_back("K" + std::to_string(p), complete_embedding(p));
  for (const Graph& g : {delete_edge(complete(5), {0, 1}), cycle(5)}) {
    SolveResult r = exact_mbt(g);
    c.require(r.exhaustive, g.name() + ": solver not exhaustive");
    factors.emplace_back(g.name(), r.witness);
  }
  const std::vector<std::pair<std::string, DispersableWitness>> bases{
      {"P3", path_witness(3)}, {"C4", even_cycle_embedding(2)}, {"C6", even_cycle_embedding(3)}};
  int count = 0;
  for (const auto& [gname, g_emb] : factors) {
    for (const auto& [bname, b] : bases) {
      BookEmbedding prod = product_embedding(g_emb, b);
      const int expected = g_emb.page_count() + max_degree(b.embedding().graph());
      c.require(validate(prod).valid, gname + "x" + bname + ": invalid");
      c.require(prod.page_count() == expected,
                gname + "x" + bname + ": " + std::to_string(prod.page_count()) + " pages, expected " +
                    std::to_string(expected));
      c.require(prod.graph() == cartesian_product(g_emb.graph(), b.embedding().graph()),
                gname + "x" + bname + ": wrong graph");
      ++count;
    }
  }
  c.detail << count << " products";
}

// Solves from the lower bound and again from one page, so that the value
// is also established without relying on the bound.
void solver_oracles(Check& c, const std::vector<std::pair<Graph, int>>& cases) {
  for (const auto& [g, expected] : cases) {
    SolveResult r = exact_mbt(g);
    SolveOptions from_one;
    from_one.start_pages = 1;
    SolveResult s = exact_mbt(g, from_one);
    c.require(r.value == expected && r.exhaustive,
              g.name() + ": " + std::to_string(r.value) + (r.exhaustive ? "" : " (not exhaustive)"));
    c.require(s.value == expected && s.exhaustive,
              g.name() + " from 1 page: " + std::to_string(s.value) +
                  (s.exhaustive ? "" : " (not exhaustive)"));
    c.require(validate(r.witness).valid && r.witness.page_count() == expected,
              g.name() + ": witness invalid");
    c.detail << g.name() << "=" << r.value << " ";
  }
}

void smallest_instance(Check& c) {
  const Graph g = kpcq(3, 3);
  SolveOptions opts;
  opts.start_pages = 4;  // search below the certified bound as well
  opts.per_order_timeout = std::chrono::seconds(60);
  opts.timeout = std::chrono::minutes(15);
  opts.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  SolveResult r = exact_mbt(g, opts);
  c.require(r.exhaustive, "search not exhaustive");
  c.require(r.value == 5, "CONFLICT with mbt = Delta + 1: exact value " + std::to_string(r.value) + ", expected 5");
  c.require(validate(r.witness).valid && r.witness.page_count() == r.value, "witness invalid");
  const BoundCertificate& cert = r.bound;
  c.require(cert.value == 5 && cert.has_reason(BoundReason::kRegularNonbipartite) &&
                cert.regular_degree == 4 && cert.odd_cycle.has_value(),
            "lower-bound certificate does not give 4-regular + odd cycle => 5");
  c.require(recheck_certificate(g, cert), "certificate does not re-validate");
  SolveOptions four = opts;
  four.max_pages = 4;
  SolveResult at_four = exact_mbt(g, four);
  const std::uint64_t canonical = spine_order_count(9, true) / 2;
  c.require(at_four.stats.infeasible_orders == canonical && at_four.stats.unknown_orders == 0 &&
                !at_four.exhaustive,
            "not every order was proven infeasible at 4 pages");
  c.detail << "value " << r.value << ", " << at_four.stats.infeasible_orders << "/" << canonical
           << " orders infeasible at 4 pages";
}

void validator_equivalence(Check& c) {
  std::mt19937 rng(20241014);
  int valid = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::uniform_int_distribution<int> size(1, 12);
    const int n = size(rng);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    Graph g = oracle::random_graph(rng, n, density(rng));
    std::uniform_int_distribution<int> kdist(1, 6);
    const int k = kdist(rng);
    std::uniform_int_distribution<int> page(0, k - 1);
    std::vector<int> pages;
    for (std::size_t i = 0; i < g.edge_count(); ++i) pages.push_back(page(rng));
    pages = compact_pages(pages);
    std::vector<int> spine = oracle::random_spine(rng, n);
    ValidationReport rep = validate(BookEmbedding(g, spine, pages));
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    oracle::Verdict v = oracle::brute_validate(edges, spine, pages);
    c.require(rep.valid == v.valid && rep.crossing_count() == v.crossings &&
                  rep.matching_violation_count() == v.matching_violations,
              "mismatch at trial " + std::to_string(trial));
    valid += v.valid;
  }
  c.detail << "1000 cases, " << valid << " valid";
}

void symmetry_soundness(Check& c) {
  std::vector<Graph> graphs;
  for (int n = 1; n <= 6; ++n) graphs.push_back(complete(n));
  for (int n = 3; n <= 6; ++n) graphs.push_back(cycle(n));
  for (int n = 1; n <= 6; ++n) graphs.push_back(path(n));
  for (int a = 1; a <= 3; ++a)
    for (int b = a; a + b <= 6; ++b) graphs.push_back(complete_bipartite(a, b));
  for (int d = 0; d <= 2; ++d) graphs.push_back(hypercube(d));
  graphs.push_back(kpcq(1, 3));
  graphs.push_back(kpcq(2, 3));
  graphs.push_back(cartesian_product(path(2), path(3)));
  graphs.push_back(cartesian_product(complete(3), path(2)));
  for (const Graph& g : graphs) {
    SolveOptions sym, full;
    sym.start_pages = full.start_pages = 1;
    full.use_symmetry = false;
    SolveResult a = exact_mbt(g, sym);
    SolveResult b = exact_mbt(g, full);
    c.require(a.exhaustive && b.exhaustive, g.name() + ": not exhaustive");
    c.require(a.value == b.value, g.name() + ": " + std::to_string(a.value) + " vs " +
                                      std::to_string(b.value));
  }
  c.detail << graphs.size() << " graphs";
}

void lower_bound_behavior(Check& c) {
  struct Case {
    Graph g;
    bool regular_nonbipartite;
  };
  std::vector<Case> cases;
  for (int p = 3; p <= 8; ++p)
    for (int q = 3; q <= 8; ++q) cases.push_back({kpcq(p, q), true});
  for (int k = 1; k <= 4; ++k) cases.push_back({complete(2 * k + 1), true});
  for (int n = 3; n <= 11; n += 2) cases.push_back({cycle(n), true});
  for (int n = 4; n <= 10; n += 2) cases.push_back({cycle(n), false});
  for (int n = 2; n <= 6; ++n) cases.push_back({path(n), false});
  cases.push_back({complete_bipartite(2, 3), false});
  cases.push_back({complete_bipartite(3, 3), false});
  cases.push_back({hypercube(3), false});
  cases.push_back({delete_edge(complete(5), {0, 1}), false});
  cases.push_back({delete_edge(complete(4), {0, 1}), false});
  cases.push_back({complete(2), false});
  for (const auto& [g, rnb] : cases) {
    BoundCertificate cert = lower_bound(g);
    const int delta = max_degree(g);
    if (rnb) {
      c.require(cert.value == delta + 1 && cert.has_reason(BoundReason::kRegularNonbipartite),
                g.name() + ": expected Delta+1");
    } else {
      c.require(!cert.has_reason(BoundReason::kRegularNonbipartite),
                g.name() + ": regular-nonbipartite reason on a non-member");
      const bool delta_or_index =
          cert.value == delta || (cert.chromatic_index && cert.value == *cert.chromatic_index);
      c.require(delta_or_index, g.name() + ": bound is neither Delta nor chi'");
      if (g.edge_count() <= 12) {
        std::vector<Edge> edges(g.edges().begin(), g.edges().end());
        const int index = oracle::brute_chromatic_index(edges, g.vertex_count());
        c.require(cert.value == std::max(delta, index), g.name() + ": disagrees with brute chi'");
      }
    }
    c.require(recheck_certificate(g, cert), g.name() + ": certificate does not re-validate");
  }
  c.detail << cases.size() << " graphs";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "construction grid p=4..8, q=3..8 in p+2 pages", 10, construction_grid},
      {2, "reference instances K5xC3, K6xC3, (K5-e)xP3", 60, reference_instances},
      {3, "product construction sweep", 5, product_sweep},
      {4, "dispersable graphs via exact solver", 60,
       [](Check& c) {
         solver_oracles(c, {{cycle(4), 2}, {cycle(6), 2}, {complete_bipartite(3, 3), 3},
                            {hypercube(3), 3}, {path(5), 2}});
       }},
      {5, "non-bipartite graphs via exact solver", 120,
       [](Check& c) {
         solver_oracles(c, {{cycle(3), 3}, {cycle(5), 3}, {complete(4), 4}, {complete(5), 5}});
       }},
      {6, "exact mbt(K3xC3) with matching lower-bound certificate", 15 * 60, smallest_instance},
      {7, "validator agrees with brute-force oracle", 60, validator_equivalence},
      {8, "symmetry reduction preserves exact values (n <= 6)", 120, symmetry_soundness},
      {9, "lower bound is Delta+1 exactly on regular non-bipartite graphs", 120,
       lower_bound_behavior},
  };

  int failures = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = Clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (check.ok && seconds > cr.time_limit_seconds) {
      check.ok = false;
      check.detail << "; exceeded " << cr.time_limit_seconds << " s";
    }
    failures += !check.ok;
    std::cout << (check.ok ? "PASS" : "FAIL") << " AC" << cr.id << " " << cr.title << " ["
              << check.detail.str() << "] " << std::fixed << std::setprecision(2) << seconds
              << " s" << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
