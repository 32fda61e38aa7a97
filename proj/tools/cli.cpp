#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <sstream>

#include "mbook/io.hpp"
#include "mbook/svg.hpp"

namespace mbook::cli {

namespace {

using nlohmann::json;

BookEmbedding rebind(const BookEmbedding& emb, const Graph& g) {
  if (!(emb.graph() == g)) {
    throw UsageError("family metadata of '" + g.name() + "' does not match its edges");
  }
  return BookEmbedding(g, std::vector<int>(emb.spine().begin(), emb.spine().end()),
                       std::vector<int>(emb.pages().begin(), emb.pages().end()));
}

Embedded solve_embedding(const Graph& g, const EmbedOptions& opts) {
  SolveResult r = exact_mbt(g, opts.solve);
  return Embedded{std::move(r.witness), "solver", false};
}

std::optional<Scheme> natural_scheme(const Graph& g) {
  if (!g.family()) return std::nullopt;
  const Family& f = *g.family();
  if (f.kind == "complete") return Scheme::kCompleteCongruence;
  if (f.kind == "cycle" && f.param("n") % 2 == 0) return Scheme::kEvenCycle;
  if (f.kind == "path" && f.param("n") >= 2) return Scheme::kPath;
  if (f.kind == "product" && f.left && f.right) return Scheme::kProduct;
  if (f.kind == "kpcq") {
    return f.param("q") % 2 == 0 ? Scheme::kKpcqEvenProduct : Scheme::kKpcqOddDirect;
  }
  return std::nullopt;
}

using Attempt = std::variant<std::monostate, Embedded, Unresolved>;

Attempt construct(const Graph& g, const EmbedOptions& opts);

// Any construction, else the exact solver.
Attempt construct_or_solve(const Graph& g, const EmbedOptions& opts) {
  Attempt a = construct(g, opts);
  if (std::holds_alternative<std::monostate>(a)) return solve_embedding(g, opts);
  return a;
}

std::optional<DispersableWitness> witness_for(const Graph& b, const EmbedOptions& opts) {
  Attempt a = construct(b, opts);
  std::optional<BookEmbedding> emb;
  if (auto* e = std::get_if<Embedded>(&a)) {
    emb = e->embedding;
  } else if (std::holds_alternative<std::monostate>(a) && b.vertex_count() <= 10 &&
             is_connected(b)) {
    SolveResult r = exact_mbt(b, opts.solve);
    if (r.exhaustive) emb = std::move(r.witness);
  }
  if (!emb) return std::nullopt;
  try {
    return DispersableWitness::from_embedding(std::move(*emb));
  } catch (const ConstructionError&) {
    return std::nullopt;
  }
}

Attempt run_scheme(Scheme scheme, const Graph& g, const EmbedOptions& opts) {
  const Family& f = *g.family();
  switch (scheme) {
    case Scheme::kCompleteCongruence:
      return Embedded{rebind(complete_embedding(g.vertex_count()), g), "complete-congruence"};
    case Scheme::kEvenCycle:
      return Embedded{rebind(even_cycle_embedding(g.vertex_count() / 2).embedding(), g),
                      "even-cycle"};
    case Scheme::kPath:
      return Embedded{rebind(path_witness(g.vertex_count()).embedding(), g), "path"};
    case Scheme::kProduct: {
      auto wit = witness_for(*f.right, opts);
      if (!wit) return std::monostate{};
      Attempt left = construct_or_solve(*f.left, opts);
      if (auto* u = std::get_if<Unresolved>(&left)) return *u;
      const auto& left_emb = std::get<Embedded>(left).embedding;
      return Embedded{rebind(product_embedding(left_emb, *wit), g),
                      std::string(scheme_name(Scheme::kProduct))};
    }
    case Scheme::kKpcqEvenProduct:
    case Scheme::kKpcqOddDirect: {
      KpcqResult r = kpcq_embedding(f.param("p"), f.param("q"), opts.repair);
      if (auto* u = std::get_if<Unresolved>(&r)) return *u;
      auto& outcome = std::get<ConstructionOutcome>(r);
      return Embedded{rebind(outcome.embedding, g), std::string(scheme_name(outcome.scheme)),
                      outcome.repaired};
    }
  }
  return std::monostate{};
}

Attempt construct(const Graph& g, const EmbedOptions& opts) {
  if (g.family() && g.family()->kind == "delete-edge" && g.family()->left) {
    Attempt base = construct(*g.family()->left, opts);
    if (auto* e = std::get_if<Embedded>(&base)) {
      try {
        e->embedding = restrict_embedding(e->embedding, g);
      } catch (const StructuralError& err) {
        throw UsageError(std::string("edge deletion metadata is inconsistent: ") + err.what());
      }
    }
    return base;
  }
  auto scheme = natural_scheme(g);
  if (!scheme) return std::monostate{};
  return run_scheme(*scheme, g, opts);
}

bool scheme_applies(Scheme scheme, const Graph& g) {
  if (!g.family()) return false;
  const Family& f = *g.family();
  switch (scheme) {
    case Scheme::kCompleteCongruence: return f.kind == "complete";
    case Scheme::kEvenCycle: return f.kind == "cycle" && f.param("n") % 2 == 0;
    case Scheme::kPath: return f.kind == "path" && f.param("n") >= 2;
    case Scheme::kProduct:
      return (f.kind == "product" || f.kind == "kpcq") && f.left && f.right;
    case Scheme::kKpcqOddDirect: return f.kind == "kpcq" && f.param("q") % 2 == 1;
    case Scheme::kKpcqEvenProduct: return f.kind == "kpcq" && f.param("q") % 2 == 0;
  }
  return false;
}

class Diagnostics {
 public:
  Diagnostics(std::ostream& err, const bool& quiet) : err_(err), quiet_(quiet) {}
  void operator()(const std::string& message) const {
    if (!quiet_) err_ << "mbook: " << message << "\n";
  }

 private:
  std::ostream& err_;
  const bool& quiet_;
};

void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& text) {
  if (path) {
    write_text_file(*path, text);
  } else {
    out << text;
  }
}

json graph_summary(const Graph& g) {
  return {{"name", g.name()}, {"n", g.vertex_count()}, {"edges", g.edge_count()},
          {"max_degree", max_degree(g)}};
}

Edge parse_edge_spec(const std::string& spec) {
  auto comma = spec.find(',');
  if (comma == std::string::npos) throw UsageError("--delete-edge expects u,v");
  try {
    return make_edge(std::stoi(spec.substr(0, comma)), std::stoi(spec.substr(comma + 1)));
  } catch (const std::logic_error&) {
    throw UsageError("--delete-edge expects u,v");
  }
}

}  // namespace

std::variant<Embedded, Unresolved> embed_graph(const Graph& g, const EmbedOptions& opts) {
  Attempt a;
  if (opts.method == "solver") {
    a = solve_embedding(g, opts);
  } else if (opts.method == "auto") {
    a = construct(g, opts);
    if (std::holds_alternative<std::monostate>(a)) a = solve_embedding(g, opts);
  } else if (opts.method.rfind("construction:", 0) == 0) {
    const std::string name = opts.method.substr(std::string("construction:").size());
    auto scheme = parse_scheme(name);
    if (!scheme) throw UsageError("unknown construction scheme '" + name + "'");
    if (!scheme_applies(*scheme, g)) {
      throw UsageError("scheme '" + name + "' does not apply to graph '" + g.name() + "'");
    }
    a = run_scheme(*scheme, g, opts);
    if (std::holds_alternative<std::monostate>(a)) {
      throw UsageError("scheme '" + name + "' could not be applied to '" + g.name() +
                       "' (factor is not dispersable)");
    }
  } else {
    throw UsageError("unknown method '" + opts.method + "'");
  }

  if (auto* u = std::get_if<Unresolved>(&a)) {
    if (!opts.solver_fallback) return *u;
    return solve_embedding(g, opts);
  }
  return std::get<Embedded>(std::move(a));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching book embeddings: generate, construct, verify, solve, render", "mbook"};
  app.require_subcommand(1);
  app.fallthrough();
  bool quiet = false;
  app.add_flag("--quiet", quiet, "Suppress diagnostics on stderr");
  Diagnostics diag(err, quiet);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph file");
  std::string family;
  int n = -1, p = -1, q = -1, a = -1, b = -1, d = -1;
  std::string left_path, right_path, delete_spec, gen_out;
  gen->add_option("--family", family,
                  "complete, cycle, path, complete-bipartite, hypercube, kpcq, product")
      ->required();
  gen->add_option("--n", n, "Vertex count (complete, cycle, path)");
  gen->add_option("--p", p, "Complete factor size (kpcq)");
  gen->add_option("--q", q, "Cycle length (kpcq)");
  gen->add_option("--a", a, "Left side (complete-bipartite)");
  gen->add_option("--b", b, "Right side (complete-bipartite)");
  gen->add_option("--d", d, "Dimension (hypercube)");
  gen->add_option("--left", left_path, "Left factor graph file (product)");
  gen->add_option("--right", right_path, "Right factor graph file (product)");
  gen->add_option("--delete-edge", delete_spec, "Remove edge u,v from the result");
  gen->add_option("-o,--output", gen_out, "Output graph file (default: stdout)");

  // embed
  auto* embed = app.add_subcommand("embed", "Build a matching book embedding");
  std::string embed_graph_path, embed_out;
  EmbedOptions embed_opts;
  double embed_timeout = 600.0;
  embed->add_option("graph", embed_graph_path, "Graph file")->required();
  embed->add_option("--method", embed_opts.method,
                    "auto, solver, or construction:<scheme>");
  embed->add_flag("--solver-fallback", embed_opts.solver_fallback,
                  "Use the exact solver when no construction resolves the graph");
  embed->add_option("--timeout", embed_timeout, "Solver wall-clock budget in seconds");
  embed->add_option("--jobs", embed_opts.solve.jobs, "Solver worker threads");
  embed->add_option("-o,--output", embed_out, "Output embedding file");

  // verify
  auto* verify = app.add_subcommand("verify", "Validate an embedding against a graph");
  std::string verify_graph_path, verify_emb_path;
  verify->add_option("graph", verify_graph_path, "Graph file")->required();
  verify->add_option("embedding", verify_emb_path, "Embedding file")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "Exact matching book thickness");
  std::string solve_graph_path, solve_out;
  SolveOptions solve_opts;
  double solve_timeout = 600.0;
  double per_order = 1.0;
  int start_pages = 0;
  bool no_symmetry = false;
  solve->add_option("graph", solve_graph_path, "Graph file")->required();
  solve->add_option("--max-pages", solve_opts.max_pages, "Largest page count to try");
  solve->add_option("--timeout", solve_timeout, "Wall-clock budget in seconds");
  solve->add_option("--per-order-timeout", per_order, "Budget per spine order in seconds");
  solve->add_option("--jobs", solve_opts.jobs, "Worker threads");
  solve->add_option("--start-pages", start_pages,
                    "First page count to try instead of the lower bound");
  solve->add_flag("--no-symmetry", no_symmetry, "Enumerate all spine orders");
  solve->add_option("-o,--output", solve_out, "Write the witness embedding here");

  // render
  auto* render = app.add_subcommand("render", "Draw an embedding as SVG");
  std::string render_emb_path, render_out;
  bool force = false, rows = false;
  render->add_option("embedding", render_emb_path, "Embedding file")->required();
  render->add_option("-o,--output", render_out, "Output SVG path (default: stdout)");
  render->add_flag("--force", force, "Render invalid embeddings with violations highlighted");
  render->add_flag("--rows", rows, "Draw each page on its own spine");

  std::vector<std::string> argv_storage{"mbook"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto opt_path = [](const std::string& s) -> std::optional<std::string> {
    if (s.empty()) return std::nullopt;
    return s;
  };

  try {
    if (gen->parsed()) {
      auto need = [&](int v, const char* flag) {
        if (v < 0) throw UsageError(std::string("--family ") + family + " needs " + flag);
        return v;
      };
      Graph g;
      if (family == "complete") {
        g = complete(need(n, "--n"));
      } else if (family == "cycle") {
        g = cycle(need(n, "--n"));
      } else if (family == "path") {
        g = path(need(n, "--n"));
      } else if (family == "complete-bipartite") {
        g = complete_bipartite(need(a, "--a"), need(b, "--b"));
      } else if (family == "hypercube") {
        g = hypercube(need(d, "--d"));
      } else if (family == "kpcq") {
        const int pp = need(p, "--p");
        const int qq = need(q, "--q");
        if (pp < 1) throw UsageError("kpcq needs p >= 1");
        g = kpcq(pp, qq);
      } else if (family == "product" || family == "product-of-files") {
        if (left_path.empty() || right_path.empty()) {
          throw UsageError("--family product needs --left and --right");
        }
        g = cartesian_product(graph_from_json(read_json_file(left_path)),
                              graph_from_json(read_json_file(right_path)));
      } else {
        throw UsageError("unknown family '" + family + "'");
      }
      if (!delete_spec.empty()) g = delete_edge(g, parse_edge_spec(delete_spec));
      emit(out, opt_path(gen_out), dump(graph_to_json(g)));
      if (!gen_out.empty()) out << dump({{"written", gen_out}, {"graph", graph_summary(g)}});
      return kOk;
    }

    if (embed->parsed()) {
      Graph g = graph_from_json(read_json_file(embed_graph_path));
      embed_opts.solve.timeout =
          std::chrono::milliseconds(static_cast<long long>(embed_timeout * 1000));
      auto result = embed_graph(g, embed_opts);
      if (auto* u = std::get_if<Unresolved>(&result)) {
        diag(u->reason);
        out << dump({{"resolved", false}, {"reason", u->reason}, {"graph", graph_summary(g)}});
        return kInvalid;
      }
      auto& e = std::get<Embedded>(result);
      ValidationReport report = validate(e.embedding);
      EmbeddingRecord rec{e.embedding, e.scheme, e.repaired};
      json summary = {{"resolved", true},
                      {"scheme", e.scheme},
                      {"repaired", e.repaired},
                      {"page_count", e.embedding.page_count()},
                      {"graph", graph_summary(g)},
                      {"report", report_to_json(report, e.embedding.graph())}};
      if (embed_out.empty()) {
        summary["embedding"] = embedding_to_json(rec);
      } else {
        write_text_file(embed_out, dump(embedding_to_json(rec)));
        summary["output"] = embed_out;
      }
      out << dump(summary);
      if (!report.valid) diag("construction produced an invalid embedding");
      return report.valid ? kOk : kInvalid;
    }

    if (verify->parsed()) {
      Graph g = graph_from_json(read_json_file(verify_graph_path));
      EmbeddingRecord rec = embedding_from_json(read_json_file(verify_emb_path));
      if (!(rec.embedding.graph() == g)) {
        throw FormatError(FormatIssue::kGraphMismatch,
                          "embedding refers to a different graph than " + verify_graph_path);
      }
      ValidationReport report = validate(rec.embedding);
      out << dump(report_to_json(report, g));
      if (!report.valid) {
        diag("invalid embedding: " + std::to_string(report.violations.size()) + " violations");
      }
      return report.valid ? kOk : kInvalid;
    }

    if (solve->parsed()) {
      Graph g = graph_from_json(read_json_file(solve_graph_path));
      solve_opts.timeout = std::chrono::milliseconds(static_cast<long long>(solve_timeout * 1000));
      solve_opts.per_order_timeout =
          std::chrono::milliseconds(static_cast<long long>(per_order * 1000));
      solve_opts.use_symmetry = !no_symmetry;
      if (start_pages > 0) solve_opts.start_pages = start_pages;
      SolveResult r = exact_mbt(g, solve_opts);
      json j = solve_result_to_json(r);
      j["graph"] = graph_summary(g);
      EmbeddingRecord rec{r.witness, std::string("solver"), false};
      if (solve_out.empty()) {
        j["witness"] = embedding_to_json(rec);
      } else {
        write_text_file(solve_out, dump(embedding_to_json(rec)));
        j["witness"] = solve_out;
      }
      out << dump(j);
      if (!r.exhaustive) diag("result is an upper bound only (search not exhaustive)");
      return r.exhaustive ? kOk : kInvalid;
    }

    if (render->parsed()) {
      EmbeddingRecord rec = embedding_from_json(read_json_file(render_emb_path));
      ValidationReport report = validate(rec.embedding);
      if (!report.valid && !force) {
        diag("embedding is invalid (" + std::to_string(report.violations.size()) +
             " violations); pass --force to render anyway");
        return kInvalid;
      }
      RenderOptions ropts;
      ropts.per_page_rows = rows;
      const std::string svg = render_svg(rec.embedding, report, ropts);
      if (render_out.empty()) {
        out << svg;
      } else {
        try {
          write_text_file(render_out, svg);
        } catch (const std::runtime_error& e) {
          throw UsageError(e.what());
        }
      }
      return kOk;
    }
  } catch (const FormatError& e) {
    diag(std::string("error[") + std::string(format_issue_name(e.issue())) + "]: " + e.what());
    return kUsage;
  } catch (const UsageError& e) {
    diag(std::string("error: ") + e.what());
    return kUsage;
  } catch (const GraphError& e) {
    diag(std::string("error[graph]: ") + e.what());
    return kUsage;
  } catch (const StructuralError& e) {
    diag(std::string("error[structure]: ") + e.what());
    return kUsage;
  } catch (const ConstructionError& e) {
    diag(std::string("internal error: ") + e.what() + " (" +
         std::to_string(e.violations().size()) + " violations)");
    return kInvalid;
  } catch (const std::runtime_error& e) {
    diag(std::string("error: ") + e.what());
    return kUsage;
  }
  return kUsage;
}

}  // namespace mbook::cli
