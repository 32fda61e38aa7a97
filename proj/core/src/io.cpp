#include "mbook/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace mbook {

using nlohmann::json;

std::string_view format_issue_name(FormatIssue issue) {
  switch (issue) {
    case FormatIssue::kSyntax: return "syntax";
    case FormatIssue::kMissingField: return "missing-field";
    case FormatIssue::kSelfLoop: return "self-loop";
    case FormatIssue::kDuplicateEdge: return "duplicate-edge";
    case FormatIssue::kIndexOutOfRange: return "index-out-of-range";
    case FormatIssue::kNonPermutationSpine: return "non-permutation-spine";
    case FormatIssue::kPageCountMismatch: return "page-count-mismatch";
    case FormatIssue::kNonContiguousPages: return "non-contiguous-pages";
    case FormatIssue::kGraphMismatch: return "graph-mismatch";
  }
  return "unknown";
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(FormatIssue::kMissingField, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw FormatError(FormatIssue::kSyntax, std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(FormatIssue::kSyntax, std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const json& x : j) out.push_back(as_int(x, what));
  return out;
}

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

json family_to_json(const Family& f) {
  json j;
  j["kind"] = f.kind;
  j["params"] = json::object();
  for (const auto& [k, v] : f.params) j["params"][k] = v;
  if (f.left) j["left"] = graph_to_json(*f.left);
  if (f.right) j["right"] = graph_to_json(*f.right);
  return j;
}

Family family_from_json(const json& j) {
  Family f;
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw FormatError(FormatIssue::kSyntax, "family kind must be a string");
  f.kind = kind.get<std::string>();
  if (j.contains("params")) {
    const json& params = j.at("params");
    if (!params.is_object()) throw FormatError(FormatIssue::kSyntax, "family params must be an object");
    for (const auto& [k, v] : params.items()) f.params[k] = as_int(v, "family parameter");
  }
  if (j.contains("left")) f.left = std::make_shared<const Graph>(graph_from_json(j.at("left")));
  if (j.contains("right")) f.right = std::make_shared<const Graph>(graph_from_json(j.at("right")));
  return f;
}

Graph parse_graph(const json& j, bool require_canonical_order) {
  GraphMeta meta;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw FormatError(FormatIssue::kSyntax, "name must be a string");
    meta.name = j.at("name").get<std::string>();
  }
  const int n = as_int(field(j, "n"), "n");
  if (n < 0) throw FormatError(FormatIssue::kIndexOutOfRange, "n must be non-negative");
  const json& edges_json = field(j, "edges");
  if (!edges_json.is_array()) throw FormatError(FormatIssue::kSyntax, "edges must be an array");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (const json& pair : edges_json) {
    if (!pair.is_array() || pair.size() != 2) {
      throw FormatError(FormatIssue::kSyntax, "each edge must be a pair");
    }
    const int a = as_int(pair[0], "edge endpoint");
    const int b = as_int(pair[1], "edge endpoint");
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw FormatError(FormatIssue::kIndexOutOfRange,
                        "edge [" + std::to_string(a) + "," + std::to_string(b) +
                            "] has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (a == b) {
      throw FormatError(FormatIssue::kSelfLoop, "self-loop at vertex " + std::to_string(a));
    }
    const Edge e = make_edge(a, b);
    if (!seen.insert(e).second) {
      throw FormatError(FormatIssue::kDuplicateEdge,
                        "duplicate edge [" + std::to_string(e.u) + "," + std::to_string(e.v) + "]");
    }
    edges.push_back(e);
  }
  if (require_canonical_order && !std::is_sorted(edges.begin(), edges.end())) {
    throw FormatError(FormatIssue::kSyntax, "edges are not in canonical sorted order");
  }

  if (j.contains("labels")) {
    const json& labels = j.at("labels");
    if (!labels.is_array() || labels.size() != static_cast<std::size_t>(n)) {
      throw FormatError(FormatIssue::kSyntax, "labels must be an array with one entry per vertex");
    }
    for (const json& l : labels) {
      if (!l.is_array() || l.size() != 2) throw FormatError(FormatIssue::kSyntax, "label must be a pair");
      meta.labels.push_back({as_int(l[0], "label"), as_int(l[1], "label")});
    }
  }
  if (j.contains("family")) meta.family = family_from_json(j.at("family"));
  return Graph(n, std::move(edges), std::move(meta));
}

}  // namespace

json graph_to_json(const Graph& g) {
  json j;
  j["name"] = g.name();
  j["n"] = g.vertex_count();
  j["edges"] = json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back(edge_json(e));
  if (!g.labels().empty()) {
    j["labels"] = json::array();
    for (const ProductLabel& l : g.labels()) j["labels"].push_back(json::array({l.left, l.right}));
  }
  if (g.family()) j["family"] = family_to_json(*g.family());
  return j;
}

Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw FormatError(FormatIssue::kSyntax, "graph must be an object");
  return parse_graph(j, false);
}

json embedding_to_json(const EmbeddingRecord& rec) {
  const BookEmbedding& emb = rec.embedding;
  json j;
  j["graph"] = graph_to_json(emb.graph());
  j["spine"] = std::vector<int>(emb.spine().begin(), emb.spine().end());
  j["pages"] = std::vector<int>(emb.pages().begin(), emb.pages().end());
  j["page_count"] = emb.page_count();
  if (rec.scheme) j["scheme"] = *rec.scheme;
  j["repaired"] = rec.repaired;
  return j;
}

EmbeddingRecord embedding_from_json(const json& j) {
  if (!j.is_object()) throw FormatError(FormatIssue::kSyntax, "embedding must be an object");
  const json& graph_json = field(j, "graph");
  if (!graph_json.is_object()) throw FormatError(FormatIssue::kSyntax, "graph must be an object");
  Graph g = parse_graph(graph_json, true);
  std::vector<int> spine = int_array(field(j, "spine"), "spine");
  std::vector<int> pages = int_array(field(j, "pages"), "pages");
  const int declared = as_int(field(j, "page_count"), "page_count");

  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  if (spine.size() != static_cast<std::size_t>(n)) {
    throw FormatError(FormatIssue::kNonPermutationSpine,
                      "spine has " + std::to_string(spine.size()) + " entries for " +
                          std::to_string(n) + " vertices");
  }
  for (int v : spine) {
    if (v < 0 || v >= n || seen[v]) {
      throw FormatError(FormatIssue::kNonPermutationSpine,
                        "spine is not a permutation (entry " + std::to_string(v) + ")");
    }
    seen[v] = 1;
  }
  if (pages.size() != g.edge_count()) {
    throw FormatError(FormatIssue::kPageCountMismatch,
                      "pages has " + std::to_string(pages.size()) + " entries for " +
                          std::to_string(g.edge_count()) + " edges");
  }
  int max_page = -1;
  for (int p : pages) {
    if (p < 0) throw FormatError(FormatIssue::kIndexOutOfRange, "negative page index");
    if (p >= declared) {
      throw FormatError(FormatIssue::kIndexOutOfRange,
                        "page index " + std::to_string(p) + " not below page_count " +
                            std::to_string(declared));
    }
    max_page = std::max(max_page, p);
  }
  std::vector<char> used(std::max(declared, 0), 0);
  for (int p : pages) used[p] = 1;
  if (std::find(used.begin(), used.end(), 0) != used.end()) {
    throw FormatError(FormatIssue::kNonContiguousPages,
                      "page indices do not cover 0.." + std::to_string(declared - 1));
  }
  if (declared != max_page + 1) {
    throw FormatError(FormatIssue::kPageCountMismatch, "page_count disagrees with pages");
  }

  EmbeddingRecord rec;
  rec.embedding = BookEmbedding(std::move(g), std::move(spine), std::move(pages));
  if (j.contains("scheme")) {
    if (!j.at("scheme").is_string()) throw FormatError(FormatIssue::kSyntax, "scheme must be a string");
    rec.scheme = j.at("scheme").get<std::string>();
  }
  if (j.contains("repaired")) {
    if (!j.at("repaired").is_boolean()) throw FormatError(FormatIssue::kSyntax, "repaired must be a boolean");
    rec.repaired = j.at("repaired").get<bool>();
  }
  return rec;
}

json report_to_json(const ValidationReport& report, const Graph& g) {
  json j;
  j["valid"] = report.valid;
  j["page_count"] = report.page_count;
  j["crossings"] = report.crossing_count();
  j["matching_violations"] = report.matching_violation_count();
  j["violations"] = json::array();
  for (const Violation& v : report.violations) {
    json item;
    if (const auto* c = std::get_if<Crossing>(&v)) {
      item["kind"] = "crossing";
      item["page"] = c->page;
      item["edge_indices"] = json::array({c->edge_a, c->edge_b});
      item["edges"] = json::array({edge_json(g.edge(c->edge_a)), edge_json(g.edge(c->edge_b))});
    } else {
      const auto& m = std::get<MatchingViolation>(v);
      item["kind"] = "matching";
      item["page"] = m.page;
      item["vertex"] = m.vertex;
      item["edge_indices"] = m.edges;
      item["edges"] = json::array();
      for (std::size_t e : m.edges) item["edges"].push_back(edge_json(g.edge(e)));
    }
    j["violations"].push_back(std::move(item));
  }
  return j;
}

json certificate_to_json(const BoundCertificate& cert) {
  json j;
  j["value"] = cert.value;
  j["reasons"] = json::array();
  for (BoundReason r : cert.reasons) j["reasons"].push_back(std::string(bound_reason_name(r)));
  j["max_degree"] = cert.max_degree;
  j["chromatic_index"] = cert.chromatic_index ? json(*cert.chromatic_index) : json(nullptr);
  j["regular_degree"] = cert.regular_degree ? json(*cert.regular_degree) : json(nullptr);
  j["odd_cycle"] = cert.odd_cycle ? json(cert.odd_cycle->vertices) : json(nullptr);
  return j;
}

json solve_result_to_json(const SolveResult& result) {
  json j;
  j["value"] = result.value;
  j["exhaustive"] = result.exhaustive;
  j["timed_out"] = result.timed_out;
  j["lower_bound"] = certificate_to_json(result.bound);
  j["stats"] = {
      {"orders_explored", result.stats.orders_explored},
      {"infeasible_orders", result.stats.infeasible_orders},
      {"unknown_orders", result.stats.unknown_orders},
      {"coloring_nodes", result.stats.coloring_nodes},
      {"seconds", result.stats.seconds},
  };
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(FormatIssue::kSyntax, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw FormatError(FormatIssue::kSyntax, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("error writing " + path.string());
}

}  // namespace mbook
