#ifndef MBOOK_IO_HPP
#define MBOOK_IO_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "mbook/constructions.hpp"
#include "mbook/graph.hpp"
#include "mbook/layout.hpp"
#include "mbook/solver.hpp"

namespace mbook {

// What went wrong while reading a graph or embedding file.
enum class FormatIssue {
  kSyntax,
  kMissingField,
  kSelfLoop,
  kDuplicateEdge,
  kIndexOutOfRange,
  kNonPermutationSpine,
  kPageCountMismatch,
  kNonContiguousPages,
  kGraphMismatch,
};

std::string_view format_issue_name(FormatIssue issue);

class FormatError : public std::runtime_error {
 public:
  FormatError(FormatIssue issue, const std::string& what)
      : std::runtime_error(what), issue_(issue) {}
  FormatIssue issue() const { return issue_; }

 private:
  FormatIssue issue_;
};

// Embedding plus the provenance recorded alongside it on disk.
struct EmbeddingRecord {
  BookEmbedding embedding;
  std::optional<std::string> scheme;
  bool repaired = false;
};

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json embedding_to_json(const EmbeddingRecord& rec);
EmbeddingRecord embedding_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ValidationReport& report, const Graph& g);
nlohmann::json certificate_to_json(const BoundCertificate& cert);
nlohmann::json solve_result_to_json(const SolveResult& result);

// Two-space indented JSON with a trailing newline.
std::string dump(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
// Throws std::runtime_error if the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace mbook

#endif  // MBOOK_IO_HPP
