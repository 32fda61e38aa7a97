#include "mbook/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>
#include <string_view>

namespace mbook {

namespace {

constexpr std::array<std::string_view, 12> kPalette{
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#393b79", "#637939"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", x);
  return buf;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string vertex_label(const Graph& g, int v) {
  if (g.labels().empty()) return std::to_string(v);
  const ProductLabel& l = g.labels()[v];
  return std::to_string(l.left) + "," + std::to_string(l.right);
}

}  // namespace

std::string render_svg(const BookEmbedding& emb, const ValidationReport& report,
                       const RenderOptions& opts) {
  const Graph& g = emb.graph();
  const int n = g.vertex_count();
  const int pages = emb.page_count();
  const double margin = 40.0;
  const double spacing = opts.vertex_spacing;
  const double max_radius = std::max(1, n - 1) * spacing / 2.0;
  const double row_height = max_radius + 2 * margin;
  const int rows = opts.per_page_rows ? std::max(pages, 1) : 1;
  const double width = 2 * margin + std::max(0, n - 1) * spacing;
  const double legend_top = rows * row_height;
  const double legend_height = 20.0 * (pages + 1);
  const double height = legend_top + legend_height;

  std::set<std::size_t> flagged;
  for (const Violation& v : report.violations) {
    if (const auto* c = std::get_if<Crossing>(&v)) {
      flagged.insert(c->edge_a);
      flagged.insert(c->edge_b);
    } else {
      const auto& m = std::get<MatchingViolation>(v);
      flagged.insert(m.edges.begin(), m.edges.end());
    }
  }

  auto x_of = [&](int pos) { return margin + pos * spacing; };
  auto spine_y = [&](int row) { return row * row_height + margin + max_radius; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<title>" + (g.name().empty() ? std::string("embedding") : xml_escape(g.name())) + ", " +
         std::to_string(pages) + " pages</title>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (int row = 0; row < rows; ++row) {
    const double y = spine_y(row);
    out += "<line class=\"spine\" x1=\"" + num(x_of(0) - margin / 2) + "\" y1=\"" + num(y) +
           "\" x2=\"" + num(x_of(std::max(0, n - 1)) + margin / 2) + "\" y2=\"" + num(y) +
           "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }

  const auto position = emb.position();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const int page = emb.page_of(i);
    const int row = opts.per_page_rows ? page : 0;
    const int a = std::min(position[g.edge(i).u], position[g.edge(i).v]);
    const int b = std::max(position[g.edge(i).u], position[g.edge(i).v]);
    const double y = spine_y(row);
    const double r = (b - a) * spacing / 2.0;
    const bool bad = flagged.count(i) != 0;
    out += "<path class=\"arc page-" + std::to_string(page) + (bad ? " violation" : "") +
           "\" d=\"M " + num(x_of(a)) + " " + num(y) + " A " + num(r) + " " + num(r) +
           " 0 0 1 " + num(x_of(b)) + " " + num(y) + "\" fill=\"none\" stroke=\"" +
           std::string(kPalette[page % kPalette.size()]) + "\" stroke-width=\"" +
           (bad ? "3" : "1.5") + "\"" + (bad ? " stroke-dasharray=\"6 3\"" : "") + "/>\n";
  }

  for (int row = 0; row < rows; ++row) {
    const double y = spine_y(row);
    for (int pos = 0; pos < n; ++pos) {
      const int v = emb.spine()[pos];
      out += "<circle class=\"vertex\" cx=\"" + num(x_of(pos)) + "\" cy=\"" + num(y) +
             "\" r=\"4\" fill=\"black\"/>\n";
      out += "<text x=\"" + num(x_of(pos)) + "\" y=\"" + num(y + 18) +
             "\" font-size=\"11\" text-anchor=\"middle\">" + vertex_label(g, v) + "</text>\n";
    }
  }

  out += "<g class=\"legend\" font-size=\"12\">\n";
  for (int page = 0; page < pages; ++page) {
    const double y = legend_top + 20.0 * (page + 1);
    out += "<g class=\"legend-entry\"><line x1=\"" + num(margin) + "\" y1=\"" + num(y - 4) +
           "\" x2=\"" + num(margin + 24) + "\" y2=\"" + num(y - 4) + "\" stroke=\"" +
           std::string(kPalette[page % kPalette.size()]) +
           "\" stroke-width=\"3\"/><text x=\"" + num(margin + 32) + "\" y=\"" + num(y) +
           "\">page " + std::to_string(page) + "</text></g>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace mbook
