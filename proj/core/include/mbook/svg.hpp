#ifndef MBOOK_SVG_HPP
#define MBOOK_SVG_HPP

#include <string>

#include "mbook/layout.hpp"

namespace mbook {

struct RenderOptions {
  // One spine per page, stacked vertically, instead of a single spine.
  bool per_page_rows = false;
  double vertex_spacing = 40.0;
};

// Arc diagram: vertices evenly spaced on a horizontal spine in spine order,
// each edge a semicircle above it stroked in its page's color, plus a
// legend. Edges named in report violations are drawn dashed and thicker.
// Output depends only on the inputs.
std::string render_svg(const BookEmbedding& emb, const ValidationReport& report,
                       const RenderOptions& opts = {});

}  // namespace mbook

#endif  // MBOOK_SVG_HPP
