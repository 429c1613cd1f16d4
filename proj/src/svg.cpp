#include "twobridge/svg.hpp"

#include <sstream>

#include "twobridge/errors.hpp"

namespace twobridge {
namespace {

constexpr Int kLineGap = 80;
constexpr Int kLabelGap = 24;
constexpr Int kMargin = 40;

struct Layout {
  Int min_line;
  Int max_label;

  Int x(Int line) const { return kMargin + (line - min_line) * kLineGap; }
  Int y(Int label) const { return kMargin + (max_label - label) * kLabelGap; }
};

}  // namespace

std::string render_svg(const UnderarcTrace& t) {
  const Int p = t.pair().p();
  const Int h = (t.pair().q() - 1) / 2;
  const Int min_line = t.min_line();
  const Int max_line = t.max_line();
  const Layout at{min_line, p + h};
  const Int width = 2 * kMargin + (max_line - min_line) * kLineGap;
  const Int height = 2 * kMargin + (p + 2 * h) * kLabelGap;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<title>extended diagram " << t.pair().to_string() << "</title>\n"
      << "<style>.grid{stroke:#bbb;stroke-width:1}"
      << ".overarc{stroke:#000;stroke-width:4}"
      << ".underarc{fill:none;stroke:#1a9850;stroke-width:3}"
      << ".mark{font:10px sans-serif;fill:#555}"
      << ".crossing-sign{font:bold 14px sans-serif}</style>\n";

  for (Int line = min_line; line <= max_line; ++line) {
    const Int x = at.x(line);
    svg << "<line class=\"grid\" x1=\"" << x << "\" y1=\"" << at.y(p + h) << "\" x2=\"" << x
        << "\" y2=\"" << at.y(-h) << "\"/>\n";
    if (line >= 0 && line <= t.length()) {
      svg << "<line class=\"overarc\" data-line=\"" << line << "\" x1=\"" << x << "\" y1=\""
          << at.y(p) << "\" x2=\"" << x << "\" y2=\"" << at.y(0) << "\"/>\n";
      svg << "<text class=\"mark\" x=\"" << x - 6 << "\" y=\"" << height - kMargin / 4
          << "\">W" << line << "</text>\n";
    }
    for (Int label = 0; label <= p; ++label) {
      svg << "<text class=\"mark\" x=\"" << x + 4 << "\" y=\"" << at.y(label) + 4 << "\">"
          << label << "</text>\n";
    }
  }

  // Loops bulge half a line gap into their region.
  svg << "<path class=\"underarc\" d=\"M " << at.x(t.points().front().line) << ' '
      << at.y(t.points().front().label);
  for (const auto& arc : t.arcs()) {
    const Int x2 = at.x(arc.to.line);
    const Int y2 = at.y(arc.to.label);
    if (arc.kind == ArcKind::connecting) {
      svg << " L " << x2 << ' ' << y2;
    } else {
      const Int bulge = arc.kind == ArcKind::bottom_loop ? -kLineGap / 2 : kLineGap / 2;
      const Int cy = (at.y(arc.from.label) + y2) / 2;
      svg << " Q " << at.x(arc.from.line) + bulge << ' ' << cy << ' ' << x2 << ' ' << y2;
    }
  }
  svg << "\"/>\n";

  for (const auto& c : signed_crossings(t)) {
    svg << "<text class=\"crossing-sign\" data-sign=\"" << c.sign << "\" x=\""
        << at.x(c.at.line) + 6 << "\" y=\"" << at.y(c.at.label) - 6 << "\" fill=\""
        << (c.sign > 0 ? "#d73027" : "#4575b4") << "\">" << (c.sign > 0 ? '+' : '-')
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_svg(const AdmissiblePair& x) {
  if (x.p() + x.q() > kSvgRenderBound) {
    throw DomainError("p+q = " + std::to_string(x.p() + x.q()) + " exceeds the render bound " +
                      std::to_string(kSvgRenderBound));
  }
  return render_svg(trace_principal_underarc(x));
}

}  // namespace twobridge
