#pragma once

#include <string>

#include "twobridge/extended_diagram.hpp"

namespace twobridge {

/// Largest p + q accepted by render_svg.
inline constexpr Int kSvgRenderBound = 200;

/// SVG 1.1 drawing of the extended diagram around the principal underarc:
/// one vertical grid line per line the trace touches, overarc segments
/// [0, p] emphasized on W_0..W_l, the underarc as a highlighted path and a
/// +/- annotation at every crossing. Integer coordinates only.
std::string render_svg(const UnderarcTrace& t);

/// Traces x and renders it. Throws DomainError when p + q > kSvgRenderBound.
std::string render_svg(const AdmissiblePair& x);

}  // namespace twobridge
