#pragma once

#include <compare>
#include <vector>

#include "twobridge/pair.hpp"

namespace twobridge {

/// Point x_{line,label} of the extended diagram. Labels run over
/// [-(q-1)/2, p+(q-1)/2]; labels in [0, p] sit on an overarc.
struct GridPoint {
  Int line;
  Int label;

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

enum class ArcKind { connecting, bottom_loop, top_loop };

/// An underarc segment lying between grid lines `region` and `region + 1`.
///  - connecting:  (i,j) -> (i+1,j+q), region i
///  - bottom_loop: (i,j) <-> (i,-j),   region i-1
///  - top_loop:    (i,p-j) <-> (i,p+j), region i
/// `from`/`to` follow the traversal direction of the trace.
struct DiagramArc {
  ArcKind kind;
  GridPoint from;
  GridPoint to;
  Int region;
};

struct SignedCrossing {
  GridPoint at;
  int sign;
};

/// The principal underarc: the one through raw point (0,0), walked from its
/// label-0 end to its label-p end, with lines shifted so that the leftmost
/// line met at an overarc label is W_0.
class UnderarcTrace {
 public:
  const AdmissiblePair& pair() const noexcept { return pair_; }
  const std::vector<GridPoint>& points() const noexcept { return points_; }
  const std::vector<DiagramArc>& arcs() const noexcept { return arcs_; }
  Int length() const noexcept { return length_; }
  /// normalized line = raw line + line_offset
  Int line_offset() const noexcept { return line_offset_; }

  /// Leftmost and rightmost lines touched at any label (normalized).
  Int min_line() const noexcept;
  Int max_line() const noexcept;

 private:
  friend UnderarcTrace trace_principal_underarc(const AdmissiblePair& x);

  explicit UnderarcTrace(AdmissiblePair pair) : pair_(pair) {}

  AdmissiblePair pair_;
  std::vector<GridPoint> points_;
  std::vector<DiagramArc> arcs_;
  Int length_ = 0;
  Int line_offset_ = 0;
};

/// Walks the principal underarc. Throws ModelViolation if the walk breaks
/// any structural invariant (revisits a point, fails to terminate, ends on
/// the wrong label, leaves a gap in the connecting-arc regions).
UnderarcTrace trace_principal_underarc(const AdmissiblePair& x);

/// alpha_r = number of connecting arcs in region r, r = 0..l-1.
std::vector<Int> arc_sequence(const UnderarcTrace& t);

/// b_i = 2 * (bottom loops at W_i) + [trace starts on W_i], i = 0..l.
std::vector<Int> bottom_sequence(const UnderarcTrace& t);

/// One crossing per visited point with 0 < label < p; +1 when the walk
/// passes the line left to right.
std::vector<SignedCrossing> signed_crossings(const UnderarcTrace& t);

Int diagram_signature(const UnderarcTrace& t);

}  // namespace twobridge
