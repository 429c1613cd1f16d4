#include "twobridge/extended_diagram.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "twobridge/errors.hpp"

namespace twobridge {
namespace {

std::string describe(const GridPoint& x) {
  return "x(" + std::to_string(x.line) + "," + std::to_string(x.label) + ")";
}

// Arc incidence. Every in-band point has exactly one arc on each side except
// label 0 (no left arc) and label p (no right arc):
//   left side  = connecting arc from the previous line (h+1 <= j <= p+h)
//                or a bottom loop (1 <= |j| <= h)
//   right side = connecting arc to the next line (-h <= j <= p-h-1)
//                or a top loop (p-h <= j <= p+h, j != p)
class Incidence {
 public:
  explicit Incidence(const AdmissiblePair& x) : p_(x.p()), q_(x.q()), h_((x.q() - 1) / 2) {}

  DiagramArc left_arc(const GridPoint& x) const {
    const Int j = x.label;
    if (j >= h_ + 1 && j <= p_ + h_) {
      return {ArcKind::connecting, x, {x.line - 1, j - q_}, x.line - 1};
    }
    if (j != 0 && j >= -h_ && j <= h_) {
      return {ArcKind::bottom_loop, x, {x.line, -j}, x.line - 1};
    }
    throw ModelViolation("no left arc at " + describe(x));
  }

  DiagramArc right_arc(const GridPoint& x) const {
    const Int j = x.label;
    if (j >= -h_ && j <= p_ - h_ - 1) {
      return {ArcKind::connecting, x, {x.line + 1, j + q_}, x.line};
    }
    if (j != p_ && j >= p_ - h_ && j <= p_ + h_) {
      return {ArcKind::top_loop, x, {x.line, 2 * p_ - j}, x.line};
    }
    throw ModelViolation("no right arc at " + describe(x));
  }

 private:
  Int p_;
  Int q_;
  Int h_;
};

}  // namespace

Int UnderarcTrace::min_line() const noexcept {
  Int m = std::numeric_limits<Int>::max();
  for (const auto& x : points_) m = std::min(m, x.line);
  return m;
}

Int UnderarcTrace::max_line() const noexcept {
  Int m = std::numeric_limits<Int>::min();
  for (const auto& x : points_) m = std::max(m, x.line);
  return m;
}

UnderarcTrace trace_principal_underarc(const AdmissiblePair& x) {
  const Int p = x.p();
  const Int q = x.q();
  const Incidence incidence(x);
  UnderarcTrace t(x);

  // The walk can span at most p+3 lines with p+q points each.
  const Int max_steps = (p + 3) * (p + q) + 1;

  GridPoint cur{0, 0};
  t.points_.push_back(cur);
  bool arrived_from_left = true;  // label 0 has only a right arc
  while (cur.label != p) {
    if (static_cast<Int>(t.arcs_.size()) >= max_steps) {
      throw ModelViolation("underarc walk did not terminate for " + x.to_string());
    }
    if (cur.label == 0 && t.arcs_.size() > 0) {
      throw ModelViolation("underarc returned to label 0 at " + describe(cur));
    }
    DiagramArc arc = arrived_from_left ? incidence.right_arc(cur) : incidence.left_arc(cur);
    const GridPoint next = arc.to;
    // The arc reaches `next` from region `arc.region`; it leaves `next` on
    // the opposite side.
    arrived_from_left = arc.region == next.line - 1;
    if (!arrived_from_left && arc.region != next.line) {
      throw ModelViolation("arc region detached from " + describe(next));
    }
    t.arcs_.push_back(arc);
    t.points_.push_back(next);
    cur = next;
  }

  {
    auto sorted = t.points_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ModelViolation("principal underarc of " + x.to_string() + " is not embedded");
    }
  }

  Int left = std::numeric_limits<Int>::max();
  Int right = std::numeric_limits<Int>::min();
  for (const auto& pt : t.points_) {
    if (pt.label >= 0 && pt.label <= p) {
      left = std::min(left, pt.line);
      right = std::max(right, pt.line);
    }
  }
  t.line_offset_ = -left;
  t.length_ = right - left;
  for (auto& pt : t.points_) pt.line += t.line_offset_;
  for (auto& arc : t.arcs_) {
    arc.from.line += t.line_offset_;
    arc.to.line += t.line_offset_;
    arc.region += t.line_offset_;
  }

  std::vector<bool> covered(static_cast<std::size_t>(t.length_), false);
  for (const auto& arc : t.arcs_) {
    if (arc.kind != ArcKind::connecting) continue;
    if (arc.region < 0 || arc.region >= t.length_) {
      throw ModelViolation("connecting arc outside [W_0, W_l] for " + x.to_string());
    }
    covered[static_cast<std::size_t>(arc.region)] = true;
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw ModelViolation("gap in connecting-arc regions for " + x.to_string());
  }
  if ((t.length_ - p) % 2 != 0) {
    throw ModelViolation("length parity differs from p for " + x.to_string());
  }
  return t;
}

std::vector<Int> arc_sequence(const UnderarcTrace& t) {
  std::vector<Int> alpha(static_cast<std::size_t>(t.length()), 0);
  for (const auto& arc : t.arcs()) {
    if (arc.kind == ArcKind::connecting) ++alpha[static_cast<std::size_t>(arc.region)];
  }
  return alpha;
}

std::vector<Int> bottom_sequence(const UnderarcTrace& t) {
  std::vector<Int> b(static_cast<std::size_t>(t.length() + 1), 0);
  auto bump = [&](Int line, Int by) {
    if (line < 0 || line > t.length()) {
      throw ModelViolation("bottom sequence entry outside [0, l] for " + t.pair().to_string());
    }
    b[static_cast<std::size_t>(line)] += by;
  };
  bump(t.points().front().line, 1);
  for (const auto& arc : t.arcs()) {
    if (arc.kind == ArcKind::bottom_loop) bump(arc.from.line, 2);
  }
  return b;
}

std::vector<SignedCrossing> signed_crossings(const UnderarcTrace& t) {
  const Int p = t.pair().p();
  const auto& pts = t.points();
  const auto& arcs = t.arcs();
  std::vector<SignedCrossing> out;
  // Interior points always have an incoming arc k-1 and outgoing arc k.
  for (std::size_t k = 1; k + 1 < pts.size(); ++k) {
    if (pts[k].label <= 0 || pts[k].label >= p) continue;
    out.push_back({pts[k], arcs[k - 1].region < arcs[k].region ? 1 : -1});
  }
  return out;
}

Int diagram_signature(const UnderarcTrace& t) {
  Int sum = 0;
  for (const auto& c : signed_crossings(t)) sum += c.sign;
  return sum;
}

}  // namespace twobridge
