#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twobridge {

using Int = std::int64_t;

/// Upper bound on either component so that products p*q and the results of
/// any single T-move stay well inside 64-bit range.
inline constexpr Int kMaxComponent = Int{1} << 30;

/// True iff gcd(p, q) = 1 and q is odd. Throws DomainError for p < 1 or q < 1.
bool is_admissible(Int p, Int q);

/// A coprime pair (p, q) with q odd. Only constructible through make(), so
/// every instance is admissible.
class AdmissiblePair {
 public:
  static AdmissiblePair make(Int p, Int q);

  Int p() const noexcept { return p_; }
  Int q() const noexcept { return q_; }

  /// True when the pair lies in the Schubert range 0 < q < 2p.
  bool is_canonical() const noexcept { return q_ < 2 * p_; }

  /// 1 for a knot (p odd), 2 for a two-component link.
  int components() const noexcept { return p_ % 2 == 1 ? 1 : 2; }

  std::string to_string() const;

  friend auto operator<=>(const AdmissiblePair&, const AdmissiblePair&) = default;

 private:
  AdmissiblePair(Int p, Int q) noexcept : p_(p), q_(q) {}

  Int p_;
  Int q_;
};

enum class Move { T1, T2, T3 };

std::string_view to_string(Move m) noexcept;

/// Moves applied left to right starting from (1,1).
using MoveSequence = std::vector<Move>;

/// T1: (p,q) -> (p+q,q); T2: (p,q) -> (p,2p+q); T3: (p,q) -> (p,2p-q).
/// T3 requires p > q and throws ApplicabilityError otherwise.
AdmissiblePair apply_move(Move m, const AdmissiblePair& x);

/// Replays moves starting from (1,1).
AdmissiblePair replay(std::span<const Move> moves);

/// Greedy inverse decomposition: peel T1^-1 while p > q, T2^-1 while q > 2p,
/// and T3^-1 when p < q < 2p, then reverse. Replaying the result from (1,1)
/// returns x.
MoveSequence decompose(const AdmissiblePair& x);

/// Every T3 is immediately preceded by a T1.
bool respects_t3_rule(std::span<const Move> moves) noexcept;

/// Number of consecutive T1 moves at the end of the sequence.
std::size_t trailing_t1_count(std::span<const Move> moves) noexcept;

/// "T2 T1" style rendering; empty string for the empty sequence.
std::string format_moves(std::span<const Move> moves);

/// Parses the format_moves() rendering. Throws DomainError on unknown tokens.
MoveSequence parse_moves(std::string_view text);

/// sum_{i=1}^{p-1} (-1)^floor(iq/p); 0 for p = 1.
Int signature_closed_form(const AdmissiblePair& x);

struct CanonicalType {
  AdmissiblePair pair;
  bool mirrored;
};

/// Reduces q modulo 2p into the Schubert range. Mirror pairs (p,q) and
/// (p,2p-q) are left distinct, so mirrored is always false.
CanonicalType canonical_type(const AdmissiblePair& x);

}  // namespace twobridge
