#include "twobridge/pair.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "twobridge/errors.hpp"

namespace twobridge {

bool is_admissible(Int p, Int q) {
  if (p < 1 || q < 1) {
    throw DomainError("pair components must be positive, got (" + std::to_string(p) + "," +
                      std::to_string(q) + ")");
  }
  return q % 2 == 1 && std::gcd(p, q) == 1;
}

AdmissiblePair AdmissiblePair::make(Int p, Int q) {
  if (!is_admissible(p, q)) {
    throw DomainError("(" + std::to_string(p) + "," + std::to_string(q) +
                      ") is not admissible: need gcd(p,q)=1 and q odd");
  }
  if (p > kMaxComponent || q > kMaxComponent) {
    throw DomainError("(" + std::to_string(p) + "," + std::to_string(q) +
                      ") exceeds the supported integer width");
  }
  return AdmissiblePair(p, q);
}

std::string AdmissiblePair::to_string() const {
  return "(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

std::string_view to_string(Move m) noexcept {
  switch (m) {
    case Move::T1:
      return "T1";
    case Move::T2:
      return "T2";
    case Move::T3:
      return "T3";
  }
  return "?";
}

AdmissiblePair apply_move(Move m, const AdmissiblePair& x) {
  const Int p = x.p();
  const Int q = x.q();
  switch (m) {
    case Move::T1:
      return AdmissiblePair::make(p + q, q);
    case Move::T2:
      return AdmissiblePair::make(p, 2 * p + q);
    case Move::T3:
      if (p <= q) {
        throw ApplicabilityError("T3 needs p > q, got " + x.to_string());
      }
      return AdmissiblePair::make(p, 2 * p - q);
  }
  throw DomainError("unknown move");
}

AdmissiblePair replay(std::span<const Move> moves) {
  auto x = AdmissiblePair::make(1, 1);
  for (Move m : moves) x = apply_move(m, x);
  return x;
}

MoveSequence decompose(const AdmissiblePair& x) {
  MoveSequence inverse;
  Int p = x.p();
  Int q = x.q();
  // Each branch strictly lowers p+q, and for admissible pairs other than
  // (1,1) exactly one branch applies.
  while (p != 1 || q != 1) {
    if (p > q) {
      p -= q;
      inverse.push_back(Move::T1);
    } else if (q > 2 * p) {
      q -= 2 * p;
      inverse.push_back(Move::T2);
    } else {
      q = 2 * p - q;
      inverse.push_back(Move::T3);
    }
  }
  std::reverse(inverse.begin(), inverse.end());
  return inverse;
}

bool respects_t3_rule(std::span<const Move> moves) noexcept {
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (moves[i] == Move::T3 && (i == 0 || moves[i - 1] != Move::T1)) return false;
  }
  return true;
}

std::size_t trailing_t1_count(std::span<const Move> moves) noexcept {
  std::size_t n = 0;
  for (auto it = moves.rbegin(); it != moves.rend() && *it == Move::T1; ++it) ++n;
  return n;
}

std::string format_moves(std::span<const Move> moves) {
  std::string out;
  for (Move m : moves) {
    if (!out.empty()) out += ' ';
    out += to_string(m);
  }
  return out;
}

MoveSequence parse_moves(std::string_view text) {
  MoveSequence moves;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "T1") {
      moves.push_back(Move::T1);
    } else if (token == "T2") {
      moves.push_back(Move::T2);
    } else if (token == "T3") {
      moves.push_back(Move::T3);
    } else {
      throw DomainError("unknown move token '" + token + "'");
    }
  }
  return moves;
}

Int signature_closed_form(const AdmissiblePair& x) {
  const Int p = x.p();
  const Int q = x.q();
  Int sum = 0;
  for (Int i = 1; i < p; ++i) sum += ((i * q) / p) % 2 == 0 ? 1 : -1;
  return sum;
}

CanonicalType canonical_type(const AdmissiblePair& x) {
  // q odd and 2p even, so the residue is odd and nonzero.
  return {AdmissiblePair::make(x.p(), x.q() % (2 * x.p())), false};
}

}  // namespace twobridge
