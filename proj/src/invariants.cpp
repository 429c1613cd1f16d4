#include "twobridge/invariants.hpp"

#include <cstdlib>
#include <numeric>

#include "twobridge/errors.hpp"

namespace twobridge {

Int AlexanderPolynomial::determinant() const noexcept {
  return std::accumulate(coeffs.begin(), coeffs.end(), Int{0});
}

Int AlexanderPolynomial::at_one() const noexcept {
  Int s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += i % 2 == 0 ? coeffs[i] : -coeffs[i];
  return s;
}

std::string AlexanderPolynomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Int a = coeffs[i];
    if (i == 0) {
      out += std::to_string(a);
      continue;
    }
    out += i % 2 == 0 ? " + " : " - ";
    if (a != 1) out += std::to_string(a);
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::optional<std::string> shape_violation(const AlexanderPolynomial& a) {
  const auto& c = a.coeffs;
  if (c.empty()) return "empty coefficient list";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1) return "non-positive coefficient a_" + std::to_string(i);
    if (c[i] != c[c.size() - 1 - i]) return "not palindromic at a_" + std::to_string(i);
  }
  const Int expected = c.size() % 2 == 1 ? 1 : 0;
  if (std::abs(a.at_one()) != expected) {
    return "Delta(1) = " + std::to_string(a.at_one()) + ", expected magnitude " +
           std::to_string(expected);
  }
  return std::nullopt;
}

AlexanderPolynomial alexander(const UnderarcTrace& t) {
  AlexanderPolynomial a{arc_sequence(t)};
  if (auto bad = shape_violation(a)) {
    throw ModelViolation("Alexander polynomial of " + t.pair().to_string() + ": " + *bad);
  }
  return a;
}

std::optional<Int> TrapezoidProfile::plateau_length() const {
  if (!i0) return std::nullopt;
  return l - 2 * (*i0 - 1);
}

TrapezoidProfile trapezoid_profile(std::span<const Int> coeffs) {
  TrapezoidProfile prof;
  const auto n = coeffs.size();
  prof.l = static_cast<Int>(n);
  if (n == 0) return prof;

  std::size_t start = 0;
  while (start + 1 < n && coeffs[start] < coeffs[start + 1]) ++start;
  std::size_t end = start;
  while (end + 1 < n && coeffs[end] == coeffs[end + 1]) ++end;
  for (std::size_t i = end; i + 1 < n; ++i) {
    if (coeffs[i] <= coeffs[i + 1]) return prof;
  }
  // Plateau must be centred: it spans i0-1 .. l-i0.
  const Int i0 = static_cast<Int>(start) + 1;
  if (static_cast<Int>(end) != prof.l - i0) return prof;

  prof.is_trapezoidal = true;
  prof.i0 = i0;
  prof.radius_m = (prof.l - 2 * (i0 - 1)) / 2;
  return prof;
}

HmCheck hm_check(const TrapezoidProfile& prof, Int sigma) {
  if (!prof.is_trapezoidal || !prof.radius_m) {
    throw PreconditionError("hm_check needs a trapezoidal profile");
  }
  const Int lhs = (std::abs(sigma) + 1) / 2;
  const Int slack = lhs - *prof.radius_m;
  return {slack >= 0, slack};
}

namespace {

Int at(std::span<const Int> b, Int i) {
  return i >= 0 && i < static_cast<Int>(b.size()) ? b[static_cast<std::size_t>(i)] : 0;
}

// S_{2j} = b_{h-j}, S_{2j+1} = b_j.
Int s_term(std::span<const Int> b, Int h, Int k) {
  return k % 2 == 0 ? at(b, h - k / 2) : at(b, (k - 1) / 2);
}

bool ih1_holds(std::span<const Int> b, Int h, Int r) {
  const Int l = static_cast<Int>(b.size()) - 1;
  for (Int i = h + 1; i <= l; ++i) {
    if (at(b, i) != 0) return false;
  }
  if (s_term(b, h, 0) < 0) return false;
  for (Int k = 0; k < h; ++k) {
    const Int cur = s_term(b, h, k);
    const Int next = s_term(b, h, k + 1);
    if (k < r ? !(cur < next) : cur != next) return false;
  }
  return true;
}

}  // namespace

IHReport check_ih(std::span<const Int> b, Int l) {
  if (l < 1 || static_cast<Int>(b.size()) != l + 1) {
    throw DomainError("bottom sequence must have l+1 entries");
  }
  for (Int v : b) {
    if (v < 0) throw DomainError("bottom sequence entries must be non-negative");
  }

  IHReport rep;
  for (Int h = 1; h <= l && !rep.witness; ++h) {
    for (Int r = 0; r <= h; ++r) {
      if (ih1_holds(b, h, r)) {
        rep.witness = IH1Witness{h, r};
        break;
      }
    }
  }
  rep.ih1 = rep.witness.has_value();

  if (rep.witness) {
    rep.ih2 = true;
    for (Int hs = rep.witness->h; hs <= 2 * l && rep.ih2; ++hs) {
      for (Int j = 0; 2 * j <= hs; ++j) {
        if (at(b, j) < at(b, hs - j)) {
          rep.ih2 = false;
          rep.ih2_violation = std::pair{hs, j};
          break;
        }
      }
    }
  }

  rep.ih3 = true;
  for (Int i = 0; i <= l && rep.ih3; ++i) {
    for (Int j = i + 1; j <= l && rep.ih3; ++j) {
      if (b[i] != b[j]) continue;
      for (Int k = i + 1; k < j; ++k) {
        if (b[k] != b[i]) {
          rep.ih3 = false;
          rep.ih3_violation = std::array<Int, 3>{i, k, j};
          break;
        }
      }
    }
  }
  return rep;
}

bool check_alpha_b_relation(std::span<const Int> alpha, std::span<const Int> b) {
  if (b.size() != alpha.size() + 1) {
    throw DomainError("bottom sequence must be one longer than the arc sequence");
  }
  const Int l = static_cast<Int>(alpha.size());
  for (Int i = 1; i <= l; ++i) {
    if (at(alpha, i) - at(alpha, i - 1) != at(b, i) - at(b, l - i)) return false;
  }
  return true;
}

}  // namespace twobridge
