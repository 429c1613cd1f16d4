#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twobridge/extended_diagram.hpp"
#include "twobridge/pair.hpp"

namespace twobridge {

/// Delta(t) = sum_i (-1)^i a_i t^i, stored as the positive magnitudes a_i.
struct AlexanderPolynomial {
  std::vector<Int> coeffs;

  Int length() const noexcept { return static_cast<Int>(coeffs.size()); }
  /// |Delta(-1)| = sum of a_i.
  Int determinant() const noexcept;
  /// Delta(1) = alternating sum of a_i.
  Int at_one() const noexcept;
  /// Human form, e.g. "1 - 3t + t^2".
  std::string to_string() const;

  friend bool operator==(const AlexanderPolynomial&, const AlexanderPolynomial&) = default;
};

/// Returns a description of the first broken invariant (positivity,
/// palindromy, Delta(1) = +-1 for odd length and 0 for even length), or
/// nullopt when the polynomial is well formed.
std::optional<std::string> shape_violation(const AlexanderPolynomial& a);

/// Reads Delta off the arc sequence of the trace. Throws ModelViolation if
/// the result is malformed.
AlexanderPolynomial alexander(const UnderarcTrace& t);

/// Shape a_0 < ... < a_{i0-1} = ... = a_{l-i0} > ... > a_{l-1}.
struct TrapezoidProfile {
  bool is_trapezoidal = false;
  std::optional<Int> i0;
  /// floor((l - 2(i0-1)) / 2)
  std::optional<Int> radius_m;
  Int l = 0;

  /// Number of stable (plateau) coefficients, l - 2(i0-1).
  std::optional<Int> plateau_length() const;
};

TrapezoidProfile trapezoid_profile(std::span<const Int> coeffs);
inline TrapezoidProfile trapezoid_profile(const AlexanderPolynomial& a) {
  return trapezoid_profile(a.coeffs);
}

struct HmCheck {
  bool holds;
  /// floor((|sigma|+1)/2) - radius_m
  Int slack;
};

/// floor((|sigma|+1)/2) >= radius_m. Throws PreconditionError when the
/// profile is not trapezoidal.
HmCheck hm_check(const TrapezoidProfile& prof, Int sigma);

struct IH1Witness {
  Int h;
  Int r;
};

struct IHReport {
  bool ih1 = false;
  std::optional<IH1Witness> witness;
  bool ih2 = false;
  /// First failing (h*, j) when ih2 fails.
  std::optional<std::pair<Int, Int>> ih2_violation;
  bool ih3 = false;
  /// First failing (i, k, j) when ih3 fails.
  std::optional<std::array<Int, 3>> ih3_violation;

  bool all() const noexcept { return ih1 && ih2 && ih3; }
};

/// Checks the three inductive properties of a bottom sequence b_0..b_l.
/// The IH1 witness is the smallest h, then the smallest r. IH2 is checked
/// against that witness for every h* in [h, 2l]. Throws DomainError when
/// b.size() != l + 1 or an entry is negative.
IHReport check_ih(std::span<const Int> b, Int l);

/// alpha_i - alpha_{i-1} = b_i - b_{l-i} for 1 <= i <= l, with alpha_l = 0.
/// Throws DomainError unless b.size() == alpha.size() + 1.
bool check_alpha_b_relation(std::span<const Int> alpha, std::span<const Int> b);

}  // namespace twobridge
