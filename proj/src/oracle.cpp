#include "twobridge/oracle.hpp"

#include <algorithm>

#include "twobridge/errors.hpp"

namespace twobridge {

std::vector<int> epsilon_sequence(const AdmissiblePair& x) {
  const Int p = x.p();
  const Int q = x.q();
  std::vector<int> eps;
  eps.reserve(static_cast<std::size_t>(p > 0 ? p - 1 : 0));
  for (Int j = 1; j < p; ++j) eps.push_back(((j * q) / p) % 2 == 0 ? 1 : -1);
  return eps;
}

AlexanderPolynomial alexander_oracle(const AdmissiblePair& x) {
  const auto eps = epsilon_sequence(x);

  std::vector<Int> exponents{0};
  exponents.reserve(eps.size() + 1);
  for (int e : eps) exponents.push_back(exponents.back() + e);
  const auto [lo_it, hi_it] = std::minmax_element(exponents.begin(), exponents.end());
  const Int lo = *lo_it;
  const Int hi = *hi_it;

  std::vector<Int> signed_coeffs(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    signed_coeffs[static_cast<std::size_t>(exponents[k] - lo)] += k % 2 == 0 ? 1 : -1;
  }
  if (signed_coeffs.front() < 0) {
    for (auto& c : signed_coeffs) c = -c;
  }

  AlexanderPolynomial out;
  out.coeffs.reserve(signed_coeffs.size());
  for (std::size_t i = 0; i < signed_coeffs.size(); ++i) {
    const Int magnitude = i % 2 == 0 ? signed_coeffs[i] : -signed_coeffs[i];
    if (magnitude <= 0) {
      throw OracleShapeError("closed-form Alexander coefficient " + std::to_string(i) + " of " +
                             x.to_string() + " is " + std::to_string(signed_coeffs[i]));
    }
    out.coeffs.push_back(magnitude);
  }
  return out;
}

}  // namespace twobridge
