#pragma once

#include <vector>

#include "twobridge/invariants.hpp"
#include "twobridge/pair.hpp"

namespace twobridge {

/// eps_j = (-1)^floor(jq/p) for j = 1..p-1; empty for p = 1.
std::vector<int> epsilon_sequence(const AdmissiblePair& x);

/// Classical closed-form expansion Delta(t) = sum_{k=0}^{p-1} (-1)^k t^{h_k},
/// h_0 = 0, h_k = eps_1 + ... + eps_k, shifted to minimum exponent 0 and
/// signed so that the constant term is positive. Shares no code with the
/// diagram trace. Throws OracleShapeError if a coefficient inside the
/// support vanishes or the signs fail to alternate.
AlexanderPolynomial alexander_oracle(const AdmissiblePair& x);

}  // namespace twobridge
