#pragma once

#include <stdexcept>
#include <string>

namespace twobridge {

/// Input outside the domain of an operation (non-positive integers,
/// inadmissible pairs, mismatched sequence lengths).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A T-move applied where it is not defined (T3 with p <= q).
class ApplicabilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An operation called on data that fails its stated precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The extended-diagram model produced something that contradicts its own
/// structure. Never expected; raised instead of returning garbage.
class ModelViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The closed-form Alexander expansion produced a zero coefficient inside
/// its support.
class OracleShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twobridge
