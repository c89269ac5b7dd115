#pragma once

#include <stdexcept>
#include <string>

namespace riders {

/// Zero direction, malformed text, bad relabeling permutation, q or r out of domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two riders share a point or lie on a common move line.
class AttackingError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A search exceeded its configured size or node budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested sign pattern or signature has no realizing placement.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace riders
