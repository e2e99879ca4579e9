#pragma once

#include <stdexcept>
#include <string>

namespace traid {

/// A word or one of its letters failed validation.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Two words over different strand counts were combined.
struct StrandMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A pure word was required but the permutation image is non-trivial.
struct PurityError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Three or more particles coincide at `time`.
struct TripleCoincidence : std::domain_error {
  double time;
  explicit TripleCoincidence(double t, const std::string& msg)
      : std::domain_error(msg), time(t) {}
};

/// Two world-lines touch without crossing at `time`.
struct Tangency : std::domain_error {
  double time;
  explicit Tangency(double t, const std::string& msg)
      : std::domain_error(msg), time(t) {}
};

/// Simultaneous crossings that cannot be serialized by commutation.
struct AmbiguousOrdering : std::domain_error {
  double time;
  explicit AmbiguousOrdering(double t, const std::string& msg)
      : std::domain_error(msg), time(t) {}
};

/// A numeric winding failed to land near an integer.
struct NonIntegerHolonomy : std::domain_error {
  double holonomy;
  explicit NonIntegerHolonomy(double h, const std::string& msg)
      : std::domain_error(msg), holonomy(h) {}
};

/// A phase assignment violates the defining relation of the group.
struct InvalidRep : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace traid
