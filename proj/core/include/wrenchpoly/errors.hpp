#pragma once

#include <stdexcept>
#include <string>

namespace wrenchpoly {

/// Malformed caller input: dimension mismatches, invalid bounds, bad flags.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A Jacobian lost row rank (singular limb configuration).
class SingularityError : public std::runtime_error {
 public:
  explicit SingularityError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A geometric computation could not be completed reliably. Raised instead
/// of returning a silently wrong answer.
class DegenerateGeometryError : public std::runtime_error {
 public:
  explicit DegenerateGeometryError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A query violated its stated precondition (e.g. base point outside the
/// polytope in a ray query). Carries the index of the violated facet when
/// one is known.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, int facet_index = -1)
      : std::runtime_error(what), facet_index_(facet_index) {}

  int facet_index() const { return facet_index_; }

 private:
  int facet_index_;
};

}  // namespace wrenchpoly
