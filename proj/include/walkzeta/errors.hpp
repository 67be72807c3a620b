#ifndef WALKZETA_ERRORS_HPP
#define WALKZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace walkzeta {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape or lattice-dimension mismatch between operands.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Bad parameter value (probability out of range, unnormalized weights, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Dense-operator row cap exceeded.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

// |u| * rho_max >= 1: the principal-branch zeta evaluation is not defined.
class ConvergenceDiskError : public Error {
 public:
  using Error::Error;
};

// Requested a closed eigenvalue list / closed form the source material does
// not print for this family.
class NoClosedFormError : public Error {
 public:
  using Error::Error;
};

// Graph generator would produce loops or multi-edges.
class NotSimpleError : public Error {
 public:
  using Error::Error;
};

// Malformed config JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Iterative kernel failed to converge.
class NoConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace walkzeta

#endif
