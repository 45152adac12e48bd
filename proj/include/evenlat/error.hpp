#pragma once

#include <stdexcept>
#include <string>

namespace evenlat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (wrong shape, bad index, bad symbol text).
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// Gram matrix with zero determinant.
class DegenerateLattice : public Error {
public:
  using Error::Error;
};

/// Quadratic data requested from a lattice that is not even.
class OddLattice : public Error {
public:
  using Error::Error;
};

/// Operation restricted to definite lattices was given an indefinite one.
class NotDefinite : public Error {
public:
  using Error::Error;
};

/// An enumeration exceeded its configured ceiling.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// Two independent computations disagreed; always a bug, never user error.
class InternalInconsistency : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace evenlat
