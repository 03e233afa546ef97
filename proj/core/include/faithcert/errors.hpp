#pragma once

#include <stdexcept>
#include <string>

namespace faithcert {

/// Operands drawn from different scalar backends were combined.
class BackendMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dimensions of matrices, vectors or subspaces do not conform.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical hypothesis of an operation is violated by its input
/// (central element where a non-central one is required, torsion point,
/// prime-field backend where characteristic zero is needed, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input data is consistent but produced a configuration the
/// certificates cannot handle (non-unique central element, unstable
/// sampling, inconsistent relation space).
class DegenerateConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace faithcert
