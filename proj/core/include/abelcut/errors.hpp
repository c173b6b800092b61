#pragma once

#include <stdexcept>
#include <string>

namespace abelcut {

/// Malformed input: bad residues, asymmetric generators, improper cuts.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input exceeds the size an exhaustive routine is allowed to handle.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The moment-matrix solver failed to converge or produced an infeasible point.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace abelcut
