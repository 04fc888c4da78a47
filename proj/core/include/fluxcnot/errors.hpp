#pragma once

#include <stdexcept>
#include <string>

namespace fluxcnot {

enum class ErrorKind {
  parameter,    // invalid physical parameters
  numeric,      // eigen-solver or linear-algebra failure
  truncation,   // basis too small for the requested levels
  labeling,     // dressed state cannot be assigned a bare label
  lookup,       // unknown label or operator
  degeneracy,   // vanishing denominator in a closed-form expression
  correction,   // virtual-Z phases cannot be extracted
  convergence,  // time-step or optimizer did not converge
  input,        // nonphysical input state
  parse,        // configuration parse failure
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (notably the
/// command-line tool) can map it to an error class without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fluxcnot
