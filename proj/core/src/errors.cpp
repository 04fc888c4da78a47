#include "fluxcnot/errors.hpp"

namespace fluxcnot {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::numeric: return "numeric";
    case ErrorKind::truncation: return "truncation";
    case ErrorKind::labeling: return "labeling";
    case ErrorKind::lookup: return "lookup";
    case ErrorKind::degeneracy: return "degeneracy";
    case ErrorKind::correction: return "correction";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::input: return "input";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

}  // namespace fluxcnot
