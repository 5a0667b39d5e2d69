#include "cthash/error.hpp"

namespace cthash {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Range: return "range";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::Limit: return "limit";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Format: return "format";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::Generation: return "generation";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace cthash
