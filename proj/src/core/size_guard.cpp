#include "core/size_guard.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

#include "core/error.hpp"

namespace mobiuslab {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::UnknownLabel: return "unknown_label";
    case ErrorCode::DuplicateLabel: return "duplicate_label";
    case ErrorCode::Cycle: return "cycle";
    case ErrorCode::NotALattice: return "not_a_lattice";
    case ErrorCode::NotRanked: return "not_ranked";
    case ErrorCode::SizeGuard: return "size_guard";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

std::size_t element_limit(std::size_t fallback) {
  if (const char* env = std::getenv("MOBIUSLAB_MAX_ELEMENTS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

void check_size(std::string_view what, double estimate, std::size_t fallback) {
  const std::size_t limit = element_limit(fallback);
  if (estimate > static_cast<double>(limit)) {
    std::ostringstream os;
    os << what << ": estimated size " << static_cast<unsigned long long>(estimate)
       << " exceeds limit " << limit << " (set MOBIUSLAB_MAX_ELEMENTS to override)";
    throw Error(ErrorCode::SizeGuard, os.str());
  }
}

}  // namespace mobiuslab
