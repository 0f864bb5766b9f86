#pragma once

#include <cstddef>
#include <string_view>

namespace mobiuslab {

/// Default element budget for generated lattices (dense join/meet tables).
inline constexpr std::size_t kDefaultMaxElements = 5000;

/// Effective limit: MOBIUSLAB_MAX_ELEMENTS when set, otherwise `fallback`.
/// Raising it is unsafe; dense tables grow quadratically.
std::size_t element_limit(std::size_t fallback = kDefaultMaxElements);

/// Throws ErrorCode::SizeGuard when `estimate` exceeds the limit. Called
/// before any allocation proportional to `estimate`.
void check_size(std::string_view what, double estimate,
                std::size_t fallback = kDefaultMaxElements);

}  // namespace mobiuslab
