#pragma once

#include <optional>
#include <string>

#include "tvb/search.hpp"

namespace tvb {

// Deterministic SVG figure for d = 2 instances: faces in canonical order,
// then points by id, then the witness cross. Errors when d != 2 or the
// instance has no coordinates.
std::string emit_svg(const Instance& inst,
                     const std::optional<RainbowPartition>& part);

}  // namespace tvb
