#pragma once

#include <string>
#include <string_view>

#include "qshelf/errors.hpp"

namespace qshelf {

/// Which identity family a shelf, matrix, or partition class belongs to.
enum class Family { gga, gordon };

inline std::string_view to_string(Family f) { return f == Family::gga ? "gga" : "gordon"; }

inline Family parse_family(std::string_view name) {
  if (name == "gga") return Family::gga;
  if (name == "gordon") return Family::gordon;
  throw UsageError("unknown family '" + std::string(name) + "' (expected gga or gordon)");
}

}  // namespace qshelf
