#pragma once

#include <string>
#include <string_view>

#include "nonori/triangulation.hpp"

namespace nonori {

// Canonical signature of a closed connected triangulation with < 64
// tetrahedra. Equal for isomorphic triangulations.
std::string iso_sig(const Triangulation& t);

// Rebuilds a triangulation (in canonical labeling) from its signature.
Triangulation from_iso_sig(std::string_view sig);

}  // namespace nonori
