#pragma once

#include <string_view>

#include "amech/dynamics.hpp"

namespace amech {

/// Built-in initial configurations, p = 19:
///   "a0"  81 particles filling the top-left 9x9 block, one per cell
///   "a1"  a generic microstate with nine particles in each top-left 3x3 block
/// The texts are the files under data/fixtures, embedded at build time.
std::string_view fixture_text(std::string_view name);

/// Throws std::invalid_argument for an unknown name.
Configuration fixture(std::string_view name);

}  // namespace amech
