#pragma once

#include <string_view>

#include "ckforms/pairs.hpp"

namespace ckforms {

// "G/H" or "GROUP(H)"; case-insensitive, surrounding whitespace ignored
PairSpec parse_pair(std::string_view text);

}  // namespace ckforms
