#pragma once

#include "ckforms/algebra.hpp"

namespace ckforms {

// complex rank of the real group (complex groups counted as real groups, copies summed)
int complex_rank(const AlgebraSpec& spec);
// complex rank of the maximal compact subgroup K
int compact_rank(const AlgebraSpec& spec);

}  // namespace ckforms
