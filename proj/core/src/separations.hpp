#pragma once

// Mask-level separation enumeration shared by the tangle and certificate code.

#include <vector>

#include "atoms.hpp"
#include "tanglekit/guards.hpp"

namespace tk::detail {

struct SepMask {
  AtomMask a;
  AtomMask b;
  int order = 0;
  int reverse = 0;  ///< index of (B, A) in the same list
};

/// All separations of order < max_order, both orientations, in generation
/// order (grouped by separator).
std::vector<SepMask> separation_masks(const AtomIndex& ix, int max_order, const Guards& guards);

}  // namespace tk::detail
