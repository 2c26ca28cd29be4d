#pragma once

#include "brwdec/ordinal.hpp"

namespace brwdec {

/// Minimum of two zero-or-limit ordinals. Total on all inputs: successors
/// are rounded down first, so lim_min(a, b) is below both arguments.
Ordinal lim_min(const Ordinal& a, const Ordinal& b);

/// Maximum with respect to levels of the form w*k: for zero-or-limit a, b,
///   (a >= w*k or b >= w*k)  iff  lim_max(a, b) >= w*k.
/// It is not claimed to be a least upper bound in general.
Ordinal lim_max(const Ordinal& a, const Ordinal& b);

}  // namespace brwdec
