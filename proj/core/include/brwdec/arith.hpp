#pragma once

#include <cstdint>

#include "brwdec/ordinal.hpp"

namespace brwdec {

/// Annotations are carried through every operation: exact values via the CNF
/// operation when both arguments are exact, upper bounds via the same
/// (monotone) operation applied to the bounds.
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
/// Base 0 and base 1 are handled by case split before the limit clause.
Ordinal exp(const Ordinal& a, const Ordinal& b);

Ordinal from_nat(std::uint64_t n);
Ordinal omega();

/// Successor x goes to x + w; zero and limits are unchanged.
Ordinal round_up(const Ordinal& a);
/// Drops trailing successors.
Ordinal round_down(const Ordinal& a);

struct SplitResult {
  Ordinal limit_part;  // zero or a limit
  std::uint64_t finite_part = 0;
};

SplitResult split(const Ordinal& a);

}  // namespace brwdec
