#pragma once

#include <cstdint>

#include "brwdec/bitseq.hpp"
#include "brwdec/cnf.hpp"
#include "brwdec/ordinal.hpp"

namespace brwdec {

/// 0, 1, 2, ... until the first 1 of s at index i, then w, w+1, ... from
/// index i+1 on.
OrdinalSeq jump(const BitSeq& s);
/// As jump, with w*2 in place of w.
OrdinalSeq double_jump(const BitSeq& s);
/// Bit n is 1 iff t(n) is infinite.
BitSeq unjump(const OrdinalSeq& t);

/// The proposition "ordinal >= level".
struct DecWitness {
  Cnf level;
  Ordinal ordinal;

  /// Successor levels are interchangeable with their round-up.
  Cnf rounded_level() const { return cnf_round_up(level); }
};

/// Level w+1, ordinal lim(jump(s)).
DecWitness semidec_to_witness(const BitSeq& s);

/// Accepts levels w+n (n >= 1) and w*2; anything else throws
/// std::invalid_argument.
BitSeq witness_to_semidec(const DecWitness& w);

/// Same proposition at level + n.
DecWitness shift_level(const DecWitness& w, std::uint64_t n);

/// Same proposition with a zero-or-limit ordinal, at the original level.
DecWitness limit_normalize(const DecWitness& w);

/// Levels must be equal.
DecWitness conj_witness(const DecWitness& p, const DecWitness& q);
/// Levels must be equal and of the form w*k + n.
DecWitness disj_witness(const DecWitness& p, const DecWitness& q);

}  // namespace brwdec
