#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "brwdec/bitseq.hpp"
#include "brwdec/ordinal.hpp"
#include "brwdec/verdict.hpp"

namespace brwdec {

/// A lazily built value of the free w-join structure on one point: bottom,
/// top, or the join of a memoised sequence. Read as "the value is top".
class Sierpinski {
 public:
  enum class Kind { Bot, Top, Join };
  using Generator = std::function<Sierpinski(std::uint64_t)>;

  static Sierpinski bot();
  static Sierpinski top();
  static Sierpinski join(Generator generator);

  Kind kind() const;
  /// Requires kind() == Join.
  Sierpinski at(std::uint64_t i) const;

 private:
  struct State;
  explicit Sierpinski(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

/// Best-first search for a top leaf. Element i of a join is scheduled
/// i steps after element 0. A join is never refuted.
Verdict eval_top(const Sierpinski& s, Fuel fuel);

/// Join of top at the 1 bits and bottom at the 0 bits.
Sierpinski from_bitseq(const BitSeq& s);

/// A value that is top iff a >= w*n.
Sierpinski s_n_of(std::uint64_t n, const Ordinal& a);

}  // namespace brwdec
