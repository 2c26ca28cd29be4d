#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "brwdec/bitseq.hpp"
#include "brwdec/ordinal.hpp"

namespace brwdec::cli {

/// Malformed input, or a name missing from a registry.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// CNF syntax ("w^2*3 + w + 1", "^" right-associative) with +, *, ^ acting
/// on ordinals, extended by
///   psi(FAMILY)  lim-min(A, B)  lim-max(A, B)  round-up(A)  round-down(A)
///   lim-jump(BITS)
Ordinal parse_subject(std::string_view text);

/// "0101:zeros", "1:ones", or one of zeros, ones, first-one(K),
/// twin-prime-above(N).
BitSeq parse_bitseq(std::string_view text);

}  // namespace brwdec::cli
