#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace brwdec {

/// A memoised binary sequence, read as the proposition "some bit is 1".
class BitSeq {
 public:
  using Generator = std::function<bool(std::uint64_t)>;

  BitSeq(Generator generator, std::string label);

  bool at(std::uint64_t n) const;
  bool operator[](std::uint64_t n) const { return at(n); }

  /// Least i <= limit with a 1 at i.
  std::optional<std::uint64_t> first_one(std::uint64_t limit) const;

  const std::string& label() const;

  static BitSeq zeros();
  static BitSeq ones();
  /// Finite prefix, then `tail` forever.
  static BitSeq eventually(std::string prefix, bool tail);
  /// Single 1 at index k.
  static BitSeq first_one_at(std::uint64_t k);
  static BitSeq constant(bool bit);

 private:
  struct State;
  std::shared_ptr<State> state_;
};

}  // namespace brwdec
