#pragma once

#include <cstdint>
#include <ostream>
#include <string_view>

namespace brwdec {

/// Budget of expansion steps for a bounded semidecision. Every node
/// expansion and every sequence-element fetch costs one unit.
struct Fuel {
  std::uint64_t budget = 0;

  constexpr explicit Fuel(std::uint64_t b) : budget(b) {}
};

/// Result of a bounded semidecision. Proven and Refuted are sound; Unknown
/// means the budget ran out. `spent` is the fuel actually consumed.
struct Verdict {
  enum class Kind { Proven, Refuted, Unknown };

  Kind kind = Kind::Unknown;
  std::uint64_t spent = 0;

  static Verdict proven(std::uint64_t spent = 0) { return {Kind::Proven, spent}; }
  static Verdict refuted(std::uint64_t spent = 0) { return {Kind::Refuted, spent}; }
  static Verdict unknown(std::uint64_t spent = 0) { return {Kind::Unknown, spent}; }

  bool is_proven() const { return kind == Kind::Proven; }
  bool is_refuted() const { return kind == Kind::Refuted; }
  bool is_unknown() const { return kind == Kind::Unknown; }
  bool decided() const { return kind != Kind::Unknown; }
};

std::string_view to_string(Verdict::Kind kind);
std::ostream& operator<<(std::ostream& os, const Verdict& v);

/// Fuel accounting shared by the engine and the Sierpinski evaluator.
class Budget {
 public:
  explicit Budget(Fuel fuel) : remaining_(fuel.budget) {}

  bool take(std::uint64_t n = 1) {
    if (remaining_ < n) {
      spent_ += remaining_;
      remaining_ = 0;
      return false;
    }
    remaining_ -= n;
    spent_ += n;
    return true;
  }

  std::uint64_t remaining() const { return remaining_; }
  std::uint64_t spent() const { return spent_; }
  bool exhausted() const { return remaining_ == 0; }

 private:
  std::uint64_t remaining_;
  std::uint64_t spent_ = 0;
};

}  // namespace brwdec
