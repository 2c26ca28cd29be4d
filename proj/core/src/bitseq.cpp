#include "brwdec/bitseq.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace brwdec {

struct BitSeq::State {
  std::mutex mutex;
  std::vector<bool> memo;
  // Least index with a 1 among the memoised prefix.
  std::optional<std::uint64_t> first;
  Generator generator;
  std::string label;

  void fill_to(std::uint64_t n) {
    while (memo.size() <= n) {
      bool bit = generator(memo.size());
      if (bit && !first) first = memo.size();
      memo.push_back(bit);
    }
  }
};

BitSeq::BitSeq(Generator generator, std::string label) : state_(std::make_shared<State>()) {
  state_->generator = std::move(generator);
  state_->label = std::move(label);
}

bool BitSeq::at(std::uint64_t n) const {
  std::lock_guard lock(state_->mutex);
  state_->fill_to(n);
  return state_->memo[n];
}

std::optional<std::uint64_t> BitSeq::first_one(std::uint64_t limit) const {
  std::lock_guard lock(state_->mutex);
  if (state_->first) {
    if (*state_->first <= limit) return state_->first;
    return std::nullopt;
  }
  state_->fill_to(limit);
  if (state_->first && *state_->first <= limit) return state_->first;
  return std::nullopt;
}

const std::string& BitSeq::label() const { return state_->label; }

BitSeq BitSeq::zeros() { return constant(false); }

BitSeq BitSeq::ones() { return constant(true); }

BitSeq BitSeq::constant(bool bit) {
  return BitSeq([bit](std::uint64_t) { return bit; }, bit ? "ones" : "zeros");
}

BitSeq BitSeq::eventually(std::string prefix, bool tail) {
  for (char c : prefix) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit prefix must be 0/1: " + prefix);
  }
  std::string label = prefix + (tail ? ":ones" : ":zeros");
  return BitSeq(
      [prefix = std::move(prefix), tail](std::uint64_t n) {
        return n < prefix.size() ? prefix[n] == '1' : tail;
      },
      std::move(label));
}

BitSeq BitSeq::first_one_at(std::uint64_t k) {
  return BitSeq([k](std::uint64_t n) { return n == k; },
                "first-one(" + std::to_string(k) + ")");
}

}  // namespace brwdec
