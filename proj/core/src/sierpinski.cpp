#include "brwdec/sierpinski.hpp"

#include <mutex>
#include <queue>
#include <stdexcept>
#include <vector>

namespace brwdec {

struct Sierpinski::State {
  Kind kind = Kind::Bot;
  std::mutex mutex;
  std::vector<Sierpinski> memo;
  Generator generator;
};

Sierpinski Sierpinski::bot() {
  static const Sierpinski b(std::make_shared<State>());
  return b;
}

Sierpinski Sierpinski::top() {
  static const Sierpinski t = [] {
    auto state = std::make_shared<State>();
    state->kind = Kind::Top;
    return Sierpinski(std::move(state));
  }();
  return t;
}

Sierpinski Sierpinski::join(Generator generator) {
  auto state = std::make_shared<State>();
  state->kind = Kind::Join;
  state->generator = std::move(generator);
  return Sierpinski(std::move(state));
}

Sierpinski::Kind Sierpinski::kind() const { return state_->kind; }

Sierpinski Sierpinski::at(std::uint64_t i) const {
  if (state_->kind != Kind::Join) throw std::logic_error("at() of a non-join");
  std::lock_guard lock(state_->mutex);
  auto& memo = state_->memo;
  while (memo.size() <= i) memo.push_back(state_->generator(memo.size()));
  return memo[i];
}

namespace {

struct Pending {
  std::uint64_t cost;
  std::uint64_t order;
  Sierpinski node;
  // For a join: the next element to fetch. Unused otherwise.
  std::uint64_t index;
  bool expanded;
};

struct PendingAfter {
  bool operator()(const Pending& a, const Pending& b) const {
    if (a.cost != b.cost) return a.cost > b.cost;
    return a.order > b.order;
  }
};

}  // namespace

Verdict eval_top(const Sierpinski& s, Fuel fuel) {
  Budget budget(fuel);
  if (!budget.take()) return Verdict::unknown(budget.spent());
  switch (s.kind()) {
    case Sierpinski::Kind::Top:
      return Verdict::proven(budget.spent());
    case Sierpinski::Kind::Bot:
      return Verdict::refuted(budget.spent());
    case Sierpinski::Kind::Join:
      break;
  }
  std::priority_queue<Pending, std::vector<Pending>, PendingAfter> queue;
  std::uint64_t order = 0;
  queue.push(Pending{0, order++, s, 0, true});
  while (!queue.empty()) {
    Pending p = queue.top();
    queue.pop();
    if (!p.expanded) {
      if (!budget.take()) break;
      if (p.node.kind() == Sierpinski::Kind::Top) return Verdict::proven(budget.spent());
      if (p.node.kind() == Sierpinski::Kind::Bot) continue;
      queue.push(Pending{p.cost, order++, p.node, 0, true});
      continue;
    }
    if (!budget.take()) break;
    Sierpinski child = p.node.at(p.index);
    queue.push(Pending{p.cost + 1, order++, child, 0, false});
    queue.push(Pending{p.cost + 1, order++, p.node, p.index + 1, true});
  }
  return Verdict::unknown(budget.spent());
}

Sierpinski from_bitseq(const BitSeq& s) {
  return Sierpinski::join(
      [s](std::uint64_t i) { return s.at(i) ? Sierpinski::top() : Sierpinski::bot(); });
}

Sierpinski s_n_of(std::uint64_t n, const Ordinal& a) {
  if (n == 0) return Sierpinski::top();
  if (n == 1) {
    // The annotation spares a walk down a long successor chain.
    const bool finite = a.cnf() ? a.cnf()->is_finite() : decide_finite(a).finite;
    return finite ? Sierpinski::bot() : Sierpinski::top();
  }
  const Ordinal* cur = &a;
  while (cur->is_succ()) cur = &cur->pred();
  if (cur->is_zero()) return Sierpinski::bot();
  OrdinalSeq f = cur->seq();
  return Sierpinski::join([n, f](std::uint64_t i) { return s_n_of(n - 1, f.at(i)); });
}

}  // namespace brwdec
