#include "brwdec/ordinal.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace brwdec {

struct OrdinalSeq::State {
  std::mutex mutex;
  std::vector<Ordinal> memo;
  Generator generator;
};

OrdinalSeq::OrdinalSeq(Generator generator) : state_(std::make_shared<State>()) {
  state_->generator = std::move(generator);
}

Ordinal OrdinalSeq::at(std::uint64_t n) const {
  std::lock_guard lock(state_->mutex);
  auto& memo = state_->memo;
  while (memo.size() <= n) memo.push_back(state_->generator(memo.size()));
  return memo[n];
}

Ordinal OrdinalSeq::operator[](std::uint64_t n) const { return at(n); }

std::uint64_t OrdinalSeq::computed() const {
  std::lock_guard lock(state_->mutex);
  return state_->memo.size();
}

struct Ordinal::Node {
  Shape shape = Shape::Zero;
  Ordinal pred{std::shared_ptr<Node>()};
  std::optional<OrdinalSeq> seq;
  Annotation annotation;

  std::mutex strip_mutex;
  std::shared_ptr<Node> stripped;

  Node() = default;
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;

  // Successor chains can be very long; unlink them iteratively.
  ~Node() {
    std::shared_ptr<Node> next = std::move(pred.node_);
    while (next && next.use_count() == 1) {
      std::shared_ptr<Node> after = std::move(next->pred.node_);
      next = std::move(after);
    }
  }
};

Ordinal::Ordinal() : node_(zero().node_) {}

Ordinal Ordinal::zero() {
  static const Ordinal z = [] {
    auto node = std::make_shared<Node>();
    node->annotation.exact = Cnf{};
    return Ordinal(std::move(node));
  }();
  return z;
}

Ordinal Ordinal::succ(const Ordinal& pred) {
  auto node = std::make_shared<Node>();
  node->shape = Shape::Succ;
  node->pred = pred;
  const Annotation& p = pred.node_->annotation;
  if (p.exact) node->annotation.exact = cnf_add(*p.exact, Cnf::nat(1));
  if (p.upper) node->annotation.upper = cnf_add(*p.upper, Cnf::nat(1));
  return Ordinal(std::move(node));
}

Ordinal Ordinal::lim(OrdinalSeq seq, Annotation annotation) {
  auto node = std::make_shared<Node>();
  node->shape = Shape::Lim;
  node->seq = std::move(seq);
  node->annotation = std::move(annotation);
  return Ordinal(std::move(node));
}

Shape Ordinal::shape() const { return node_->shape; }

const Ordinal& Ordinal::pred() const {
  if (node_->shape != Shape::Succ) throw std::logic_error("pred() of a non-successor");
  return node_->pred;
}

const OrdinalSeq& Ordinal::seq() const {
  if (node_->shape != Shape::Lim) throw std::logic_error("seq() of a non-limit");
  return *node_->seq;
}

const Annotation& Ordinal::annotation() const { return node_->annotation; }

Classification classify(const Ordinal& o) {
  switch (o.shape()) {
    case Shape::Zero:
      return IsZero{};
    case Shape::Succ:
      return IsSucc{o.pred()};
    case Shape::Lim:
      return IsLim{o.seq()};
  }
  return IsZero{};
}

Ordinal rebuild(const Classification& c) {
  if (const auto* s = std::get_if<IsSucc>(&c)) return Ordinal::succ(s->pred);
  if (const auto* l = std::get_if<IsLim>(&c)) return Ordinal::lim(l->seq);
  return Ordinal::zero();
}

FinitenessResult decide_finite(const Ordinal& o) {
  std::uint64_t count = 0;
  const Ordinal* cur = &o;
  while (cur->is_succ()) {
    ++count;
    cur = &cur->pred();
  }
  if (cur->is_lim()) return FinitenessResult::Infinite();
  return FinitenessResult::Finite(count);
}

Ordinal strip_annotations(const Ordinal& o) {
  static const Ordinal bare_zero{std::make_shared<Ordinal::Node>()};

  // Walk down the successor chain to the first node that is already
  // stripped, or to a zero/limit base.
  std::vector<std::shared_ptr<Ordinal::Node>> chain;
  std::shared_ptr<Ordinal::Node> cur = o.node_;
  std::shared_ptr<Ordinal::Node> base;
  for (;;) {
    {
      std::lock_guard lock(cur->strip_mutex);
      if (cur->stripped) {
        base = cur->stripped;
        break;
      }
    }
    if (cur->shape == Shape::Succ) {
      chain.push_back(cur);
      cur = cur->pred.node_;
      continue;
    }
    if (cur->shape == Shape::Zero) {
      base = bare_zero.node_;
    } else {
      OrdinalSeq inner = *cur->seq;
      base = Ordinal::lim(OrdinalSeq([inner](std::uint64_t n) {
                            return strip_annotations(inner.at(n));
                          })).node_;
    }
    std::lock_guard lock(cur->strip_mutex);
    if (!cur->stripped) cur->stripped = base;
    base = cur->stripped;
    break;
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    Ordinal next = Ordinal::succ(Ordinal(base));
    std::lock_guard lock((*it)->strip_mutex);
    if (!(*it)->stripped) (*it)->stripped = next.node_;
    base = (*it)->stripped;
  }
  return Ordinal(base);
}

Ordinal embed(const Cnf& a) {
  // limit part -> [lambda, lambda + 1, lambda + 2, ...]
  static std::mutex mutex;
  static std::map<Cnf, std::vector<Ordinal>, CnfLess> cache;

  Cnf lambda = a.limit_part();
  std::uint64_t n = a.finite_part();

  std::lock_guard lock(mutex);
  auto it = cache.find(lambda);
  if (it == cache.end()) {
    Ordinal base = lambda.is_zero()
                       ? Ordinal::zero()
                       : Ordinal::lim(OrdinalSeq([lambda](std::uint64_t k) {
                                        return embed(fundamental(lambda, k));
                                      }),
                                      Annotation{lambda, std::nullopt});
    it = cache.emplace(lambda, std::vector<Ordinal>{base}).first;
  }
  std::vector<Ordinal>& chain = it->second;
  while (chain.size() <= n) chain.push_back(Ordinal::succ(chain.back()));
  return chain[n];
}

}  // namespace brwdec
