#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <variant>

#include "brwdec/cnf.hpp"

namespace brwdec {

class Ordinal;

/// Symbolic knowledge about an ordinal. `exact` means the tree is equal to
/// the embedding of that CNF; `upper` means the tree is at most that CNF.
/// Both are optional and may be dropped without changing the value.
struct Annotation {
  std::optional<Cnf> exact;
  std::optional<Cnf> upper;

  std::optional<Cnf> upper_or_exact() const { return exact ? exact : upper; }
};

/// A memoised total sequence of ordinals, the argument of a limit node.
/// Elements are computed in index order and cached; the generator must be
/// deterministic and must not read its own sequence.
class OrdinalSeq {
 public:
  using Generator = std::function<Ordinal(std::uint64_t)>;

  explicit OrdinalSeq(Generator generator);

  Ordinal at(std::uint64_t n) const;
  Ordinal operator[](std::uint64_t n) const;

  /// Number of elements materialised so far.
  std::uint64_t computed() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

enum class Shape { Zero, Succ, Lim };

/// A Brouwer tree: zero, a successor, or the limit of a strictly increasing
/// sequence. Values are immutable and cheap to copy; sharing is observable
/// through same_node() and is used by the comparison engine.
class Ordinal {
 public:
  /// Zero.
  Ordinal();

  static Ordinal zero();
  /// Annotation is derived from the predecessor.
  static Ordinal succ(const Ordinal& pred);
  /// The caller promises `seq` is strictly increasing and that `annotation`
  /// (if any) is true of the limit.
  static Ordinal lim(OrdinalSeq seq, Annotation annotation = {});

  Shape shape() const;
  bool is_zero() const { return shape() == Shape::Zero; }
  bool is_succ() const { return shape() == Shape::Succ; }
  bool is_lim() const { return shape() == Shape::Lim; }

  /// Requires is_succ().
  const Ordinal& pred() const;
  /// Requires is_lim().
  const OrdinalSeq& seq() const;

  const Annotation& annotation() const;
  const std::optional<Cnf>& cnf() const { return annotation().exact; }

  bool same_node(const Ordinal& other) const { return node_ == other.node_; }
  const void* id() const { return node_.get(); }

 private:
  struct Node;
  explicit Ordinal(std::shared_ptr<Node> node) : node_(std::move(node)) {}

  std::shared_ptr<Node> node_;

  friend Ordinal strip_annotations(const Ordinal& o);
};

struct IsZero {};
struct IsSucc {
  Ordinal pred;
};
struct IsLim {
  OrdinalSeq seq;
};
using Classification = std::variant<IsZero, IsSucc, IsLim>;

Classification classify(const Ordinal& o);
/// Inverse of classify.
Ordinal rebuild(const Classification& c);

struct FinitenessResult {
  bool finite = false;
  std::uint64_t value = 0;  // meaningful when finite

  static FinitenessResult Finite(std::uint64_t n) { return {true, n}; }
  static FinitenessResult Infinite() { return {false, 0}; }
  friend bool operator==(const FinitenessResult&, const FinitenessResult&) = default;
};

/// Total: counts successors down to zero; any limit makes the value infinite.
FinitenessResult decide_finite(const Ordinal& o);

/// Deep copy without annotations, memoised per node so that sharing in the
/// input is preserved in the output.
Ordinal strip_annotations(const Ordinal& o);

/// Embedding of a Cantor normal form. Hash-consed: equal CNFs give the same
/// node, and limits use the canonical fundamental sequence.
Ordinal embed(const Cnf& a);

}  // namespace brwdec
