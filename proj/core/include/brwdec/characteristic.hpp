#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "brwdec/bitseq.hpp"
#include "brwdec/ordinal.hpp"
#include "brwdec/semidec.hpp"

namespace brwdec {

/// A family P_0, P_1, ... of semidecidable propositions.
class PropFamily {
 public:
  using Members = std::function<BitSeq(std::uint64_t)>;

  /// `hit_bound`, if given, promises that every member has a 1 at some
  /// index <= *hit_bound (so the family is uniformly true).
  PropFamily(Members members, std::string description,
             std::optional<std::uint64_t> hit_bound = std::nullopt);

  BitSeq member(std::uint64_t n) const;
  const std::string& description() const;
  std::optional<std::uint64_t> uniform_hit_bound() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// A doubly indexed family P(n, m). `monotone` asserts P(n, m) -> P(n, m+1).
class PropFamily2D {
 public:
  using Members = std::function<BitSeq(std::uint64_t n, std::uint64_t m)>;
  /// Uniform hit bound of column m, if known.
  using ColumnBound = std::function<std::optional<std::uint64_t>(std::uint64_t m)>;

  PropFamily2D(Members members, std::string description, bool monotone,
               ColumnBound column_bound = nullptr);

  BitSeq member(std::uint64_t n, std::uint64_t m) const;
  /// n -> P(n, m), memoised per column.
  PropFamily column(std::uint64_t m) const;
  const std::string& description() const;
  bool monotone() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// Q_i holds iff P_0..P_i all hold: bit k of Q_i is 1 iff each P_j (j <= i)
/// has a 1 at some index <= k.
PropFamily normalize_down(const PropFamily& p);
/// Q_i holds iff one of P_0..P_i holds: bitwise or.
PropFamily normalize_up(const PropFamily& p);

/// lim (k -> w * t_k + k), where t_k counts the members among P_0..P_{n-1}
/// with a 1 at some index <= k. n = 0 gives w.
Ordinal psi_n(const PropFamily& p, std::uint64_t n);
/// lim (n -> psi_n(P, n) + n).
Ordinal psi(const PropFamily& p);

/// "every P_n", level w^2.
DecWitness forall_witness(const PropFamily& p);
/// "some P_n", level w*3.
DecWitness exists_witness(const PropFamily& p);
/// "some m with P(n, m) for every n", level w^2 + w. Throws
/// std::invalid_argument unless the family is flagged monotone.
DecWitness exists_forall_witness(const PropFamily2D& p);

bool is_prime(std::uint64_t n);

/// Member n: bit i is 1 iff n < i <= cap and i, i+2 are both prime.
PropFamily family_twin_primes(std::uint64_t cap);
PropFamily family_const(bool value);
/// Member j is all ones, every other member all zeros.
PropFamily family_single_true(std::uint64_t j);
/// P(n, m) = m >= m0.
PropFamily2D family_threshold(std::uint64_t m0);
/// P(n, m) = n < m.
PropFamily2D family_diagonal();
/// P(n, m) = "n >= m implies n and n+2 are not both prime".
PropFamily2D family_twin_prime_counterexample();

/// Names accepted by lookup_family / lookup_family_2d.
std::vector<std::string> family_names();
std::optional<PropFamily> lookup_family(const std::string& text);
std::optional<PropFamily2D> lookup_family_2d(const std::string& text);

}  // namespace brwdec
