#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "brwdec/cnf.hpp"
#include "brwdec/ordinal.hpp"
#include "brwdec/verdict.hpp"

namespace brwdec {

/// How a comparison was settled.
enum class Rule {
  None,         // undecided
  Annotation,   // both sides carry exact CNF annotations
  Bounds,       // upper-bound annotation against an exact one
  Reflexivity,  // a shared node
  Structure,    // zero/successor rules, finiteness
};

std::string_view to_string(Rule rule);

struct Comparison {
  Verdict verdict;
  Rule rule = Rule::None;
  /// Position in its chain of the literal that settled the query.
  std::uint64_t depth = 0;
};

/// Bounded semidecision of a <= b.
///
/// Works in rounds n = 0, 1, 2, ...; round n follows one chain of literals
/// looking for a proof and one looking for a refutation, entering every
/// limit at element n. The chains follow the order on Brouwer trees:
///   0 <= y;  succ x <= 0 fails;  succ x <= succ y iff x <= y;
///   lim f <= succ y iff lim f <= y;  lim f <= 0 fails;
///   succ x <= lim g iff succ x <= g(m) for some m, iff not (lim g <= x);
///   lim f <= lim g  if  lim f <= g(m) for some m;
///   lim f <= lim g fails if f(m) <= lim g fails for some m.
/// Each "some m" holds for all larger m once it holds for one, so a late
/// enough round finds it. Exact annotations short-circuit to the CNF order,
/// upper bounds decide against exact values, and an exact limit d + w on the
/// left is replaced by d <= g(m). Every literal and every element fetch costs
/// one unit of fuel; the schedule is deterministic, so a verdict reached
/// with fuel F is returned unchanged for any larger fuel.
Comparison compare_leq(const Ordinal& a, const Ordinal& b, Fuel fuel);

Verdict leq(const Ordinal& a, const Ordinal& b, Fuel fuel);
/// a < b, i.e. succ a <= b.
Verdict lt(const Ordinal& a, const Ordinal& b, Fuel fuel);
/// Both directions of <=, sharing one budget.
Verdict bisim(const Ordinal& a, const Ordinal& b, Fuel fuel);

struct LevelVerdict {
  Cnf level;
  Verdict verdict;
};

struct ProbeReport {
  Cnf target;
  /// Strictly increasing levels; the last entry is the target itself.
  std::vector<LevelVerdict> per_level;
  Verdict summary;
};

/// Levels probed below `target`: its fundamental sequence target[1..k_max]
/// when target is a limit not of the form d + w, otherwise w*1..w*k_max
/// below the target. The target is appended last.
std::vector<Cnf> probe_levels(const Cnf& target, std::uint64_t k_max);

/// "o >= target" at each level with an independent budget `fuel`, closed
/// under the obvious implications (a proven level proves every lower level,
/// a refuted level refutes every higher one). The summary is the verdict at
/// the target.
ProbeReport probe_ge(const Ordinal& o, const Cnf& target, Fuel fuel, std::uint64_t k_max);

/// Proven iff lt(s(n), s(n+1)) is proven for every n < count, each pair
/// with its own budget; Refuted if any pair is refuted.
Verdict check_strict_increase_prefix(const OrdinalSeq& s, std::uint64_t count, Fuel fuel);

}  // namespace brwdec
