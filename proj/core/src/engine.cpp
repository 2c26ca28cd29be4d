#include "brwdec/engine.hpp"

#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace brwdec {

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::None:
      return "none";
    case Rule::Annotation:
      return "annotation";
    case Rule::Bounds:
      return "bounds";
    case Rule::Reflexivity:
      return "reflexivity";
    case Rule::Structure:
      return "structure";
  }
  return "none";
}

namespace {

// d with d + w == c, if c has that form.
std::optional<Cnf> omega_predecessor(const Cnf& c) {
  if (!c.is_limit() || c.terms().back().exponent != Cnf::nat(1)) return std::nullopt;
  return fundamental(c, 0);
}

class Search {
 public:
  explicit Search(Fuel fuel) : budget_(fuel) {}

  Comparison run(const Ordinal& a, const Ordinal& b) {
    // Round n enters every limit at element n. Each round costs fuel, so no
    // sequence is forced beyond the budget.
    for (std::uint64_t index = 0;; ++index) {
      if (follow(a, b, true, true, index)) break;
      if (follow(a, b, false, false, index)) break;
    }
    Comparison out;
    if (answer_) {
      out.verdict = *answer_ ? Verdict::proven(budget_.spent()) : Verdict::refuted(budget_.spent());
      out.rule = rule_;
      out.depth = depth_;
    } else {
      out.verdict = Verdict::unknown(budget_.spent());
    }
    return out;
  }

 private:
  // Follows the chain of literals starting at "x <= y". If a literal's truth
  // value equals `trigger` the query's answer is `result`; the opposite truth
  // value ends the chain, unless every step so far was an equivalence.
  // Every limit is entered at element `index`.
  // Returns true when the search is over (answered or out of fuel).
  bool follow(Ordinal x, Ordinal y, bool trigger, const bool result, const std::uint64_t index) {
    std::set<std::tuple<const void*, const void*, bool>> seen;
    std::vector<Ordinal> pinned;
    std::uint64_t depth = 0;
    bool equivalent = true;
    auto settle = [&](bool truth, Rule rule) {
      if (truth != trigger && !equivalent) return false;
      answer_ = truth == trigger ? result : !result;
      rule_ = rule;
      depth_ = depth;
      return true;
    };
    for (;; ++depth) {
      if (!budget_.take()) return true;
      if (!seen.emplace(x.id(), y.id(), trigger).second) return false;
      pinned.push_back(x);
      pinned.push_back(y);

      if (x.same_node(y)) return settle(true, Rule::Reflexivity);
      const Annotation& ax = x.annotation();
      const Annotation& ay = y.annotation();
      // An annotation-free side may be the stripped copy of the other.
      if ((ay.exact && !ax.exact && x.same_node(strip_annotations(y))) ||
          (ax.exact && !ay.exact && y.same_node(strip_annotations(x)))) {
        return settle(true, Rule::Reflexivity);
      }
      if (ax.exact && ay.exact) return settle(*ax.exact <= *ay.exact, Rule::Annotation);
      if (auto ux = ax.upper_or_exact(); ux && ay.exact && *ux <= *ay.exact) {
        return settle(true, Rule::Bounds);
      }
      if (auto uy = ay.upper_or_exact(); uy && ax.exact && *uy < *ax.exact) {
        return settle(false, Rule::Bounds);
      }
      if (x.is_zero()) return settle(true, Rule::Structure);
      if (y.is_zero()) return settle(false, Rule::Structure);
      if (y.is_succ()) {
        if (x.is_succ()) x = x.pred();
        y = y.pred();
        continue;
      }

      // y is a limit from here on.
      if (x.is_succ()) {
        // A finite left side is below every limit.
        const Ordinal* cur = &x;
        while (cur->is_succ()) {
          if (!budget_.take()) return true;
          cur = &cur->pred();
        }
        if (cur->is_zero()) return settle(true, Rule::Structure);

        if (!trigger) {
          // succ x' <= lim g fails iff lim g <= x'
          Ordinal below = x.pred();
          x = y;
          y = std::move(below);
          trigger = true;
          continue;
        }
        if (x.cnf()) {
          // lambda + n <= lim g iff lambda + w <= lim g
          x = embed(cnf_round_up(*x.cnf()));
        } else {
          if (!budget_.take()) return true;
          y = y.seq().at(index);
          equivalent = false;
          continue;
        }
      }

      // Both limits.
      if (!budget_.take()) return true;
      if (trigger) {
        if (x.cnf()) {
          // d + w <= lim g iff d <= g(m) for some m
          if (auto d = omega_predecessor(*x.cnf())) x = embed(*d);
        }
        y = y.seq().at(index);
      } else {
        x = x.seq().at(index);
      }
      equivalent = false;
    }
  }

  Budget budget_;
  std::optional<bool> answer_;
  Rule rule_ = Rule::None;
  std::uint64_t depth_ = 0;
};

}  // namespace

Comparison compare_leq(const Ordinal& a, const Ordinal& b, Fuel fuel) {
  return Search(fuel).run(a, b);
}

Verdict leq(const Ordinal& a, const Ordinal& b, Fuel fuel) {
  return compare_leq(a, b, fuel).verdict;
}

Verdict lt(const Ordinal& a, const Ordinal& b, Fuel fuel) {
  return leq(Ordinal::succ(a), b, fuel);
}

Verdict bisim(const Ordinal& a, const Ordinal& b, Fuel fuel) {
  Verdict first = leq(a, b, fuel);
  if (!first.is_proven()) return first;
  Verdict second = leq(b, a, Fuel(fuel.budget - first.spent));
  second.spent += first.spent;
  return second;
}

std::vector<Cnf> probe_levels(const Cnf& target, std::uint64_t k_max) {
  std::vector<Cnf> levels;
  const bool ladder = target.is_limit() && !omega_predecessor(target);
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    Cnf level = ladder ? fundamental(target, k) : Cnf::omega_times(k);
    if (!(level < target)) break;
    if (!levels.empty() && !(levels.back() < level)) continue;
    levels.push_back(std::move(level));
  }
  levels.push_back(target);
  return levels;
}

ProbeReport probe_ge(const Ordinal& o, const Cnf& target, Fuel fuel, std::uint64_t k_max) {
  ProbeReport report;
  report.target = target;
  for (Cnf& level : probe_levels(target, k_max)) {
    Verdict v = leq(embed(level), o, fuel);
    report.per_level.push_back(LevelVerdict{std::move(level), v});
  }
  auto& levels = report.per_level;
  for (std::size_t i = levels.size(); i-- > 0;) {
    if (!levels[i].verdict.is_proven()) continue;
    for (std::size_t j = 0; j < i; ++j) {
      if (levels[j].verdict.is_unknown()) levels[j].verdict.kind = Verdict::Kind::Proven;
    }
    break;
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!levels[i].verdict.is_refuted()) continue;
    for (std::size_t j = i + 1; j < levels.size(); ++j) {
      if (levels[j].verdict.is_unknown()) levels[j].verdict.kind = Verdict::Kind::Refuted;
    }
    break;
  }
  report.summary = levels.back().verdict;
  return report;
}

Verdict check_strict_increase_prefix(const OrdinalSeq& s, std::uint64_t count, Fuel fuel) {
  std::uint64_t spent = 0;
  bool all = true;
  Ordinal prev = s.at(0);
  for (std::uint64_t n = 0; n < count; ++n) {
    Ordinal cur = s.at(n + 1);
    Verdict v = lt(prev, cur, fuel);
    spent += v.spent;
    if (v.is_refuted()) return Verdict::refuted(spent);
    if (!v.is_proven()) all = false;
    prev = std::move(cur);
  }
  return all ? Verdict::proven(spent) : Verdict::unknown(spent);
}

}  // namespace brwdec
