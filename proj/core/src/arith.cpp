#include "brwdec/arith.hpp"

#include <optional>
#include <stdexcept>

namespace brwdec {

namespace {

template <typename Op>
std::optional<Cnf> lift(const std::optional<Cnf>& a, const std::optional<Cnf>& b, Op op) {
  if (!a || !b) return std::nullopt;
  try {
    return op(*a, *b);
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
}

template <typename Op>
Annotation combine(const Ordinal& a, const Ordinal& b, Op op) {
  const Annotation& x = a.annotation();
  const Annotation& y = b.annotation();
  Annotation out;
  out.exact = lift(x.exact, y.exact, op);
  if (!out.exact) out.upper = lift(x.upper_or_exact(), y.upper_or_exact(), op);
  return out;
}

bool is_one(const Ordinal& a) { return a.is_succ() && a.pred().is_zero(); }

}  // namespace

Ordinal add(const Ordinal& a, const Ordinal& b) {
  switch (b.shape()) {
    case Shape::Zero:
      return a;
    case Shape::Succ:
      if (a.is_zero()) return b;
      return Ordinal::succ(add(a, b.pred()));
    case Shape::Lim:
      break;
  }
  if (a.is_zero()) return b;
  OrdinalSeq g = b.seq();
  return Ordinal::lim(OrdinalSeq([a, g](std::uint64_t n) { return add(a, g.at(n)); }),
                      combine(a, b, cnf_add));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  switch (b.shape()) {
    case Shape::Zero:
      return Ordinal::zero();
    case Shape::Succ:
      return add(mul(a, b.pred()), a);
    case Shape::Lim:
      break;
  }
  if (a.is_zero()) return Ordinal::zero();
  // a > 0, so n -> a * g(n) is strictly increasing along with g.
  OrdinalSeq g = b.seq();
  return Ordinal::lim(OrdinalSeq([a, g](std::uint64_t n) { return mul(a, g.at(n)); }),
                      combine(a, b, cnf_mul));
}

Ordinal exp(const Ordinal& a, const Ordinal& b) {
  switch (b.shape()) {
    case Shape::Zero:
      return from_nat(1);
    case Shape::Succ:
      return mul(exp(a, b.pred()), a);
    case Shape::Lim:
      break;
  }
  if (a.is_zero()) return Ordinal::zero();
  if (is_one(a)) return from_nat(1);
  // a >= 2, so n -> a ^ g(n) is strictly increasing along with g.
  OrdinalSeq g = b.seq();
  return Ordinal::lim(OrdinalSeq([a, g](std::uint64_t n) { return exp(a, g.at(n)); }),
                      combine(a, b, cnf_pow));
}

Ordinal from_nat(std::uint64_t n) { return embed(Cnf::nat(n)); }

Ordinal omega() { return embed(Cnf::omega()); }

Ordinal round_up(const Ordinal& a) {
  if (!a.is_succ()) return a;
  return add(a.pred(), omega());
}

Ordinal round_down(const Ordinal& a) { return split(a).limit_part; }

SplitResult split(const Ordinal& a) {
  SplitResult out;
  const Ordinal* cur = &a;
  while (cur->is_succ()) {
    ++out.finite_part;
    cur = &cur->pred();
  }
  out.limit_part = *cur;
  return out;
}

}  // namespace brwdec
