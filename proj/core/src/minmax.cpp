#include "brwdec/minmax.hpp"

#include "brwdec/arith.hpp"

namespace brwdec {

namespace {

// lim_min on exact arguments equals the minimum of their round-downs, and
// is below both arguments in any case.
Annotation min_annotation(const Annotation& a, const Annotation& b) {
  Annotation out;
  if (a.exact && b.exact) {
    out.exact = cnf_min(cnf_round_down(*a.exact), cnf_round_down(*b.exact));
    return out;
  }
  auto ua = a.upper_or_exact();
  auto ub = b.upper_or_exact();
  if (ua && ub) {
    out.upper = cnf_min(cnf_round_down(*ua), cnf_round_down(*ub));
  } else if (ua) {
    out.upper = cnf_round_down(*ua);
  } else if (ub) {
    out.upper = cnf_round_down(*ub);
  }
  return out;
}

// Only called with two limits. The elementwise construction agrees with the
// CNF maximum below w^2; above that only an upper bound is recorded.
Annotation max_annotation(const Annotation& a, const Annotation& b) {
  Annotation out;
  if (a.exact && b.exact) {
    Cnf m = cnf_max(*a.exact, *b.exact);
    if (m < Cnf::omega_pow(Cnf::nat(2))) {
      out.exact = m;
      return out;
    }
  }
  auto ua = a.upper_or_exact();
  auto ub = b.upper_or_exact();
  if (ua && ub) out.upper = cnf_max(*ua, *ub);
  return out;
}

}  // namespace

Ordinal lim_min(const Ordinal& a, const Ordinal& b) {
  const Ordinal x = round_down(a);
  const Ordinal y = round_down(b);
  if (x.is_zero() || y.is_zero()) return Ordinal::zero();
  OrdinalSeq f = x.seq();
  OrdinalSeq g = y.seq();
  return Ordinal::lim(OrdinalSeq([f, g](std::uint64_t n) {
                        return add(lim_min(f.at(n), g.at(n)), from_nat(n));
                      }),
                      min_annotation(a.annotation(), b.annotation()));
}

Ordinal lim_max(const Ordinal& a, const Ordinal& b) {
  const Ordinal x = round_down(a);
  if (x.is_zero()) return b;
  const Ordinal y = round_down(b);
  if (y.is_zero()) return x;
  OrdinalSeq f = x.seq();
  OrdinalSeq g = y.seq();
  return Ordinal::lim(OrdinalSeq([f, g](std::uint64_t n) {
                        return add(lim_max(f.at(n), g.at(n)), from_nat(n));
                      }),
                      max_annotation(x.annotation(), y.annotation()));
}

}  // namespace brwdec
