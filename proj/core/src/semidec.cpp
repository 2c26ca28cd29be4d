#include "brwdec/semidec.hpp"

#include <stdexcept>

#include "brwdec/arith.hpp"
#include "brwdec/minmax.hpp"

namespace brwdec {

namespace {

OrdinalSeq jump_to(const BitSeq& s, const Cnf& target) {
  return OrdinalSeq([s, target](std::uint64_t n) {
    if (n == 0) return Ordinal::zero();
    auto hit = s.first_one(n - 1);
    if (!hit) return embed(Cnf::nat(n));
    return embed(cnf_add(target, Cnf::nat(n - 1 - *hit)));
  });
}

// Peel `count` successors, leaving zero and limits alone.
Ordinal peel(Ordinal y, std::uint64_t count) {
  for (; count > 0 && y.is_succ(); --count) y = y.pred();
  return y;
}

}  // namespace

OrdinalSeq jump(const BitSeq& s) { return jump_to(s, Cnf::omega()); }

OrdinalSeq double_jump(const BitSeq& s) { return jump_to(s, Cnf::omega_times(2)); }

BitSeq unjump(const OrdinalSeq& t) {
  return BitSeq([t](std::uint64_t n) { return !decide_finite(t.at(n)).finite; }, "unjump");
}

DecWitness semidec_to_witness(const BitSeq& s) {
  Annotation bound{std::nullopt, Cnf::omega_times(2)};
  return DecWitness{cnf_add(Cnf::omega(), Cnf::nat(1)), Ordinal::lim(jump(s), bound)};
}

BitSeq witness_to_semidec(const DecWitness& w) {
  const Cnf& level = w.level;
  Ordinal y;
  if (level == Cnf::omega_times(2)) {
    // w*2 <= y iff w+1 <= round_down(y)
    y = round_down(w.ordinal);
  } else if (level.is_successor() && level.limit_part() == Cnf::omega()) {
    y = peel(w.ordinal, level.finite_part() - 1);
  } else {
    throw std::invalid_argument("witness_to_semidec: level must be w+n or w*2, got " +
                                level.to_string());
  }
  switch (y.shape()) {
    case Shape::Zero:
      return BitSeq::zeros();
    case Shape::Succ:
      return BitSeq::constant(!decide_finite(y.pred()).finite);
    case Shape::Lim:
      break;
  }
  return unjump(y.seq());
}

DecWitness shift_level(const DecWitness& w, std::uint64_t n) {
  return DecWitness{cnf_add(w.level, Cnf::nat(n)), add(w.ordinal, from_nat(n))};
}

DecWitness limit_normalize(const DecWitness& w) {
  if (!w.level.is_successor()) return DecWitness{w.level, round_down(w.ordinal)};
  // lambda + n <= y iff lambda + 1 <= y' iff lambda + w <= round_up(y')
  Ordinal y = peel(w.ordinal, w.level.finite_part() - 1);
  return DecWitness{w.level, round_up(y)};
}

DecWitness conj_witness(const DecWitness& p, const DecWitness& q) {
  if (p.level != q.level) {
    throw std::invalid_argument("conj_witness: mismatched levels " + p.level.to_string() +
                                " and " + q.level.to_string());
  }
  return DecWitness{p.level,
                    lim_min(limit_normalize(p).ordinal, limit_normalize(q).ordinal)};
}

DecWitness disj_witness(const DecWitness& p, const DecWitness& q) {
  if (p.level != q.level) {
    throw std::invalid_argument("disj_witness: mismatched levels " + p.level.to_string() +
                                " and " + q.level.to_string());
  }
  if (!cnf_is_omega_linear(p.level)) {
    throw std::invalid_argument("disj_witness: level must be w*k + n, got " +
                                p.level.to_string());
  }
  return DecWitness{p.level,
                    lim_max(limit_normalize(p).ordinal, limit_normalize(q).ordinal)};
}

}  // namespace brwdec
