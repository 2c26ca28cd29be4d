#include <gtest/gtest.h>

#include <stdexcept>

#include "brwdec/characteristic.hpp"
#include "brwdec/engine.hpp"

namespace brwdec {
namespace {

Cnf P(std::string_view s) { return parse_cnf(s); }

constexpr Fuel kFuel{20000};

bool holds_by(const BitSeq& s, std::uint64_t k) { return s.first_one(k).has_value(); }

TEST(Primes, Small) {
  std::vector<std::uint64_t> got;
  for (std::uint64_t n = 0; n < 30; ++n) {
    if (is_prime(n)) got.push_back(n);
  }
  EXPECT_EQ(got, (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
}

TEST(Families, TwinPrimeBits) {
  PropFamily f = family_twin_primes(100);
  EXPECT_TRUE(f.member(0).at(3));
  EXPECT_TRUE(f.member(10).at(11));
  EXPECT_FALSE(f.member(10).at(13));
  for (std::uint64_t n = 0; n < 40; ++n) EXPECT_FALSE(f.member(n).at(n));
  EXPECT_FALSE(holds_by(f.member(71), 200));
  EXPECT_TRUE(holds_by(f.member(70), 200));
}

TEST(Families, Constants) {
  EXPECT_TRUE(family_const(true).member(9).at(0));
  EXPECT_FALSE(holds_by(family_const(false).member(9), 50));
  PropFamily s = family_single_true(2);
  EXPECT_TRUE(s.member(2).at(0));
  EXPECT_FALSE(holds_by(s.member(1), 50));
  EXPECT_FALSE(holds_by(s.member(3), 50));
}

TEST(Families, TwoDimensional) {
  PropFamily2D t = family_threshold(5);
  EXPECT_TRUE(t.monotone());
  EXPECT_FALSE(holds_by(t.member(0, 4), 20));
  EXPECT_TRUE(holds_by(t.member(0, 5), 0));
  PropFamily2D d = family_diagonal();
  EXPECT_TRUE(holds_by(d.member(2, 3), 0));
  EXPECT_FALSE(holds_by(d.member(3, 3), 20));
  PropFamily col = d.column(4);
  EXPECT_TRUE(holds_by(col.member(3), 0));
  EXPECT_FALSE(holds_by(col.member(4), 20));
}

TEST(Families, Registry) {
  EXPECT_FALSE(family_names().empty());
  EXPECT_TRUE(lookup_family("const-true"));
  EXPECT_TRUE(lookup_family(" twin-primes( 50 ) "));
  EXPECT_TRUE(lookup_family("single-true(3)"));
  EXPECT_FALSE(lookup_family("twin-primes"));
  EXPECT_FALSE(lookup_family("nonsense"));
  EXPECT_TRUE(lookup_family_2d("threshold(2)"));
  EXPECT_TRUE(lookup_family_2d("diagonal"));
  EXPECT_TRUE(lookup_family_2d("twin-prime-counterexample"));
  EXPECT_FALSE(lookup_family_2d("const-true"));
}

TEST(Normalize, Down) {
  PropFamily q = normalize_down(family_single_true(0));
  EXPECT_TRUE(holds_by(q.member(0), 0));
  EXPECT_FALSE(holds_by(q.member(1), 30));
  PropFamily r = normalize_down(family_const(true));
  for (std::uint64_t n = 0; n < 6; ++n) EXPECT_TRUE(holds_by(r.member(n), 0));
}

TEST(Normalize, DownWaitsForEveryPrefixMember) {
  PropFamily staggered([](std::uint64_t n) { return BitSeq::first_one_at(10 - std::min<std::uint64_t>(n, 10)); },
                       "staggered");
  PropFamily q = normalize_down(staggered);
  EXPECT_EQ(q.member(3).first_one(20), std::optional<std::uint64_t>(10));
}

TEST(Normalize, Up) {
  PropFamily q = normalize_up(family_single_true(2));
  EXPECT_FALSE(holds_by(q.member(1), 30));
  EXPECT_TRUE(holds_by(q.member(2), 0));
  EXPECT_TRUE(holds_by(q.member(7), 0));
}

TEST(Psi, ConstTrueIsExact) {
  PropFamily t = family_const(true);
  EXPECT_EQ(psi_n(t, 0).annotation().exact, P("w"));
  EXPECT_EQ(psi_n(t, 3).annotation().exact, P("w*4"));
  EXPECT_EQ(psi(t).annotation().exact, P("w^2"));
}

TEST(Psi, UnboundedFamiliesCarryUpperBounds) {
  PropFamily s = family_single_true(1);
  Ordinal o = psi_n(s, 4);
  EXPECT_FALSE(o.annotation().exact);
  EXPECT_EQ(o.annotation().upper, P("w*5"));
  EXPECT_EQ(psi(s).annotation().upper, P("w^2"));
}

TEST(Psi, CountsHoldingMembers) {
  PropFamily s = family_single_true(1);
  EXPECT_TRUE(probe_ge(psi_n(s, 3), P("w*2"), kFuel, 6).summary.is_proven());
  EXPECT_FALSE(probe_ge(psi_n(s, 3), P("w*3"), kFuel, 6).summary.is_proven());
  EXPECT_FALSE(probe_ge(psi_n(s, 1), P("w*2"), kFuel, 6).summary.is_proven());
}

TEST(Psi, AllFalseFamily) {
  PropFamily f = family_const(false);
  for (std::uint64_t n = 1; n <= 4; ++n) {
    EXPECT_FALSE(probe_ge(psi_n(f, n), P("w*2"), kFuel, 6).summary.is_proven());
  }
  // psi_n = w for every n, so psi is w*2 and nothing higher.
  EXPECT_FALSE(probe_ge(psi(f), P("w*3"), kFuel, 6).summary.is_proven());
}

TEST(Psi, ElementsIncrease) {
  PropFamily s = family_twin_primes(200);
  Ordinal p = psi_n(s, 5);
  EXPECT_TRUE(check_strict_increase_prefix(p.seq(), 20, kFuel).is_proven());
  EXPECT_TRUE(check_strict_increase_prefix(psi(family_const(true)).seq(), 10, kFuel).is_proven());
}

TEST(Witnesses, Levels) {
  EXPECT_EQ(forall_witness(family_const(true)).level, P("w^2"));
  EXPECT_EQ(exists_witness(family_const(true)).level, P("w*3"));
  EXPECT_EQ(exists_forall_witness(family_threshold(1)).level, P("w^2 + w"));
}

TEST(Witnesses, Forall) {
  DecWitness w = forall_witness(family_const(true));
  EXPECT_TRUE(probe_ge(w.ordinal, w.level, kFuel, 6).summary.is_proven());
  DecWitness s = forall_witness(family_single_true(0));
  EXPECT_FALSE(probe_ge(s.ordinal, s.level, kFuel, 6).summary.is_proven());
}

TEST(Witnesses, Exists) {
  DecWitness w = exists_witness(family_single_true(3));
  EXPECT_TRUE(probe_ge(w.ordinal, w.level, kFuel, 6).summary.is_proven());
  DecWitness f = exists_witness(family_const(false));
  EXPECT_FALSE(probe_ge(f.ordinal, f.level, kFuel, 6).summary.is_proven());
}

TEST(Witnesses, ExistsForall) {
  DecWitness w = exists_forall_witness(family_threshold(2));
  EXPECT_TRUE(probe_ge(w.ordinal, w.level, Fuel(100000), 6).summary.is_proven());
  PropFamily2D unflagged([](std::uint64_t n, std::uint64_t m) { return BitSeq::constant(n == m); },
                         "n == m", false);
  EXPECT_THROW(exists_forall_witness(unflagged), std::invalid_argument);
}

}  // namespace
}  // namespace brwdec
