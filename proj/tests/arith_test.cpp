#include <gtest/gtest.h>

#include <random>

#include "brwdec/arith.hpp"
#include "brwdec/engine.hpp"

namespace brwdec {
namespace {

Cnf P(std::string_view s) { return parse_cnf(s); }
Ordinal E(std::string_view s) { return embed(parse_cnf(s)); }

constexpr Fuel kFuel{10000};

Cnf random_cnf(std::mt19937_64& rng, std::uint64_t max_exp) {
  std::vector<CnfTerm> terms;
  for (std::uint64_t e = max_exp + 1; e-- > 0;) {
    if (rng() % 2) terms.push_back(CnfTerm{Cnf::nat(e), 1 + rng() % 5});
  }
  return Cnf::from_terms(terms);
}

TEST(Add, Examples) {
  EXPECT_EQ(decide_finite(add(from_nat(2), from_nat(3))), FinitenessResult::Finite(5));
  EXPECT_TRUE(bisim(add(from_nat(1), omega()), omega(), kFuel).is_proven());
  Ordinal w1 = add(omega(), from_nat(1));
  ASSERT_TRUE(w1.is_succ());
  EXPECT_TRUE(w1.pred().same_node(omega()));
}

TEST(Mul, Examples) {
  EXPECT_TRUE(bisim(mul(omega(), from_nat(2)), E("w*2"), kFuel).is_proven());
  EXPECT_TRUE(mul(Ordinal::zero(), omega()).is_zero());
  EXPECT_TRUE(bisim(mul(from_nat(2), omega()), omega(), kFuel).is_proven());
}

TEST(Exp, Examples) {
  EXPECT_TRUE(bisim(exp(omega(), from_nat(2)), E("w^2"), kFuel).is_proven());
  EXPECT_EQ(decide_finite(exp(omega(), Ordinal::zero())), FinitenessResult::Finite(1));
  EXPECT_TRUE(bisim(exp(from_nat(1), omega()), from_nat(1), kFuel).is_proven());
  EXPECT_TRUE(exp(Ordinal::zero(), omega()).is_zero());
  EXPECT_TRUE(bisim(exp(from_nat(2), omega()), omega(), kFuel).is_proven());
}

TEST(Constants, FromNatAndOmega) {
  EXPECT_TRUE(from_nat(0).is_zero());
  EXPECT_EQ(decide_finite(omega()), FinitenessResult::Infinite());
  EXPECT_TRUE(omega().seq().at(7).same_node(from_nat(7)));
}

TEST(Homomorphism, AgreesWithOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Cnf a = random_cnf(rng, 2);
    Cnf b = random_cnf(rng, 2);
    EXPECT_TRUE(bisim(add(embed(a), embed(b)), embed(cnf_add(a, b)), kFuel).is_proven());
    EXPECT_TRUE(bisim(mul(embed(a), embed(b)), embed(cnf_mul(a, b)), kFuel).is_proven());
    Cnf e = random_cnf(rng, 1);
    EXPECT_TRUE(bisim(exp(omega(), embed(e)), embed(cnf_pow(Cnf::omega(), e)), kFuel).is_proven());
  }
}

TEST(Homomorphism, StrippedResultsNeverContradictOracle) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 60; ++i) {
    Cnf a = random_cnf(rng, 2);
    Cnf b = random_cnf(rng, 2);
    Cnf sum = cnf_add(a, b);
    Ordinal s = add(strip_annotations(embed(a)), strip_annotations(embed(b)));
    EXPECT_FALSE(s.cnf());
    for (const Cnf& g : {sum, random_cnf(rng, 3)}) {
      Verdict v = leq(embed(g), s, Fuel(2000));
      if (v.is_proven()) { EXPECT_LE(g, sum); }
      if (v.is_refuted()) { EXPECT_GT(g, sum); }
    }
  }
}

TEST(Annotations, UpperBoundsPropagate) {
  Ordinal bounded = Ordinal::lim(OrdinalSeq([](std::uint64_t n) { return from_nat(n); }),
                                 Annotation{std::nullopt, P("w*2")});
  Ordinal s = add(E("w^2"), bounded);
  EXPECT_FALSE(s.cnf());
  EXPECT_EQ(s.annotation().upper, P("w^2 + w*2"));
  Ordinal m = mul(bounded, from_nat(3));
  EXPECT_EQ(m.annotation().upper, P("w*6"));
}

TEST(RoundUp, Examples) {
  EXPECT_TRUE(round_up(Ordinal::zero()).is_zero());
  EXPECT_TRUE(bisim(round_up(from_nat(3)), omega(), kFuel).is_proven());
  EXPECT_TRUE(bisim(round_up(Ordinal::succ(omega())), E("w*2"), kFuel).is_proven());
  EXPECT_FALSE(round_up(E("w + 4")).is_succ());
}

TEST(RoundDown, Examples) {
  EXPECT_TRUE(round_down(from_nat(9)).is_zero());
  EXPECT_TRUE(round_down(Ordinal::succ(omega())).same_node(omega()));
  EXPECT_TRUE(round_down(E("w*2")).same_node(E("w*2")));
}

TEST(Split, Examples) {
  SplitResult s = split(from_nat(4));
  EXPECT_TRUE(s.limit_part.is_zero());
  EXPECT_EQ(s.finite_part, 4u);
  SplitResult t = split(add(E("w*2"), from_nat(3)));
  EXPECT_TRUE(t.limit_part.same_node(E("w*2")));
  EXPECT_EQ(t.finite_part, 3u);
  SplitResult u = split(omega());
  EXPECT_TRUE(u.limit_part.same_node(omega()));
  EXPECT_EQ(u.finite_part, 0u);
  Ordinal x = E("w^2 + w + 5");
  SplitResult v = split(x);
  EXPECT_TRUE(bisim(add(v.limit_part, from_nat(v.finite_part)), x, kFuel).is_proven());
}

TEST(Rounding, PreservesOrderOnSamples) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    Cnf a = random_cnf(rng, 2);
    Cnf b = random_cnf(rng, 2);
    if (!leq(embed(a), embed(b), kFuel).is_proven()) continue;
    EXPECT_TRUE(leq(round_up(embed(a)), round_up(embed(b)), kFuel).is_proven());
    EXPECT_TRUE(leq(round_down(embed(a)), round_down(embed(b)), kFuel).is_proven());
  }
}

TEST(Rounding, BelowALimitIffRoundUpIs) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    Cnf a = random_cnf(rng, 2);
    Cnf lambda = random_cnf(rng, 2).limit_part();
    Verdict plain = leq(embed(a), embed(lambda), kFuel);
    Verdict rounded = leq(round_up(embed(a)), embed(lambda), kFuel);
    ASSERT_TRUE(plain.decided() && rounded.decided());
    EXPECT_EQ(plain.kind, rounded.kind) << a.to_string() << " vs " << lambda.to_string();
  }
}

TEST(Sequences, ProducedLimitsIncreaseStrictly) {
  Ordinal a = E("w*2 + 1");
  Ordinal b = E("w^2");
  for (const Ordinal& o : {add(a, b), mul(a, b), exp(omega(), E("w")), exp(from_nat(2), b),
                           round_up(E("w^2 + 3"))}) {
    ASSERT_TRUE(o.is_lim());
    EXPECT_TRUE(check_strict_increase_prefix(o.seq(), 16, kFuel).is_proven());
  }
}

}  // namespace
}  // namespace brwdec
