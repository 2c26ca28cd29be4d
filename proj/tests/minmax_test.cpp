#include <gtest/gtest.h>

#include <random>

#include "brwdec/arith.hpp"
#include "brwdec/engine.hpp"
#include "brwdec/minmax.hpp"

namespace brwdec {
namespace {

Cnf P(std::string_view s) { return parse_cnf(s); }
Ordinal E(std::string_view s) { return embed(parse_cnf(s)); }
Ordinal bare(const Cnf& c) { return strip_annotations(embed(c)); }

constexpr Fuel kFuel{10000};

Cnf random_limit(std::mt19937_64& rng, std::uint64_t max_exp) {
  std::vector<CnfTerm> terms;
  for (std::uint64_t e = max_exp + 1; e-- > 1;) {
    if (rng() % 2) terms.push_back(CnfTerm{Cnf::nat(e), 1 + rng() % 5});
  }
  return Cnf::from_terms(terms);
}

TEST(LimMin, Examples) {
  EXPECT_TRUE(bisim(lim_min(omega(), E("w*2")), omega(), kFuel).is_proven());
  EXPECT_TRUE(lim_min(Ordinal::zero(), omega()).is_zero());
  EXPECT_TRUE(bisim(lim_min(E("w^2"), E("w^2")), E("w^2"), kFuel).is_proven());
}

TEST(LimMin, StrippedExamplesByProbe) {
  Ordinal m = lim_min(bare(P("w")), bare(P("w*2")));
  EXPECT_FALSE(m.cnf());
  EXPECT_TRUE(probe_ge(m, P("w"), kFuel, 6).summary.is_proven());
  EXPECT_FALSE(probe_ge(m, P("w + 1"), kFuel, 6).summary.is_proven());
}

TEST(LimMin, SuccessorArgumentsAreRoundedDown) {
  Ordinal m = lim_min(E("w*3 + 4"), E("w*5"));
  EXPECT_EQ(m.cnf(), P("w*3"));
  EXPECT_TRUE(lim_min(E("w"), from_nat(7)).is_zero());
}

TEST(LimMin, IsAMinimumOnSamples) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    Cnf a = random_limit(rng, 3);
    Cnf b = random_limit(rng, 3);
    Ordinal m = lim_min(embed(a), embed(b));
    EXPECT_TRUE(leq(m, embed(a), kFuel).is_proven());
    EXPECT_TRUE(leq(m, embed(b), kFuel).is_proven());
    Ordinal mb = lim_min(bare(a), bare(b));
    for (const Cnf& g : {cnf_min(a, b), P("w*2"), P("w^2 + 1")}) {
      bool truth = g <= a && g <= b;
      Verdict v = leq(embed(g), m, kFuel);
      ASSERT_TRUE(v.decided());
      EXPECT_EQ(v.is_proven(), truth);
      Verdict vb = leq(embed(g), mb, Fuel(2000));
      if (vb.decided()) { EXPECT_EQ(vb.is_proven(), truth); }
    }
  }
}

TEST(LimMin, MonotoneOnSamples) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 60; ++i) {
    Cnf a1 = random_limit(rng, 2), a2 = random_limit(rng, 2);
    Cnf b1 = random_limit(rng, 2), b2 = random_limit(rng, 2);
    if (a2 < a1) std::swap(a1, a2);
    if (b2 < b1) std::swap(b1, b2);
    Verdict v = leq(lim_min(embed(a1), embed(b1)), lim_min(embed(a2), embed(b2)), kFuel);
    EXPECT_TRUE(v.is_proven());
    Verdict vb = leq(lim_min(bare(a1), bare(b1)), lim_min(bare(a2), bare(b2)), Fuel(2000));
    EXPECT_FALSE(vb.is_refuted());
  }
}

TEST(LimMax, Examples) {
  EXPECT_TRUE(bisim(lim_max(omega(), E("w*2")), E("w*2"), kFuel).is_proven());
  EXPECT_TRUE(lim_max(Ordinal::zero(), omega()).same_node(omega()));
  EXPECT_TRUE(bisim(lim_max(from_nat(7), omega()), omega(), kFuel).is_proven());
}

TEST(LimMax, AboveOmegaSquaredOnlyBounded) {
  Ordinal m = lim_max(E("w^2"), E("w*3"));
  EXPECT_FALSE(m.cnf());
  EXPECT_EQ(m.annotation().upper, P("w^2"));
}

TEST(LimMax, PropertyAtOmegaMultiplesOnStrippedInputs) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    Cnf a = random_limit(rng, 2);
    Cnf b = random_limit(rng, 2);
    Ordinal m = lim_max(bare(a), bare(b));
    for (std::uint64_t k = 1; k <= 5; ++k) {
      Cnf level = Cnf::omega_times(k);
      bool truth = level <= a || level <= b;
      Verdict v = probe_ge(m, level, kFuel, 6).summary;
      if (truth) {
        EXPECT_TRUE(v.is_proven()) << a.to_string() << ", " << b.to_string() << " at " << k;
      } else {
        EXPECT_FALSE(v.is_proven());
      }
    }
  }
}

}  // namespace
}  // namespace brwdec
