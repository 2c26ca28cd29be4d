#include <gtest/gtest.h>

#include <atomic>
#include <thread>
#include <vector>

#include "brwdec/arith.hpp"
#include "brwdec/engine.hpp"
#include "brwdec/ordinal.hpp"

namespace brwdec {
namespace {

TEST(Ordinal, ClassifyAndRebuild) {
  Ordinal z = Ordinal::zero();
  EXPECT_TRUE(std::holds_alternative<IsZero>(classify(z)));
  Ordinal one = Ordinal::succ(z);
  auto c = classify(one);
  ASSERT_TRUE(std::holds_alternative<IsSucc>(c));
  EXPECT_TRUE(std::get<IsSucc>(c).pred.same_node(z));
  EXPECT_TRUE(rebuild(c).is_succ());
  Ordinal w = omega();
  auto l = classify(w);
  ASSERT_TRUE(std::holds_alternative<IsLim>(l));
  EXPECT_TRUE(rebuild(l).is_lim());
}

TEST(Ordinal, AccessorsCheckShape) {
  EXPECT_THROW(Ordinal::zero().pred(), std::logic_error);
  EXPECT_THROW(Ordinal::zero().seq(), std::logic_error);
  EXPECT_THROW(omega().pred(), std::logic_error);
}

TEST(Ordinal, DecideFinite) {
  EXPECT_EQ(decide_finite(Ordinal::zero()), FinitenessResult::Finite(0));
  EXPECT_EQ(decide_finite(from_nat(5)), FinitenessResult::Finite(5));
  EXPECT_EQ(decide_finite(omega()), FinitenessResult::Infinite());
  EXPECT_EQ(decide_finite(Ordinal::succ(omega())), FinitenessResult::Infinite());
}

TEST(Ordinal, SuccessorDerivesAnnotation) {
  Ordinal x = Ordinal::succ(omega());
  ASSERT_TRUE(x.cnf());
  EXPECT_EQ(*x.cnf(), parse_cnf("w + 1"));
  Ordinal bounded = Ordinal::lim(OrdinalSeq([](std::uint64_t n) { return from_nat(n); }),
                                 Annotation{std::nullopt, parse_cnf("w*2")});
  Ordinal y = Ordinal::succ(bounded);
  EXPECT_FALSE(y.cnf());
  EXPECT_EQ(y.annotation().upper, parse_cnf("w*2 + 1"));
}

TEST(Embed, IsHashConsed) {
  EXPECT_TRUE(embed(parse_cnf("w^2 + 3")).same_node(embed(parse_cnf("w^2 + 3"))));
  EXPECT_TRUE(embed(Cnf::nat(0)).same_node(Ordinal::zero()));
  Ordinal w2 = embed(parse_cnf("w^2"));
  EXPECT_TRUE(w2.seq().at(3).same_node(embed(parse_cnf("w*3"))));
}

TEST(Embed, ShapeMatchesCnf) {
  EXPECT_TRUE(embed(parse_cnf("w*2 + 1")).is_succ());
  EXPECT_TRUE(embed(parse_cnf("w*2")).is_lim());
  EXPECT_EQ(*embed(parse_cnf("w^w")).cnf(), parse_cnf("w^w"));
}

TEST(OrdinalSeq, MemoisesInOrder) {
  std::atomic<int> calls{0};
  OrdinalSeq s([&](std::uint64_t n) {
    ++calls;
    return from_nat(n);
  });
  EXPECT_EQ(s.computed(), 0u);
  Ordinal a = s.at(4);
  EXPECT_EQ(s.computed(), 5u);
  EXPECT_EQ(calls.load(), 5);
  EXPECT_TRUE(s.at(4).same_node(a));
  EXPECT_EQ(calls.load(), 5);
}

TEST(OrdinalSeq, ConcurrentReadersSeeOneValue) {
  OrdinalSeq s([](std::uint64_t n) { return Ordinal::succ(from_nat(n)); });
  std::vector<std::thread> threads;
  std::vector<const void*> ids(8);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] { ids[t] = s.at(200).id(); });
  }
  for (auto& th : threads) th.join();
  for (const void* id : ids) EXPECT_EQ(id, ids[0]);
}

TEST(Strip, RemovesAnnotationsAndKeepsSharing) {
  Ordinal w2 = embed(parse_cnf("w^2 + 1"));
  Ordinal s = strip_annotations(w2);
  EXPECT_FALSE(s.cnf());
  EXPECT_FALSE(s.annotation().upper);
  EXPECT_TRUE(s.is_succ());
  EXPECT_TRUE(strip_annotations(w2).same_node(s));
  // Shared subtrees stay shared.
  Ordinal a = strip_annotations(embed(parse_cnf("w*3")));
  Ordinal b = strip_annotations(embed(parse_cnf("w^2"))).seq().at(3);
  EXPECT_TRUE(a.same_node(b));
}

TEST(Ordinal, LongSuccessorChainsAreReleasedIteratively) {
  Ordinal x = Ordinal::zero();
  for (int i = 0; i < 1'000'000; ++i) x = Ordinal::succ(x);
  EXPECT_EQ(decide_finite(x), FinitenessResult::Finite(1'000'000));
  x = Ordinal::zero();
  SUCCEED();
}

}  // namespace
}  // namespace brwdec
