#include <gtest/gtest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "brwdec/cli/run.hpp"
#include "brwdec/cli/subject.hpp"
#include "brwdec/engine.hpp"

namespace brwdec::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome ord(std::vector<std::string> args) {
  args.insert(args.begin(), "ord");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Subject, ParsesPlainCnf) {
  EXPECT_EQ(parse_subject("w*2 + 3").annotation().exact, parse_cnf("w*2 + 3"));
}

TEST(Subject, ParsesConstructions) {
  Ordinal m = parse_subject("lim-min(w*2, w^2)");
  EXPECT_TRUE(bisim(m, embed(parse_cnf("w*2")), Fuel(10000)).is_proven());
  EXPECT_TRUE(parse_subject("round-up(w + 3)").annotation().exact == parse_cnf("w*2"));
  EXPECT_TRUE(parse_subject("round-down(w + 3)").annotation().exact == parse_cnf("w"));
  EXPECT_FALSE(parse_subject("psi(twin-primes(100))").annotation().exact);
  EXPECT_NO_THROW(parse_subject("lim-jump(first-one(3))"));
  EXPECT_NO_THROW(parse_subject("lim-max(w, psi(const-true))"));
}

TEST(Subject, ErrorsCarryPositions) {
  try {
    parse_subject("w + ");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_subject("psi(nonsense)"), ParseError);
  EXPECT_THROW(parse_subject("lim-min(w)"), ParseError);
}

TEST(Subject, BitSequences) {
  EXPECT_FALSE(parse_bitseq("zeros").first_one(50));
  EXPECT_EQ(parse_bitseq("ones").first_one(5), std::optional<std::uint64_t>(0));
  EXPECT_EQ(parse_bitseq("first-one(4)").first_one(50), std::optional<std::uint64_t>(4));
  EXPECT_EQ(parse_bitseq("001:zeros").first_one(50), std::optional<std::uint64_t>(2));
  EXPECT_EQ(parse_bitseq("000:ones").first_one(50), std::optional<std::uint64_t>(3));
  EXPECT_EQ(parse_bitseq("twin-prime-above(4)").first_one(50), std::optional<std::uint64_t>(5));
  EXPECT_THROW(parse_bitseq("012:zeros"), ParseError);
}

TEST(Run, EvalPrintsNormalForm) {
  Outcome o = ord({"eval", "w + w*2 + 1 + 2"});
  EXPECT_EQ(o.code, kExitProven);
  EXPECT_EQ(o.out, "w*3 + 3\n");
}

TEST(Run, CmpReportsRelation) {
  Outcome lt = ord({"cmp", "w*2", "w^2"});
  EXPECT_EQ(lt.code, kExitProven);
  EXPECT_EQ(lt.out, "Proven (LT via annotation)\n");
  Outcome gt = ord({"cmp", "w^2", "w*2"});
  EXPECT_EQ(gt.code, kExitRefuted);
  Outcome eq = ord({"cmp", "1 + w", "w"});
  EXPECT_EQ(eq.code, kExitProven);
  EXPECT_NE(eq.out.find("EQ"), std::string::npos);
}

TEST(Run, ProbeExitCodes) {
  EXPECT_EQ(ord({"probe", "w^2", "w*3"}).code, kExitProven);
  EXPECT_EQ(ord({"probe", "w*2", "w*3"}).code, kExitRefuted);
  EXPECT_EQ(ord({"probe", "lim-jump(zeros)", "w + 1", "--fuel", "300"}).code, kExitUnknown);
}

TEST(Run, UsageErrors) {
  EXPECT_EQ(ord({}).code, kExitUsage);
  EXPECT_EQ(ord({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(ord({"eval", "w +"}).code, kExitUsage);
  EXPECT_EQ(ord({"probe", "w", "psi(const-true)"}).code, kExitUsage);
  EXPECT_EQ(ord({"probe", "w", "w", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(ord({"psi", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(ord({"psi", "const-true", "--mode", "exists-forall"}).code, kExitUsage);
  Outcome e = ord({"eval", "w + -1"});
  EXPECT_NE(e.err.find("parse error"), std::string::npos);
}

TEST(Run, SelftestWithoutHook) {
  EXPECT_EQ(ord({"selftest"}).code, kExitUsage);
  std::ostringstream out, err;
  int code = run({"ord", "selftest"}, out, err, [](std::ostream& os) {
    os << "ok\n";
    return 0;
  });
  EXPECT_EQ(code, 0);
  EXPECT_EQ(out.str(), "ok\n");
}

TEST(Run, JsonReport) {
  Outcome o = ord({"psi", "const-true", "--format", "json", "--k-max", "3"});
  ASSERT_EQ(o.code, kExitProven);
  nlohmann::json j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["command"], "psi");
  EXPECT_EQ(j["subject"], "const-true");
  EXPECT_EQ(j["target"], "w^2");
  EXPECT_EQ(j["summary"], "Proven");
  EXPECT_EQ(j["exit"], 0);
  ASSERT_EQ(j["levels"].size(), 4u);
  EXPECT_EQ(j["levels"][0]["level"], "w");
  EXPECT_EQ(j["levels"][3]["level"], "w^2");
  for (const auto& l : j["levels"]) {
    EXPECT_TRUE(l.contains("verdict"));
    EXPECT_TRUE(l["fuel_spent"].is_number_unsigned());
  }
}

TEST(Run, FuelFromEnvironment) {
  ::setenv("BRWDEC_FUEL", "3", 1);
  Outcome starved = ord({"probe", "psi(twin-primes(5000))", "w*3", "--format", "json"});
  ::unsetenv("BRWDEC_FUEL");
  EXPECT_EQ(starved.code, kExitUnknown);
  nlohmann::json j = nlohmann::json::parse(starved.out);
  for (const auto& l : j["levels"]) EXPECT_LE(l["fuel_spent"].get<std::uint64_t>(), 3u);

  ::setenv("BRWDEC_FUEL", "3", 1);
  Outcome flag = ord({"probe", "psi(twin-primes(5000))", "w*3", "--fuel", "200000"});
  ::unsetenv("BRWDEC_FUEL");
  EXPECT_EQ(flag.code, kExitProven);
}

TEST(Run, SierpAndJump) {
  EXPECT_EQ(ord({"sierp", "2", "w*5"}).code, kExitProven);
  EXPECT_EQ(ord({"sierp", "2", "w + 3", "--fuel", "2000"}).code, kExitUnknown);
  Outcome j = ord({"jump", "first-one(1)", "--count", "4"});
  EXPECT_EQ(j.code, kExitProven);
  EXPECT_EQ(j.out, "0, 1, w, w + 1, ...\n");
}

}  // namespace
}  // namespace brwdec::cli
