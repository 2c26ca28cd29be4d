#include "brwdec/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <random>
#include <sstream>

#include "brwdec/brwdec.hpp"
#include "brwdec/cli/run.hpp"

namespace brwdec::acceptance {

namespace {

using Rng = std::mt19937_64;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

// Sum of w^e * c over a random subset of exponents e <= max_exp, c <= max_coeff.
Cnf random_cnf(Rng& rng, std::uint64_t max_exp, std::uint64_t max_coeff = 5) {
  std::vector<CnfTerm> terms;
  for (std::uint64_t e = max_exp + 1; e-- > 0;) {
    if (coin(rng)) terms.push_back(CnfTerm{Cnf::nat(e), uniform(rng, 1, max_coeff)});
  }
  return Cnf::from_terms(std::move(terms));
}

Cnf random_limit(Rng& rng, std::uint64_t max_exp) { return random_cnf(rng, max_exp).limit_part(); }

Ordinal bare(const Cnf& c) { return strip_annotations(embed(c)); }

// Decided verdicts must match the truth.
bool consistent(const Verdict& v, bool truth) {
  return !(v.is_proven() && !truth) && !(v.is_refuted() && truth);
}

class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (examples_.size() < 3) examples_.push_back(what());
  }

  bool passed() const { return failures_ == 0; }

  std::string detail(const std::string& extra = "") const {
    std::ostringstream out;
    out << checks_ << " checks, " << failures_ << " failures";
    if (!extra.empty()) out << "; " << extra;
    for (const std::string& e : examples_) out << "; e.g. " << e;
    return out.str();
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::vector<std::string> examples_;
};

CriterionResult named(int id, std::string name) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

std::string show(const Verdict& v) { return std::string(to_string(v.kind)); }

CriterionResult finish(CriterionResult r, const Tally& t, const std::string& extra = "") {
  r.passed = t.passed();
  r.detail = t.detail(extra);
  return r;
}

// 1. leq on annotation-free embeddings agrees with the CNF order.
CriterionResult oracle_soundness(const Options& o) {
  CriterionResult r = named(1, "oracle soundness of leq on stripped embeddings");
  Rng rng(o.seed + 1);
  Tally t;
  std::uint64_t decided = 0;
  const std::uint64_t pairs = 1000;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    Cnf a = random_cnf(rng, 3);
    Cnf b = random_cnf(rng, 3);
    Verdict v = leq(bare(a), bare(b), Fuel(10000));
    bool truth = a <= b;
    t.check(consistent(v, truth), [&] {
      return a.to_string() + " <= " + b.to_string() + " gave " + show(v);
    });
    if (v.decided()) ++decided;
    bool must_decide = a.is_finite() || b.is_finite() || a.is_successor() || b.is_successor();
    if (must_decide) {
      t.check(v.decided(), [&] {
        return a.to_string() + " <= " + b.to_string() + " undecided";
      });
    }
  }
  return finish(r, t, std::to_string(decided) + "/" + std::to_string(pairs) + " decided");
}

// 2. +, *, w^b commute with the embedding.
CriterionResult arithmetic_homomorphism(const Options& o) {
  CriterionResult r = named(2, "arithmetic homomorphism against the CNF oracle");
  Rng rng(o.seed + 2);
  Tally t;
  auto cross_check = [&](const std::string& label, const Ordinal& value, const Cnf& expected) {
    // Structural probes of the annotation-free result never contradict.
    Ordinal stripped = strip_annotations(value);
    std::vector<Cnf> gammas{expected, random_cnf(rng, 3)};
    if (expected.is_successor()) gammas.push_back(expected.predecessor());
    for (const Cnf& g : gammas) {
      Verdict up = leq(embed(g), stripped, Fuel(2000));
      t.check(consistent(up, g <= expected),
              [&] { return label + ": probe " + g.to_string() + " <= result gave " + show(up); });
      Verdict down = leq(stripped, embed(g), Fuel(2000));
      t.check(consistent(down, expected <= g),
              [&] { return label + ": result <= " + g.to_string() + " gave " + show(down); });
    }
  };
  for (int i = 0; i < 300; ++i) {
    Cnf a = random_cnf(rng, 2);
    Cnf b = random_cnf(rng, 2);
    Ordinal ea = embed(a);
    Ordinal eb = embed(b);

    Cnf sum = cnf_add(a, b);
    Ordinal s = add(ea, eb);
    Verdict vs = bisim(s, embed(sum), Fuel(10000));
    t.check(vs.is_proven(), [&] { return a.to_string() + " + " + b.to_string() + ": " + show(vs); });
    cross_check(a.to_string() + " + " + b.to_string(), s, sum);

    Cnf prod = cnf_mul(a, b);
    Ordinal p = mul(ea, eb);
    Verdict vp = bisim(p, embed(prod), Fuel(10000));
    t.check(vp.is_proven(), [&] { return a.to_string() + " * " + b.to_string() + ": " + show(vp); });
    cross_check(a.to_string() + " * " + b.to_string(), p, prod);

    Cnf e = random_cnf(rng, 1);
    Cnf power = cnf_pow(Cnf::omega(), e);
    Ordinal x = exp(omega(), embed(e));
    Verdict vx = bisim(x, embed(power), Fuel(10000));
    t.check(vx.is_proven(), [&] { return "w^(" + e.to_string() + "): " + show(vx); });
    cross_check("w^(" + e.to_string() + ")", x, power);
  }
  return finish(r, t);
}

// 3. lim_min is below both arguments, idempotent up to round-down, and a
//    minimum for every sampled lower bound.
CriterionResult lim_min_laws(const Options& o) {
  CriterionResult r = named(3, "limMin laws");
  Rng rng(o.seed + 3);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    Cnf a = random_limit(rng, 3);
    Cnf b = random_limit(rng, 3);
    Ordinal ea = embed(a);
    Ordinal eb = embed(b);
    Ordinal m = lim_min(ea, eb);
    const std::string pair = "(" + a.to_string() + ", " + b.to_string() + ")";
    Verdict va = leq(m, ea, Fuel(10000));
    Verdict vb = leq(m, eb, Fuel(10000));
    t.check(va.is_proven(), [&] { return "limMin" + pair + " <= a: " + show(va); });
    t.check(vb.is_proven(), [&] { return "limMin" + pair + " <= b: " + show(vb); });
    Verdict idem = bisim(lim_min(ea, ea), round_down(ea), Fuel(10000));
    t.check(idem.is_proven(), [&] { return "limMin(a, a) = round_down(a) for " + a.to_string(); });

    Ordinal m_bare = lim_min(bare(a), bare(b));
    Cnf lo = cnf_min(a, b);
    std::vector<Cnf> gammas{lo, cnf_add(lo, Cnf::nat(1)), random_cnf(rng, 3), random_cnf(rng, 2)};
    for (const Cnf& g : gammas) {
      bool truth = g <= a && g <= b;
      Verdict v = leq(embed(g), m, Fuel(10000));
      t.check(v.decided() && v.is_proven() == truth, [&] {
        return "universal property at " + g.to_string() + " for " + pair + ": " + show(v);
      });
      Verdict vb2 = leq(embed(g), m_bare, Fuel(2000));
      t.check(consistent(vb2, truth), [&] {
        return "stripped limMin" + pair + " >= " + g.to_string() + ": " + show(vb2);
      });
    }
  }
  return finish(r, t);
}

// 4. (a >= w*k or b >= w*k) iff lim_max(a, b) >= w*k.
CriterionResult lim_max_property(const Options& o) {
  CriterionResult r = named(4, "limMax property at w*k");
  Rng rng(o.seed + 4);
  Tally t;
  std::uint64_t stripped_proven = 0;
  std::uint64_t stripped_true = 0;
  for (int i = 0; i < 200; ++i) {
    Cnf a = random_limit(rng, 2);
    Cnf b = random_limit(rng, 2);
    Ordinal m = lim_max(embed(a), embed(b));
    Ordinal m_bare = lim_max(bare(a), bare(b));
    const std::string pair = "(" + a.to_string() + ", " + b.to_string() + ")";
    for (std::uint64_t k = 1; k <= 5; ++k) {
      Cnf level = Cnf::omega_times(k);
      Verdict pa = probe_ge(embed(a), level, Fuel(10000), 6).summary;
      Verdict pb = probe_ge(embed(b), level, Fuel(10000), 6).summary;
      Verdict::Kind disj = pa.is_proven() || pb.is_proven()     ? Verdict::Kind::Proven
                           : pa.is_refuted() && pb.is_refuted() ? Verdict::Kind::Refuted
                                                                 : Verdict::Kind::Unknown;
      Verdict pm = probe_ge(m, level, Fuel(10000), 6).summary;
      t.check(pm.kind == disj, [&] {
        return "limMax" + pair + " >= " + level.to_string() + ": " + show(pm) + " vs " +
               std::string(to_string(disj));
      });
      bool truth = level <= a || level <= b;
      Verdict ps = probe_ge(m_bare, level, Fuel(10000), 6).summary;
      t.check(consistent(ps, truth), [&] {
        return "stripped limMax" + pair + " >= " + level.to_string() + ": " + show(ps);
      });
      if (truth) {
        ++stripped_true;
        if (ps.is_proven()) ++stripped_proven;
        t.check(ps.is_proven(), [&] {
          return "stripped limMax" + pair + " >= " + level.to_string() + " not proven";
        });
      }
    }
  }
  return finish(r, t,
                "stripped proven " + std::to_string(stripped_proven) + "/" +
                    std::to_string(stripped_true));
}

BitSeq random_eventually_constant(Rng& rng) {
  std::string prefix;
  std::uint64_t len = uniform(rng, 0, 12);
  // Bias towards zeros so both outcomes are common.
  for (std::uint64_t i = 0; i < len; ++i) prefix += uniform(rng, 0, 5) == 0 ? '1' : '0';
  return BitSeq::eventually(prefix, uniform(rng, 0, 3) == 0);
}

// 5. A semidecidable proposition is (w+1)-decidable, and back.
CriterionResult semidec_realization(const Options& o) {
  CriterionResult r = named(5, "semidecidable iff (w+1)-decidable");
  Rng rng(o.seed + 5);
  Tally t;
  const Cnf level = cnf_add(Cnf::omega(), Cnf::nat(1));
  for (int i = 0; i < 100; ++i) {
    BitSeq s = random_eventually_constant(rng);
    bool has_one = s.first_one(64).has_value();
    DecWitness w = semidec_to_witness(s);
    Verdict v = probe_ge(w.ordinal, level, Fuel(10000), 6).summary;
    t.check(has_one ? v.is_proven() : !v.is_proven(),
            [&] { return s.label() + ": probe at w+1 gave " + show(v); });
    BitSeq back = witness_to_semidec(w);
    t.check(back.first_one(64).has_value() == has_one,
            [&] { return s.label() + ": round trip changed first-1 existence"; });
  }
  return finish(r, t);
}

PropFamily ones_without_metadata() {
  return PropFamily([](std::uint64_t) { return BitSeq::ones(); }, "ones");
}

// 6. psi_n of an all-true family is w*(n+1).
CriterionResult psi_n_exact(const Options&) {
  CriterionResult r = named(6, "psi_n of the all-true family is w*(n+1)");
  Tally t;
  for (const PropFamily& p : {family_const(true), ones_without_metadata()}) {
    for (std::uint64_t n = 0; n <= 8; ++n) {
      Ordinal x = psi_n(p, n);
      Ordinal target = embed(Cnf::omega_times(n + 1));
      Verdict up = leq(x, target, Fuel(10000));
      Verdict down = leq(target, x, Fuel(10000));
      t.check(up.is_proven() && down.is_proven(), [&] {
        return p.description() + " n=" + std::to_string(n) + ": " + show(up) + "/" + show(down);
      });
    }
  }
  return finish(r, t);
}

// 7. Some psi_n reaches w*2 iff some member is true.
CriterionResult psi_n_reaches_two(const Options&) {
  CriterionResult r = named(7, "exists n. psi_n >= w*2 for a true member");
  Tally t;
  for (std::uint64_t j = 0; j <= 16; ++j) {
    PropFamily p = family_single_true(j);
    bool found = false;
    for (std::uint64_t n = 0; n <= j + 2 && !found; ++n) {
      found = probe_ge(psi_n(p, n), Cnf::omega_times(2), Fuel(100000), 6).summary.is_proven();
    }
    t.check(found, [&] { return "single-true(" + std::to_string(j) + ") never reached w*2"; });
  }
  PropFamily none = family_const(false);
  for (std::uint64_t n = 0; n <= 8; ++n) {
    for (std::uint64_t k = 2; k <= 4; ++k) {
      Verdict v = leq(embed(Cnf::omega_times(k)), psi_n(none, n), Fuel(100000));
      t.check(!v.is_proven(), [&] {
        return "const-false psi_" + std::to_string(n) + " >= w*" + std::to_string(k) + " proven";
      });
    }
  }
  return finish(r, t);
}

struct NamedFamily {
  PropFamily family;
  bool truth;
};

std::vector<NamedFamily> constructed_families(Rng& rng) {
  std::vector<NamedFamily> out;
  out.push_back({family_const(true), true});
  out.push_back({family_const(false), false});
  out.push_back({family_twin_primes(100), true});
  out.push_back({family_twin_primes(2), false});
  while (out.size() < 50) {
    std::uint64_t j = uniform(rng, 0, 12);
    std::uint64_t hit = uniform(rng, 0, 12);
    bool truth = coin(rng);
    std::string label = truth ? "member " + std::to_string(j) + " hits at " + std::to_string(hit)
                              : "decoys " + std::to_string(j) + "/" + std::to_string(hit);
    out.push_back({PropFamily(
                       [j, hit, truth](std::uint64_t n) {
                         if (truth && n == j) return BitSeq::first_one_at(hit);
                         // A false member: a long zero prefix, then zeros.
                         return BitSeq::eventually(std::string(hit, '0'), false);
                       },
                       label),
                   truth});
  }
  return out;
}

// 8. The exists-witness reaches w*3 iff some member is true.
CriterionResult exists_realization(const Options& o) {
  CriterionResult r = named(8, "exists-witness at w*3 iff some member true");
  Rng rng(o.seed + 8);
  Tally t;
  for (const NamedFamily& f : constructed_families(rng)) {
    DecWitness w = exists_witness(f.family);
    Verdict v = probe_ge(w.ordinal, w.level, Fuel(100000), 2).summary;
    t.check(v.is_proven() == f.truth,
            [&] { return f.family.description() + ": " + show(v); });
  }
  return finish(r, t);
}

// 9. The forall-witness of the twin-prime family passes w*1..w*8.
CriterionResult twin_prime_demo(const Options&) {
  CriterionResult r = named(9, "twin-prime forall ladder w*1..w*8");
  Tally t;
  auto start = std::chrono::steady_clock::now();
  DecWitness w = forall_witness(family_twin_primes(5000));
  ProbeReport rep = probe_ge(w.ordinal, Cnf::omega_times(8), Fuel(200000), 8);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.check(rep.per_level.size() == 8, [&] { return "expected 8 levels"; });
  for (const LevelVerdict& l : rep.per_level) {
    t.check(l.verdict.is_proven(), [&] { return l.level.to_string() + ": " + show(l.verdict); });
  }
  t.check(secs < 10.0, [&] { return "took " + std::to_string(secs) + " s"; });
  return finish(r, t);
}

// 10. Exists-forall witnesses of threshold(5) and the diagonal family.
CriterionResult exists_forall_instance(const Options&) {
  CriterionResult r = named(10, "exists-forall witnesses: threshold(5) and diagonal");
  Tally t;
  const Cnf target = cnf_add(Cnf::omega_pow(Cnf::nat(2)), Cnf::omega());
  PropFamily2D threshold = family_threshold(5);
  DecWitness w = exists_forall_witness(threshold);
  ProbeReport rep = probe_ge(w.ordinal, target, Fuel(100000), 6);
  t.check(rep.summary.is_proven(), [&] { return "threshold(5) at w^2+w: " + show(rep.summary); });
  ProbeReport column = probe_ge(psi(threshold.column(5)), Cnf::omega_pow(Cnf::nat(2)),
                                Fuel(100000), 6);
  for (const LevelVerdict& l : column.per_level) {
    t.check(l.verdict.is_proven(),
            [&] { return "threshold(5) column 5 at " + l.level.to_string() + ": " + show(l.verdict); });
  }
  DecWitness d = exists_forall_witness(family_diagonal());
  ProbeReport drep = probe_ge(d.ordinal, target, Fuel(100000), 6);
  t.check(!drep.summary.is_proven(), [&] { return "diagonal at w^2+w proven"; });
  return finish(r, t);
}

// 11. s_n(a) is top iff a >= w*n.
CriterionResult sierpinski_agreement(const Options&) {
  CriterionResult r = named(11, "Sierpinski s_n agrees with a >= w*n");
  Tally t;
  std::vector<Cnf> values{Cnf{}};
  for (std::uint64_t k = 1; k <= 6; ++k) values.push_back(Cnf::omega_times(k));
  values.push_back(Cnf::omega_pow(Cnf::nat(2)));
  for (std::uint64_t n = 0; n <= 6; ++n) {
    for (const Cnf& a : values) {
      bool truth = !(a < Cnf::omega_times(n));
      Sierpinski s = s_n_of(n, embed(a));
      const std::string label = "s_" + std::to_string(n) + "(" + a.to_string() + ")";
      Verdict v = eval_top(s, Fuel(10000));
      t.check(truth ? v.is_proven() : !v.is_proven(), [&] { return label + ": " + show(v); });
      for (std::uint64_t f : {1, 3, 10, 100, 1000}) {
        Verdict vf = eval_top(s, Fuel(f));
        t.check(consistent(vf, truth),
                [&] { return label + " at fuel " + std::to_string(f) + ": " + show(vf); });
      }
    }
  }
  return finish(r, t);
}

// 12. Decided verdicts survive any increase of fuel.
CriterionResult fuel_monotonicity(const Options& o) {
  CriterionResult r = named(12, "fuel monotonicity");
  Rng rng(o.seed + 12);
  Tally t;
  auto random_subject = [&]() -> Ordinal {
    Cnf c = random_cnf(rng, 3);
    switch (uniform(rng, 0, 5)) {
      case 0:
        return embed(c);
      case 1:
        return bare(c);
      case 2:
        return add(bare(random_cnf(rng, 2)), bare(random_cnf(rng, 2)));
      case 3:
        return lim_min(bare(random_limit(rng, 2)), bare(random_limit(rng, 2)));
      case 4:
        return lim_max(bare(random_limit(rng, 2)), bare(random_limit(rng, 2)));
      default:
        return psi(family_single_true(uniform(rng, 0, 4)));
    }
  };
  using Op = std::function<Verdict(std::uint64_t)>;
  for (int i = 0; i < 500; ++i) {
    Ordinal a = random_subject();
    Ordinal b = random_subject();
    Cnf level = random_cnf(rng, 2);
    std::uint64_t fuel = uniform(rng, 1, 3000);
    std::uint64_t sierp_n = uniform(rng, 0, 3);
    std::vector<std::pair<std::string, Op>> ops{
        {"leq", [&](std::uint64_t f) { return leq(a, b, Fuel(f)); }},
        {"lt", [&](std::uint64_t f) { return lt(a, b, Fuel(f)); }},
        {"bisim", [&](std::uint64_t f) { return bisim(a, b, Fuel(f)); }},
        {"probe_ge", [&](std::uint64_t f) { return probe_ge(a, level, Fuel(f), 3).summary; }},
        {"eval_top",
         [&](std::uint64_t f) { return eval_top(s_n_of(sierp_n, a), Fuel(f)); }},
    };
    const auto& [name, op] = ops[static_cast<std::size_t>(i) % ops.size()];
    Verdict low = op(fuel);
    for (std::uint64_t more : {fuel + 1, fuel * 2, fuel * 10}) {
      Verdict high = op(more);
      t.check(!low.decided() || high.kind == low.kind, [&] {
        return name + " at fuel " + std::to_string(fuel) + " gave " + show(low) + ", at " +
               std::to_string(more) + " gave " + show(high);
      });
    }
  }
  return finish(r, t);
}

std::vector<std::string> cli_corpus() {
  return {"0", "1", "7", "w", "w + 1", "w + 7", "w*2", "w*2 + 3", "w*5 + 5", "w^2",
          "w^2 + 1", "w^2 + w", "w^2*3 + w*4 + 5", "w^3", "w^3*2 + w^2 + w*2 + 2",
          "w^4 + w^3", "w^10", "w^w", "w^w + w^5", "w^(w + 1)", "w^(w*2)", "w^(w^2)",
          "w^(w^2 + w)*3 + w^w*2 + 1", "1 + w", "2 + w*2", "w + w", "w*w", "(w + 1)*2",
          "(w + 1)*(w + 1)", "2*w", "w*2*3", "(w + 3)*w", "2^w", "3^(w + 1)", "w^2^2", "w^w^w",
          "(w^2 + w)^2", "w^(1 + w)", "0 + 0", "w*0", "0*w", "w^0", "1^w", "0^w", "5*5",
          "3 + 4*5", "(w + 2)^3", "w^(w + 2) + w^(w + 1)", "w^3 + w^4", "10 + w^2*2 + 1"};
}

bool valid_report(const nlohmann::json& j, std::string& why) {
  auto need = [&](const char* key, bool ok) {
    if (!ok) why = std::string("bad or missing '") + key + "'";
    return ok;
  };
  if (!need("object", j.is_object())) return false;
  if (!need("command", j.contains("command") && j["command"].is_string())) return false;
  if (!need("subject", j.contains("subject") && j["subject"].is_string())) return false;
  if (!need("target", j.contains("target") && (j["target"].is_string() || j["target"].is_null()))) {
    return false;
  }
  if (!need("levels", j.contains("levels") && j["levels"].is_array())) return false;
  static const std::vector<std::string> kinds{"Proven", "Refuted", "Unknown"};
  auto is_kind = [&](const nlohmann::json& v) {
    return v.is_string() &&
           std::find(kinds.begin(), kinds.end(), v.get<std::string>()) != kinds.end();
  };
  for (const auto& l : j["levels"]) {
    if (!need("levels[].level", l.is_object() && l.contains("level") && l["level"].is_string())) {
      return false;
    }
    if (!need("levels[].verdict", l.contains("verdict") && is_kind(l["verdict"]))) return false;
    if (!need("levels[].fuel_spent",
              l.contains("fuel_spent") && l["fuel_spent"].is_number_unsigned())) {
      return false;
    }
  }
  if (!need("summary", j.contains("summary") && is_kind(j["summary"]))) return false;
  if (!need("exit", j.contains("exit") && j["exit"].is_number_integer())) return false;
  return need("keys", j.size() == 6);
}

struct CliRun {
  int exit;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ord");
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// 13. Printing and parsing agree; exit codes and JSON reports follow the contract.
CriterionResult cli_contract(const Options&) {
  CriterionResult r = named(13, "CLI round trip, exit codes, JSON reports");
  Tally t;
  for (const std::string& e : cli_corpus()) {
    Cnf c = parse_cnf(e);
    std::string printed = c.to_string();
    t.check(parse_cnf(printed) == c, [&] { return "'" + e + "' printed as '" + printed + "'"; });
    CliRun run = run_cli({"eval", e});
    t.check(run.exit == 0 && run.out == printed + "\n",
            [&] { return "ord eval '" + e + "' gave '" + run.out + "'"; });
  }

  struct Expect {
    std::vector<std::string> args;
    int exit;
  };
  std::vector<Expect> cases{
      {{"cmp", "w*2", "w^2", "--fuel", "1000"}, cli::kExitProven},
      {{"cmp", "w^2", "w*2"}, cli::kExitRefuted},
      {{"probe", "lim-jump(zeros)", "w+1", "--fuel", "500"}, cli::kExitUnknown},
      {{"probe", "lim-jump(001:zeros)", "w+1"}, cli::kExitProven},
      {{"probe", "psi(twin-primes(5000))", "w*4", "--fuel", "200000"}, cli::kExitProven},
      {{"probe", "w*3", "w*5"}, cli::kExitRefuted},
      {{"sierp", "2", "w*2"}, cli::kExitProven},
      {{"sierp", "2", "0"}, cli::kExitRefuted},
      {{"sierp", "3", "w*2", "--fuel", "1000"}, cli::kExitUnknown},
      {{"psi", "threshold(5)", "--mode", "exists-forall"}, cli::kExitProven},
      {{"jump", "001:zeros"}, cli::kExitProven},
      {{"eval", "w+-1"}, cli::kExitUsage},
      {{"cmp", "w"}, cli::kExitUsage},
      {{"probe", "psi(no-such-family)", "w"}, cli::kExitUsage},
      {{"probe", "w", "round-up(w)"}, cli::kExitUsage},
      {{"cmp", "w", "w", "--fuel", "0"}, cli::kExitUsage},
      {{"psi", "const-true", "--mode", "sideways"}, cli::kExitUsage},
      {{"frobnicate"}, cli::kExitUsage},
  };
  for (const Expect& c : cases) {
    CliRun run = run_cli(c.args);
    std::string cmd;
    for (const std::string& a : c.args) cmd += " " + a;
    t.check(run.exit == c.exit, [&] {
      return "ord" + cmd + " exited " + std::to_string(run.exit) + ", expected " +
             std::to_string(c.exit);
    });
    if (c.exit == cli::kExitUsage) continue;
    std::vector<std::string> json_args = c.args;
    json_args.push_back("--format");
    json_args.push_back("json");
    CliRun jrun = run_cli(json_args);
    nlohmann::json j = nlohmann::json::parse(jrun.out, nullptr, false);
    std::string why;
    t.check(!j.is_discarded() && valid_report(j, why),
            [&] { return "ord" + cmd + " --format json: " + why; });
    if (j.is_discarded() || !valid_report(j, why)) continue;
    const std::string summary = j["summary"];
    int expected = summary == "Proven" ? 0 : summary == "Refuted" ? 1 : 2;
    t.check(jrun.exit == expected && j["exit"] == expected,
            [&] { return "ord" + cmd + ": exit does not follow summary " + summary; });
  }
  CliRun cmp = run_cli({"cmp", "w*2", "w^2", "--fuel", "1000"});
  t.check(cmp.out == "Proven (LT via annotation)\n",
          [&] { return "ord cmp w*2 w^2 printed '" + cmp.out + "'"; });
  return finish(r, t);
}

using Runner = CriterionResult (*)(const Options&);

constexpr Runner kRunners[kCriterionCount] = {
    oracle_soundness,       arithmetic_homomorphism, lim_min_laws,
    lim_max_property,       semidec_realization,     psi_n_exact,
    psi_n_reaches_two,      exists_realization,      twin_prime_demo,
    exists_forall_instance, sierpinski_agreement,    fuel_monotonicity,
    cli_contract,
};

}  // namespace

CriterionResult run_criterion(int id, const Options& options) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no criterion " + std::to_string(id));
  auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = kRunners[id - 1](options);
  } catch (const std::exception& e) {
    r.id = id;
    r.name = "criterion " + std::to_string(id);
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all(const Options& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

bool report(const std::vector<CriterionResult>& results, std::ostream& out) {
  std::size_t passed = 0;
  for (const CriterionResult& r : results) {
    if (r.passed) ++passed;
    out << (r.passed ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id << "] " << r.name
        << " (" << std::fixed << std::setprecision(2) << r.seconds << " s): " << r.detail << "\n";
  }
  out << passed << "/" << results.size() << " criteria passed\n";
  return passed == results.size();
}

}  // namespace brwdec::acceptance
