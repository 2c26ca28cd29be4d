#include "brwdec/cli/run.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "brwdec/brwdec.hpp"
#include "brwdec/cli/subject.hpp"

namespace brwdec::cli {

namespace {

using nlohmann::json;

int exit_code(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Proven:
      return kExitProven;
    case Verdict::Kind::Refuted:
      return kExitRefuted;
    case Verdict::Kind::Unknown:
      return kExitUnknown;
  }
  return kExitUnknown;
}

struct Report {
  std::string command;
  std::string subject;
  std::optional<std::string> target;
  std::vector<LevelVerdict> levels;
  std::string summary;
  int exit = 0;
  std::vector<std::string> text;  // lines for --format text

  json to_json() const {
    json j;
    j["command"] = command;
    j["subject"] = subject;
    j["target"] = target ? json(*target) : json(nullptr);
    j["levels"] = json::array();
    for (const LevelVerdict& l : levels) {
      j["levels"].push_back({{"level", l.level.to_string()},
                             {"verdict", std::string(to_string(l.verdict.kind))},
                             {"fuel_spent", l.verdict.spent}});
    }
    j["summary"] = summary;
    j["exit"] = exit;
    return j;
  }
};

std::string describe(const Ordinal& o) {
  const Annotation& a = o.annotation();
  if (a.exact) return a.exact->to_string();
  if (a.upper) return "<no exact value, at most " + a.upper->to_string() + ">";
  return "<no exact value>";
}

std::vector<std::string> ladder_lines(const ProbeReport& r) {
  std::vector<std::string> lines;
  std::size_t width = 0;
  for (const LevelVerdict& l : r.per_level) width = std::max(width, l.level.to_string().size());
  for (const LevelVerdict& l : r.per_level) {
    std::ostringstream line;
    line << "  >= " << std::left << std::setw(static_cast<int>(width)) << l.level.to_string()
         << "  " << std::setw(7) << to_string(l.verdict.kind) << "  fuel " << l.verdict.spent;
    lines.push_back(line.str());
  }
  lines.push_back("summary: " + std::string(to_string(r.summary.kind)));
  return lines;
}

Report probe_report(std::string command, std::string subject, const Ordinal& o,
                    const Cnf& target, std::uint64_t fuel, std::uint64_t k_max) {
  ProbeReport r = probe_ge(o, target, Fuel(fuel), k_max);
  Report rep;
  rep.command = std::move(command);
  rep.subject = std::move(subject);
  rep.target = target.to_string();
  rep.levels = r.per_level;
  rep.summary = std::string(to_string(r.summary.kind));
  rep.exit = exit_code(r.summary.kind);
  rep.text = ladder_lines(r);
  return rep;
}

Report do_eval(const std::string& expr) {
  Ordinal o = parse_subject(expr);
  Report rep;
  rep.command = "eval";
  rep.subject = expr;
  rep.summary = "Proven";
  rep.exit = kExitProven;
  rep.text.push_back(describe(o));
  return rep;
}

Report do_cmp(const std::string& a_text, const std::string& b_text, std::uint64_t fuel) {
  Ordinal a = parse_subject(a_text);
  Ordinal b = parse_subject(b_text);
  Comparison forward = compare_leq(a, b, Fuel(fuel));
  std::string relation = "?";
  if (forward.verdict.is_refuted()) {
    relation = "GT";
  } else if (forward.verdict.is_proven()) {
    Verdict back = leq(b, a, Fuel(fuel));
    relation = back.is_proven() ? "EQ" : back.is_refuted() ? "LT" : "LE";
  }
  Report rep;
  rep.command = "cmp";
  rep.subject = a_text;
  rep.target = b_text;
  rep.summary = std::string(to_string(forward.verdict.kind));
  rep.exit = exit_code(forward.verdict.kind);
  std::ostringstream line;
  line << rep.summary;
  if (forward.verdict.decided()) {
    line << " (" << relation << " via " << to_string(forward.rule) << ")";
  } else {
    line << " (fuel " << forward.verdict.spent << " exhausted)";
  }
  rep.text.push_back(line.str());
  return rep;
}

Report do_jump(const std::string& bits, std::uint64_t count) {
  BitSeq s = parse_bitseq(bits);
  OrdinalSeq t = jump(s);
  std::string line;
  for (std::uint64_t n = 0; n < count; ++n) {
    line += describe(t.at(n));
    line += ", ";
  }
  line += "...";
  Report rep;
  rep.command = "jump";
  rep.subject = bits;
  rep.summary = "Proven";
  rep.exit = kExitProven;
  rep.text.push_back(line);
  return rep;
}

std::string joined_names() {
  std::string out;
  for (const std::string& n : family_names()) out += (out.empty() ? "" : ", ") + n;
  return out;
}

Report do_psi(const std::string& text, const std::string& mode, std::uint64_t fuel,
              std::uint64_t k_max) {
  DecWitness w;
  if (mode == "exists-forall") {
    auto family = lookup_family_2d(text);
    if (!family) {
      throw ParseError(0, "unknown 2D family '" + text + "'; available: " + joined_names());
    }
    w = exists_forall_witness(*family);
  } else {
    auto family = lookup_family(text);
    if (!family) {
      throw ParseError(0, "unknown family '" + text + "'; available: " + joined_names());
    }
    w = mode == "forall" ? forall_witness(*family) : exists_witness(*family);
  }
  Report rep = probe_report("psi", text, w.ordinal, w.level, fuel, k_max);
  rep.text.insert(rep.text.begin(), mode + " witness at level " + w.level.to_string() + ":");
  return rep;
}

Report do_sierp(std::uint64_t n, const std::string& expr, std::uint64_t fuel) {
  Ordinal a = parse_subject(expr);
  Verdict v = eval_top(s_n_of(n, a), Fuel(fuel));
  Report rep;
  rep.command = "sierp";
  rep.subject = expr;
  rep.target = Cnf::omega_times(n).to_string();
  rep.levels.push_back(LevelVerdict{Cnf::omega_times(n), v});
  rep.summary = std::string(to_string(v.kind));
  rep.exit = exit_code(v.kind);
  rep.text.push_back("s_" + std::to_string(n) + " = top: " + rep.summary + " (fuel " +
                     std::to_string(v.spent) + ")");
  return rep;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const SelfTest& selftest) {
  CLI::App app{"Bounded decisions about Brouwer-tree ordinals", "ord"};
  app.require_subcommand(1);

  std::uint64_t fuel = kDefaultFuel;
  std::uint64_t k_max = kDefaultKMax;
  std::string format = "text";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--fuel", fuel, "Expansion budget per query")
        ->envname("BRWDEC_FUEL")
        ->check(CLI::PositiveNumber);
    sub->add_option("--k-max", k_max, "Number of probe levels below the target")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string expr_a, expr_b, bits, family, mode = "forall";
  std::uint64_t count = 8;
  std::uint64_t level_n = 0;

  auto* eval = app.add_subcommand("eval", "Print the normal form of an expression");
  eval->add_option("expr", expr_a)->required();
  add_common(eval);

  auto* cmp = app.add_subcommand("cmp", "Decide A <= B and report the relation");
  cmp->add_option("a", expr_a)->required();
  cmp->add_option("b", expr_b)->required();
  add_common(cmp);

  auto* probe = app.add_subcommand("probe", "Probe SUBJECT >= TARGET at a ladder of levels");
  probe->add_option("subject", expr_a)->required();
  probe->add_option("target", expr_b, "Pure CNF")->required();
  add_common(probe);

  auto* jmp = app.add_subcommand("jump", "Print a prefix of the jump sequence of BITS");
  jmp->add_option("bits", bits)->required();
  jmp->add_option("--count", count, "Number of elements")->check(CLI::PositiveNumber);
  add_common(jmp);

  auto* psi_cmd = app.add_subcommand("psi", "Probe the characteristic witness of a family");
  psi_cmd->add_option("family", family)->required();
  psi_cmd->add_option("--mode", mode)->check(CLI::IsMember({"forall", "exists", "exists-forall"}));
  add_common(psi_cmd);

  auto* sierp = app.add_subcommand("sierp", "Evaluate s_n(EXPR), true iff EXPR >= w*n");
  sierp->add_option("n", level_n)->required();
  sierp->add_option("expr", expr_a)->required();
  add_common(sierp);

  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ord: " << e.what() << "\n";
    return kExitUsage;
  }

  if (self->parsed()) {
    if (!selftest) {
      err << "ord: selftest is not available in this build\n";
      return kExitUsage;
    }
    return selftest(out);
  }

  Report rep;
  try {
    if (eval->parsed()) {
      rep = do_eval(expr_a);
    } else if (cmp->parsed()) {
      rep = do_cmp(expr_a, expr_b, fuel);
    } else if (probe->parsed()) {
      Cnf target;
      try {
        target = parse_cnf(expr_b);
      } catch (const CnfParseError& e) {
        throw ParseError(e.position(), std::string("target: ") + e.what());
      }
      rep = probe_report("probe", expr_a, parse_subject(expr_a), target, fuel, k_max);
    } else if (jmp->parsed()) {
      rep = do_jump(bits, count);
    } else if (psi_cmd->parsed()) {
      rep = do_psi(family, mode, fuel, k_max);
    } else if (sierp->parsed()) {
      rep = do_sierp(level_n, expr_a, fuel);
    }
  } catch (const ParseError& e) {
    err << "ord: parse error " << e.what() << "\n";
    return kExitUsage;
  } catch (const CnfParseError& e) {
    err << "ord: parse error " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "ord: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "ord: " << e.what() << "\n";
    return kExitUsage;
  }

  if (format == "json") {
    out << rep.to_json().dump(2) << "\n";
  } else {
    for (const std::string& line : rep.text) out << line << "\n";
  }
  return rep.exit;
}

}  // namespace brwdec::cli
