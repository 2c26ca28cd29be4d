#include "brwdec/cli/subject.hpp"

#include <cctype>
#include <limits>
#include <optional>

#include "brwdec/arith.hpp"
#include "brwdec/characteristic.hpp"
#include "brwdec/minmax.hpp"
#include "brwdec/semidec.hpp"

namespace brwdec::cli {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("at " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

std::string joined_family_names() {
  std::string out;
  for (const std::string& name : family_names()) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

class SubjectParser {
 public:
  explicit SubjectParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal value = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Ordinal sum() {
    Ordinal value = product();
    while (accept('+')) value = add(value, product());
    return value;
  }

  Ordinal product() {
    Ordinal value = power();
    while (accept('*')) value = mul(value, power());
    return value;
  }

  Ordinal power() {
    Ordinal base = primary();
    if (accept('^')) return exp(base, power());
    return base;
  }

  // Raw text up to the ')' closing an already consumed '('.
  std::string raw_argument() {
    std::size_t start = pos_;
    int depth = 1;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')' && --depth == 0) break;
      ++pos_;
    }
    if (pos_ >= text_.size()) fail("expected ')'");
    std::string arg(text_.substr(start, pos_ - start));
    ++pos_;
    return arg;
  }

  Ordinal call(const std::string& name, std::size_t name_pos) {
    expect('(');
    if (name == "psi") {
      std::size_t arg_pos = pos_;
      std::string text = raw_argument();
      auto family = lookup_family(text);
      if (!family) {
        throw ParseError(arg_pos, "unknown family '" + text + "'; available: " +
                                      joined_family_names());
      }
      return psi(*family);
    }
    if (name == "lim-jump") {
      std::size_t arg_pos = pos_;
      std::string text = raw_argument();
      try {
        return Ordinal::lim(jump(parse_bitseq(text)), Annotation{std::nullopt, Cnf::omega_times(2)});
      } catch (const ParseError& e) {
        throw ParseError(arg_pos + e.position(), e.what());
      }
    }
    if (name == "lim-min" || name == "lim-max") {
      Ordinal a = sum();
      expect(',');
      Ordinal b = sum();
      expect(')');
      return name == "lim-min" ? lim_min(a, b) : lim_max(a, b);
    }
    if (name == "round-up" || name == "round-down") {
      Ordinal a = sum();
      expect(')');
      return name == "round-up" ? round_up(a) : round_down(a);
    }
    pos_ = name_pos;
    fail("unknown function '" + name +
         "'; available: psi, lim-min, lim-max, round-up, round-down, lim-jump");
  }

  Ordinal primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Ordinal inner = sum();
      expect(')');
      return inner;
    }
    if (c == '-') fail("non-natural coefficient: negative numbers are not ordinals");
    if (std::isdigit(static_cast<unsigned char>(c))) return from_nat(number());
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::islower(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (name == "w") return omega();
      return call(name, start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::uint64_t number() {
    std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        pos_ = start;
        fail("natural number too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e')) {
      pos_ = start;
      fail("non-natural coefficient");
    }
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::optional<std::uint64_t> call_argument(const std::string& text, const std::string& name) {
  if (text.size() < name.size() + 3 || text.compare(0, name.size(), name) != 0) {
    return std::nullopt;
  }
  if (text[name.size()] != '(' || text.back() != ')') return std::nullopt;
  std::string digits = trim(text.substr(name.size() + 1, text.size() - name.size() - 2));
  if (digits.empty() || digits.size() > 19) return std::nullopt;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  return std::stoull(digits);
}

bool twin_at(std::uint64_t i) { return is_prime(i) && is_prime(i + 2); }

}  // namespace

Ordinal parse_subject(std::string_view text) { return SubjectParser(text).parse(); }

BitSeq parse_bitseq(std::string_view text) {
  const std::string s = trim(text);
  if (s == "zeros") return BitSeq::zeros();
  if (s == "ones") return BitSeq::ones();
  if (auto k = call_argument(s, "first-one")) return BitSeq::first_one_at(*k);
  if (auto n = call_argument(s, "twin-prime-above")) {
    std::uint64_t above = *n;
    return BitSeq([above](std::uint64_t i) { return i > above && twin_at(i); },
                  "twin-prime-above(" + std::to_string(above) + ")");
  }
  auto colon = s.find(':');
  if (colon == std::string::npos) {
    throw ParseError(0, "bit sequence must be PREFIX:zeros, PREFIX:ones, or one of zeros, "
                        "ones, first-one(K), twin-prime-above(N)");
  }
  std::string prefix = s.substr(0, colon);
  std::string tail = s.substr(colon + 1);
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] != '0' && prefix[i] != '1') throw ParseError(i, "expected 0 or 1");
  }
  if (tail != "zeros" && tail != "ones") {
    throw ParseError(colon + 1, "expected 'zeros' or 'ones' after ':'");
  }
  return BitSeq::eventually(prefix, tail == "ones");
}

}  // namespace brwdec::cli
