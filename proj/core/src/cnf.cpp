#include "brwdec/cnf.hpp"

#include <cctype>
#include <limits>

namespace brwdec {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw std::overflow_error("CNF coefficient overflow");
  }
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw std::overflow_error("CNF coefficient overflow");
  }
  return a * b;
}

Cnf single_term(Cnf exponent, std::uint64_t coefficient) {
  if (coefficient == 0) return Cnf{};
  std::vector<CnfTerm> terms;
  terms.push_back(CnfTerm{std::move(exponent), coefficient});
  return Cnf::from_terms(std::move(terms));
}

// e' with 1 + e' = e, for e >= 1.
Cnf drop_one(const Cnf& e) {
  if (auto n = e.as_nat()) return Cnf::nat(*n - 1);
  return e;
}

}  // namespace

Cnf::Cnf() = default;

Cnf Cnf::nat(std::uint64_t n) { return single_term(Cnf{}, n); }

Cnf Cnf::omega() { return single_term(Cnf::nat(1), 1); }

Cnf Cnf::omega_pow(const Cnf& e) { return single_term(e, 1); }

Cnf Cnf::omega_times(std::uint64_t k) { return single_term(Cnf::nat(1), k); }

Cnf Cnf::from_terms(std::vector<CnfTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) {
      throw std::invalid_argument("non-normal CNF: zero coefficient");
    }
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw std::invalid_argument("non-normal CNF: exponents not strictly decreasing");
    }
  }
  Cnf out;
  out.terms_ = std::move(terms);
  return out;
}

bool Cnf::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Cnf::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

bool Cnf::is_limit() const {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

std::optional<std::uint64_t> Cnf::as_nat() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1 && terms_[0].exponent.is_zero()) return terms_[0].coefficient;
  return std::nullopt;
}

std::uint64_t Cnf::finite_part() const {
  return is_successor() ? terms_.back().coefficient : 0;
}

Cnf Cnf::limit_part() const {
  if (!is_successor()) return *this;
  Cnf out = *this;
  out.terms_.pop_back();
  return out;
}

Cnf Cnf::predecessor() const {
  if (!is_successor()) throw std::invalid_argument("predecessor of a non-successor");
  Cnf out = *this;
  if (--out.terms_.back().coefficient == 0) out.terms_.pop_back();
  return out;
}

std::string Cnf::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out += " + ";
    const CnfTerm& t = terms_[i];
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w";
    if (auto n = t.exponent.as_nat(); n && *n == 1) {
      // w
    } else if (n) {
      out += "^" + std::to_string(*n);
    } else if (t.exponent == Cnf::omega()) {
      out += "^w";
    } else {
      out += "^(" + t.exponent.to_string() + ")";
    }
    if (t.coefficient > 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

std::strong_ordering operator<=>(const Cnf& a, const Cnf& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = x[i].exponent <=> y[i].exponent; c != 0) return c;
    if (auto c = x[i].coefficient <=> y[i].coefficient; c != 0) return c;
  }
  return x.size() <=> y.size();
}

bool operator==(const Cnf& a, const Cnf& b) { return a.terms_ == b.terms_; }

Order cnf_compare(const Cnf& a, const Cnf& b) {
  auto c = a <=> b;
  if (c < 0) return Order::Less;
  if (c > 0) return Order::Greater;
  return Order::Equal;
}

Cnf cnf_add(const Cnf& a, const Cnf& b) {
  if (b.is_zero()) return a;
  const Cnf& lead = b.terms().front().exponent;
  std::vector<CnfTerm> out;
  for (const CnfTerm& t : a.terms()) {
    if (t.exponent > lead) out.push_back(t);
  }
  std::uint64_t carry = 0;
  for (const CnfTerm& t : a.terms()) {
    if (t.exponent == lead) carry = t.coefficient;
  }
  bool first = true;
  for (const CnfTerm& t : b.terms()) {
    CnfTerm copy = t;
    if (first) copy.coefficient = checked_add(copy.coefficient, carry);
    first = false;
    out.push_back(std::move(copy));
  }
  return Cnf::from_terms(std::move(out));
}

Cnf cnf_mul(const Cnf& a, const Cnf& b) {
  if (a.is_zero() || b.is_zero()) return Cnf{};
  const Cnf& lead = a.terms().front().exponent;
  Cnf out;
  for (const CnfTerm& t : b.terms()) {
    if (t.exponent.is_zero()) {
      std::vector<CnfTerm> terms = a.terms();
      terms.front().coefficient = checked_mul(terms.front().coefficient, t.coefficient);
      out = cnf_add(out, Cnf::from_terms(std::move(terms)));
    } else {
      out = cnf_add(out, single_term(cnf_add(lead, t.exponent), t.coefficient));
    }
  }
  return out;
}

namespace {

Cnf pow_nat(const Cnf& base, std::uint64_t n) {
  Cnf result = Cnf::nat(1);
  Cnf square = base;
  while (n > 0) {
    if (n & 1) result = cnf_mul(result, square);
    n >>= 1;
    if (n > 0) square = cnf_mul(square, square);
  }
  return result;
}

}  // namespace

Cnf cnf_pow(const Cnf& base, const Cnf& exponent) {
  if (exponent.is_zero()) return Cnf::nat(1);
  if (base.is_zero()) return Cnf{};
  if (base == Cnf::nat(1)) return base;
  if (auto n = exponent.as_nat()) return pow_nat(base, *n);

  // exponent = w * q + n
  std::vector<CnfTerm> quotient;
  const Cnf limit = exponent.limit_part();
  for (const CnfTerm& t : limit.terms()) {
    quotient.push_back(CnfTerm{drop_one(t.exponent), t.coefficient});
  }
  Cnf q = Cnf::from_terms(std::move(quotient));
  std::uint64_t n = exponent.finite_part();

  if (base.is_finite()) {
    // k^(w*q) = (k^w)^q = w^q
    return cnf_mul(Cnf::omega_pow(q), pow_nat(base, n));
  }
  // (w^e1 * c + ...)^(w*q) = w^(e1 * w * q)
  const Cnf& e1 = base.terms().front().exponent;
  Cnf head = Cnf::omega_pow(cnf_mul(e1, cnf_mul(Cnf::omega(), q)));
  return cnf_mul(head, pow_nat(base, n));
}

Cnf cnf_min(const Cnf& a, const Cnf& b) { return a < b ? a : b; }
Cnf cnf_max(const Cnf& a, const Cnf& b) { return a < b ? b : a; }

Cnf cnf_round_up(const Cnf& a) {
  if (!a.is_successor()) return a;
  return cnf_add(a.limit_part(), Cnf::omega());
}

Cnf cnf_round_down(const Cnf& a) { return a.limit_part(); }

bool cnf_is_omega_linear(const Cnf& a) {
  for (const CnfTerm& t : a.terms()) {
    if (t.exponent > Cnf::nat(1)) return false;
  }
  return true;
}

std::optional<std::uint64_t> cnf_omega_multiple(const Cnf& a) {
  if (a.is_zero()) return 0;
  if (a.terms().size() == 1 && a.terms()[0].exponent == Cnf::nat(1)) {
    return a.terms()[0].coefficient;
  }
  return std::nullopt;
}

Cnf fundamental(const Cnf& limit, std::uint64_t n) {
  if (!limit.is_limit()) {
    throw std::invalid_argument("fundamental sequence of a non-limit: " + limit.to_string());
  }
  std::vector<CnfTerm> head = limit.terms();
  CnfTerm last = head.back();
  head.pop_back();
  if (last.coefficient > 1) head.push_back(CnfTerm{last.exponent, last.coefficient - 1});
  Cnf prefix = Cnf::from_terms(std::move(head));
  if (last.exponent.is_successor()) {
    return cnf_add(prefix, single_term(last.exponent.predecessor(), n));
  }
  return cnf_add(prefix, Cnf::omega_pow(fundamental(last.exponent, n)));
}

CnfParseError::CnfParseError(std::size_t position, const std::string& message)
    : std::runtime_error("at " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Cnf parse() {
    Cnf value = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw CnfParseError(pos_, message);
  }

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

  Cnf sum() {
    Cnf value = product();
    while (accept('+')) value = cnf_add(value, product());
    return value;
  }

  Cnf product() {
    Cnf value = power();
    while (accept('*')) value = cnf_mul(value, power());
    return value;
  }

  Cnf power() {
    Cnf base = primary();
    if (accept('^')) return cnf_pow(base, power());
    return base;
  }

  Cnf primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Cnf inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'w') {
      ++pos_;
      return Cnf::omega();
    }
    if (c == '-') fail("non-natural coefficient: negative numbers are not ordinals");
    if (std::isdigit(static_cast<unsigned char>(c))) {
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
      return Cnf::nat(value);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Cnf parse_cnf(std::string_view text) { return Parser(text).parse(); }

}  // namespace brwdec
