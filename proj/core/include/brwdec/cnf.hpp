#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace brwdec {

struct CnfTerm;

/// Cantor normal form of an ordinal below epsilon_0:
///   w^e1 * c1 + w^e2 * c2 + ... + w^ek * ck,  e1 > e2 > ... > ek,  ci > 0.
///
/// Values are always normal: every constructor either builds a normal form
/// directly or validates its input. The empty term list is zero.
class Cnf {
 public:
  Cnf();  // zero

  static Cnf nat(std::uint64_t n);
  static Cnf omega();
  /// w^e
  static Cnf omega_pow(const Cnf& e);
  /// w * k
  static Cnf omega_times(std::uint64_t k);
  /// Throws std::invalid_argument unless the terms are in normal form.
  static Cnf from_terms(std::vector<CnfTerm> terms);

  const std::vector<CnfTerm>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const;

  /// Value when finite.
  std::optional<std::uint64_t> as_nat() const;
  /// Trailing natural number n in alpha = lambda + n.
  std::uint64_t finite_part() const;
  /// lambda in alpha = lambda + n (zero or a limit).
  Cnf limit_part() const;
  /// Requires is_successor().
  Cnf predecessor() const;

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Cnf& a, const Cnf& b);
  friend bool operator==(const Cnf& a, const Cnf& b);

 private:
  std::vector<CnfTerm> terms_;
};

struct CnfTerm {
  Cnf exponent;
  std::uint64_t coefficient = 1;

  friend bool operator==(const CnfTerm&, const CnfTerm&) = default;
};

enum class Order { Less, Equal, Greater };

Order cnf_compare(const Cnf& a, const Cnf& b);

Cnf cnf_add(const Cnf& a, const Cnf& b);
Cnf cnf_mul(const Cnf& a, const Cnf& b);
Cnf cnf_pow(const Cnf& base, const Cnf& exponent);
Cnf cnf_min(const Cnf& a, const Cnf& b);
Cnf cnf_max(const Cnf& a, const Cnf& b);

/// Smallest zero/limit ordinal >= a: lambda + n |-> lambda + w for n > 0.
Cnf cnf_round_up(const Cnf& a);
/// Largest zero/limit ordinal <= a.
Cnf cnf_round_down(const Cnf& a);

/// True when a = w*k + n for naturals k, n.
bool cnf_is_omega_linear(const Cnf& a);
/// If a = w*k (k >= 0), returns k.
std::optional<std::uint64_t> cnf_omega_multiple(const Cnf& a);

/// Canonical fundamental sequence of a limit:
///   (d + w)[n] = d + n, (d + w^(b+1))[n] = d + w^b * n, (d + w^l)[n] = d + w^(l[n]).
/// Throws std::invalid_argument for zero and successors.
Cnf fundamental(const Cnf& limit, std::uint64_t n);

class CnfParseError : public std::runtime_error {
 public:
  CnfParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: naturals, `w`, `+`, `*`, `^`, parentheses. `^` binds tighter
/// than `*`, which binds tighter than `+`; `+` and `*` associate left, `^`
/// associates right. The value is normalised with ordinal arithmetic.
Cnf parse_cnf(std::string_view text);

struct CnfLess {
  bool operator()(const Cnf& a, const Cnf& b) const { return a < b; }
};

}  // namespace brwdec
