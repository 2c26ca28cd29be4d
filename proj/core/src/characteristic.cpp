#include "brwdec/characteristic.hpp"

#include <map>
#include <mutex>
#include <regex>
#include <stdexcept>

#include "brwdec/arith.hpp"

namespace brwdec {

struct PropFamily::State {
  std::mutex mutex;
  std::map<std::uint64_t, BitSeq> memo;
  Members members;
  std::string description;
  std::optional<std::uint64_t> hit_bound;
};

PropFamily::PropFamily(Members members, std::string description,
                       std::optional<std::uint64_t> hit_bound)
    : state_(std::make_shared<State>()) {
  state_->members = std::move(members);
  state_->description = std::move(description);
  state_->hit_bound = hit_bound;
}

BitSeq PropFamily::member(std::uint64_t n) const {
  std::lock_guard lock(state_->mutex);
  auto it = state_->memo.find(n);
  if (it == state_->memo.end()) it = state_->memo.emplace(n, state_->members(n)).first;
  return it->second;
}

const std::string& PropFamily::description() const { return state_->description; }

std::optional<std::uint64_t> PropFamily::uniform_hit_bound() const { return state_->hit_bound; }

struct PropFamily2D::State {
  std::mutex mutex;
  std::map<std::uint64_t, PropFamily> columns;
  Members members;
  std::string description;
  bool monotone = false;
  ColumnBound column_bound;
};

PropFamily2D::PropFamily2D(Members members, std::string description, bool monotone,
                           ColumnBound column_bound)
    : state_(std::make_shared<State>()) {
  state_->members = std::move(members);
  state_->description = std::move(description);
  state_->monotone = monotone;
  state_->column_bound = std::move(column_bound);
}

BitSeq PropFamily2D::member(std::uint64_t n, std::uint64_t m) const {
  return column(m).member(n);
}

PropFamily PropFamily2D::column(std::uint64_t m) const {
  std::lock_guard lock(state_->mutex);
  auto it = state_->columns.find(m);
  if (it == state_->columns.end()) {
    std::optional<std::uint64_t> bound;
    if (state_->column_bound) bound = state_->column_bound(m);
    Members members = state_->members;
    PropFamily col([members, m](std::uint64_t n) { return members(n, m); },
                   state_->description + "[m=" + std::to_string(m) + "]", bound);
    it = state_->columns.emplace(m, std::move(col)).first;
  }
  return it->second;
}

const std::string& PropFamily2D::description() const { return state_->description; }

bool PropFamily2D::monotone() const { return state_->monotone; }

PropFamily normalize_down(const PropFamily& p) {
  return PropFamily(
      [p](std::uint64_t i) {
        return BitSeq(
            [p, i](std::uint64_t k) {
              for (std::uint64_t j = 0; j <= i; ++j) {
                if (!p.member(j).first_one(k)) return false;
              }
              return true;
            },
            "meet");
      },
      "down(" + p.description() + ")", p.uniform_hit_bound());
}

PropFamily normalize_up(const PropFamily& p) {
  return PropFamily(
      [p](std::uint64_t i) {
        return BitSeq(
            [p, i](std::uint64_t k) {
              for (std::uint64_t j = 0; j <= i; ++j) {
                if (p.member(j).at(k)) return true;
              }
              return false;
            },
            "join");
      },
      "up(" + p.description() + ")", p.uniform_hit_bound());
}

Ordinal psi_n(const PropFamily& p, std::uint64_t n) {
  if (n == 0) return omega();
  Annotation note;
  if (p.uniform_hit_bound()) {
    note.exact = Cnf::omega_times(n + 1);
  } else {
    note.upper = Cnf::omega_times(n + 1);
  }
  return Ordinal::lim(OrdinalSeq([p, n](std::uint64_t k) {
                        std::uint64_t t = 0;
                        for (std::uint64_t i = 0; i < n; ++i) {
                          if (p.member(i).first_one(k)) ++t;
                        }
                        // w * t + k
                        return embed(cnf_add(Cnf::omega_times(t), Cnf::nat(k)));
                      }),
                      std::move(note));
}

Ordinal psi(const PropFamily& p) {
  const Cnf omega_squared = Cnf::omega_pow(Cnf::nat(2));
  Annotation note;
  if (p.uniform_hit_bound()) {
    note.exact = omega_squared;
  } else {
    note.upper = omega_squared;
  }
  return Ordinal::lim(
      OrdinalSeq([p](std::uint64_t n) { return add(psi_n(p, n), from_nat(n)); }),
      std::move(note));
}

DecWitness forall_witness(const PropFamily& p) {
  return DecWitness{Cnf::omega_pow(Cnf::nat(2)), psi(normalize_down(p))};
}

DecWitness exists_witness(const PropFamily& p) {
  return DecWitness{Cnf::omega_times(3), psi(p)};
}

DecWitness exists_forall_witness(const PropFamily2D& p) {
  if (!p.monotone()) {
    throw std::invalid_argument("exists_forall_witness: family " + p.description() +
                                " is not flagged monotone");
  }
  const Cnf level = cnf_add(Cnf::omega_pow(Cnf::nat(2)), Cnf::omega());
  Ordinal y = Ordinal::lim(OrdinalSeq([p](std::uint64_t m) {
                             return add(psi(p.column(m)), from_nat(m));
                           }),
                           Annotation{std::nullopt, level});
  return DecWitness{level, std::move(y)};
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

bool twin_at(std::uint64_t i) { return is_prime(i) && is_prime(i + 2); }

}  // namespace

PropFamily family_twin_primes(std::uint64_t cap) {
  return PropFamily(
      [cap](std::uint64_t n) {
        return BitSeq([n, cap](std::uint64_t i) { return n < i && i <= cap && twin_at(i); },
                      "twin-prime-above(" + std::to_string(n) + ")");
      },
      "twin-primes(" + std::to_string(cap) + ")");
}

PropFamily family_const(bool value) {
  return PropFamily([value](std::uint64_t) { return BitSeq::constant(value); },
                    value ? "const-true" : "const-false",
                    value ? std::optional<std::uint64_t>(0) : std::nullopt);
}

PropFamily family_single_true(std::uint64_t j) {
  return PropFamily([j](std::uint64_t n) { return BitSeq::constant(n == j); },
                    "single-true(" + std::to_string(j) + ")");
}

PropFamily2D family_threshold(std::uint64_t m0) {
  return PropFamily2D(
      [m0](std::uint64_t, std::uint64_t m) { return BitSeq::constant(m >= m0); },
      "threshold(" + std::to_string(m0) + ")", true,
      [m0](std::uint64_t m) {
        return m >= m0 ? std::optional<std::uint64_t>(0) : std::nullopt;
      });
}

PropFamily2D family_diagonal() {
  return PropFamily2D(
      [](std::uint64_t n, std::uint64_t m) { return BitSeq::constant(n < m); }, "diagonal",
      true);
}

PropFamily2D family_twin_prime_counterexample() {
  return PropFamily2D(
      [](std::uint64_t n, std::uint64_t m) { return BitSeq::constant(n < m || !twin_at(n)); },
      "twin-prime-counterexample", true);
}

std::vector<std::string> family_names() {
  return {"twin-primes(CAP)", "const-true",    "const-false",
          "single-true(J)",   "threshold(M0)", "diagonal",
          "twin-prime-counterexample"};
}

namespace {

std::optional<std::uint64_t> call_arg(const std::string& text, const std::string& name) {
  static const std::regex call(R"(^\s*([a-z-]+)\s*\(\s*([0-9]+)\s*\)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, call) || m[1] != name) return std::nullopt;
  try {
    return std::stoull(m[2]);
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::optional<PropFamily> lookup_family(const std::string& text) {
  const std::string name = trimmed(text);
  if (name == "const-true") return family_const(true);
  if (name == "const-false") return family_const(false);
  if (auto cap = call_arg(name, "twin-primes")) return family_twin_primes(*cap);
  if (auto j = call_arg(name, "single-true")) return family_single_true(*j);
  return std::nullopt;
}

std::optional<PropFamily2D> lookup_family_2d(const std::string& text) {
  const std::string name = trimmed(text);
  if (name == "diagonal") return family_diagonal();
  if (name == "twin-prime-counterexample") return family_twin_prime_counterexample();
  if (auto m0 = call_arg(name, "threshold")) return family_threshold(*m0);
  return std::nullopt;
}

}  // namespace brwdec
