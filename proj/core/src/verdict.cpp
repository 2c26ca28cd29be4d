#include "brwdec/verdict.hpp"

namespace brwdec {

std::string_view to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Proven:
      return "Proven";
    case Verdict::Kind::Refuted:
      return "Refuted";
    case Verdict::Kind::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

std::ostream& operator<<(std::ostream& os, const Verdict& v) {
  os << to_string(v.kind);
  if (v.is_unknown()) os << "(spent=" << v.spent << ")";
  return os;
}

}  // namespace brwdec
