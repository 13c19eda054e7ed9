#include "gqm/rational.hpp"

#include "gqm/error.hpp"

#include <cctype>

namespace gqm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPrime: return "InvalidPrime";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidArgs: return "InvalidArgs";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::BadBasis: return "BadBasis";
    case ErrorKind::OutcomeNotInObservable: return "OutcomeNotInObservable";
    case ErrorKind::DegenerateObservable: return "DegenerateObservable";
    case ErrorKind::BadObservable: return "BadObservable";
    case ErrorKind::DegenerateSinglet: return "DegenerateSinglet";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadTable: return "BadTable";
    case ErrorKind::AdditionForbidden: return "AdditionForbidden";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

BigInt numerator_of(const Rat& r) { return boost::multiprecision::numerator(r); }
BigInt denominator_of(const Rat& r) { return boost::multiprecision::denominator(r); }

std::string to_string(const Rat& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_int(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw Error(ErrorKind::InvalidArgs, "not a rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rat(parse_int(num_text));
  auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text)) {
    throw Error(ErrorKind::InvalidArgs, "not a rational: '" + std::string(text) + "'");
  }
  BigInt den = parse_int(den_text);
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  return Rat(parse_int(num_text), den);
}

}  // namespace gqm
