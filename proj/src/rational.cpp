#include "negdep/rational.hpp"

#include <cctype>
#include <ostream>

#include "negdep/error.hpp"

namespace negdep {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kMassNotOne: return "MassNotOne";
    case ErrorCode::kDimMismatch: return "DimMismatch";
    case ErrorCode::kNonpositiveProbability: return "NonpositiveProbability";
    case ErrorCode::kEmptyIndexSet: return "EmptyIndexSet";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kZeroProbabilityEvent: return "ZeroProbabilityEvent";
    case ErrorCode::kUndefinedAtAtom: return "UndefinedAtAtom";
    case ErrorCode::kSupportOutOfRange: return "SupportOutOfRange";
    case ErrorCode::kInvalidModel: return "InvalidModel";
    case ErrorCode::kEnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorCode::kGridTooLarge: return "GridTooLarge";
    case ErrorCode::kImplicationViolation: return "ImplicationViolation";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "UnknownError";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw Error(ErrorCode::kParse, "invalid rational literal '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorCode::kParse, "zero denominator");
  value_ = mpq_class(numerator, 1);
  value_ /= mpq_class(denominator, 1);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::kInternal, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  if (!is_integer_literal(num, true)) bad_literal(text);
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  if (slash == std::string_view::npos) return Rational(mpq_class(n));
  const std::string_view den = s.substr(slash + 1);
  if (!is_integer_literal(den, false)) bad_literal(text);
  mpz_class d(std::string(den), 10);
  if (d == 0) bad_literal(text);
  mpq_class q(n, d);
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

ExtRational ExtRational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "-inf") return neg_inf();
  if (s == "inf" || s == "+inf") return pos_inf();
  return ExtRational(Rational::parse(s));
}

std::string ExtRational::str() const {
  switch (kind_) {
    case Kind::kNegInf: return "-inf";
    case Kind::kPosInf: return "inf";
    default: return value_.str();
  }
}

}  // namespace negdep
