#include "gnm/rational.hpp"

#include <cctype>

#include "gnm/errors.hpp"

namespace gnm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ImproperFunction: return "ImproperFunction";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotNormalizable: return "NotNormalizable";
    case ErrorCode::NoNormalIndex: return "NoNormalIndex";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotParametrized: return "NotParametrized";
    case ErrorCode::DegenerateTransform: return "DegenerateTransform";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text, true)) {
      throw MathError(ErrorCode::ParseError,
                      "malformed rational '" + std::string(text) + "'");
    }
    return Rational(to_mpz(text));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw MathError(ErrorCode::ParseError,
                    "malformed rational '" + std::string(text) + "'");
  }
  mpz_class d = to_mpz(den);
  if (d == 0) {
    throw MathError(ErrorCode::ParseError,
                    "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(to_mpz(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

}  // namespace gnm
