#include "ksym/rational.hpp"

#include <cctype>

#include "ksym/error.hpp"

namespace ksym {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool is_natural_literal(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_natural_literal(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  // mpz_class rejects a leading '+'.
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational value(n, d);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::DegenerateCommonKernel: return "DegenerateCommonKernel";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::MismatchedK: return "MismatchedK";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::InvariantBroken: return "InvariantBroken";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ConstructionIncomplete: return "ConstructionIncomplete";
    case ErrorCode::NotPolarized: return "NotPolarized";
    case ErrorCode::ComplementFailed: return "ComplementFailed";
    case ErrorCode::SingularPhi: return "SingularPhi";
    case ErrorCode::NotIsomorphism: return "NotIsomorphism";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace ksym
