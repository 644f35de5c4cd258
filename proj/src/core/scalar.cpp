#include "tqftdef/scalar.hpp"

#include <cctype>

#include "tqftdef/error.hpp"

namespace tqftdef {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownEquationId: return "UnknownEquationId";
    case ErrorCode::NotProjectivelySpecial: return "NotProjectivelySpecial";
    case ErrorCode::ZeroLoopConstant: return "ZeroLoopConstant";
    case ErrorCode::InvalidSystem: return "InvalidSystem";
    case ErrorCode::InvalidSurface: return "InvalidSurface";
    case ErrorCode::OrientationContradiction: return "OrientationContradiction";
    case ErrorCode::UnknownSeed: return "UnknownSeed";
    case ErrorCode::NoSuchSimplex: return "NoSuchSimplex";
    case ErrorCode::NotFlippable: return "NotFlippable";
    case ErrorCode::NotMergeable: return "NotMergeable";
    case ErrorCode::NotSplittable: return "NotSplittable";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::OutOfMemoryBudget: return "OutOfMemoryBudget";
    case ErrorCode::InvalidGroupTable: return "InvalidGroupTable";
    case ErrorCode::InvalidActionTable: return "InvalidActionTable";
    case ErrorCode::ZeroCocycleValue: return "ZeroCocycleValue";
    case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorCode::InvalidModule: return "InvalidModule";
  }
  return "Error";
}

namespace {

bool is_integer_literal(std::string_view text, bool allow_sign) {
  if (text.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && text[0] == '-') start = 1;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(ErrorCode::Parse, "not a rational literal: \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator: \"" + std::string(text) + "\"");
  Scalar value(n, d);
  value.canonicalize();
  return value;
}

std::string format_scalar(const Scalar& value) { return value.get_str(10); }

Scalar power(const Scalar& value, long exponent) {
  if (exponent < 0) {
    if (is_zero(value)) throw Error(ErrorCode::InvalidArgument, "negative power of zero");
    Scalar inverse = 1 / value;
    return power(inverse, -exponent);
  }
  Scalar result = 1;
  Scalar base = value;
  auto e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace tqftdef
