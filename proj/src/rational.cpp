#include "anacci/rational.hpp"

#include "anacci/error.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace anacci {
namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw Error(ErrorCode::InvalidArgument, "malformed number '" + std::string(whole) + "'");
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::InvalidArgument, "malformed number '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

Rational parse_decimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  Rational value;
  if (dot == std::string_view::npos) {
    value = Rational(parse_integer(text, whole));
  } else {
    const auto int_part = text.substr(0, dot);
    const auto frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw Error(ErrorCode::InvalidArgument, "malformed number '" + std::string(whole) + "'");
    }
    BigInt numerator = int_part.empty() ? BigInt(0) : parse_integer(int_part, whole);
    BigInt denominator = 1;
    if (!frac_part.empty()) {
      numerator = numerator * boost::multiprecision::pow(BigInt(10), frac_part.size()) +
                  parse_integer(frac_part, whole);
      denominator = boost::multiprecision::pow(BigInt(10), frac_part.size());
    }
    value = Rational(numerator, denominator);
  }
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text, text);
  const Rational num = parse_decimal(text.substr(0, slash), text);
  const Rational den = parse_decimal(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  return num / den;
}

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite value has no rational form");
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // mantissa * 2^53 is an exact integer
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  Rational value(scaled);
  exponent -= 53;
  const BigInt scale = BigInt(1) << std::abs(exponent);
  return exponent >= 0 ? Rational(value * scale) : Rational(value / scale);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace anacci
