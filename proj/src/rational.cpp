#include "curv2k/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace curv2k {

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_fraction_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("sign without digits in rational literal");
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("non-digit in integer part of rational literal: " + s);
  return BigInt(s);
}

Rational pow10(long long e) {
  BigInt p = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(e < 0 ? -e : e));
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

}  // namespace

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num = parse_integer(s.substr(0, slash));
    BigInt den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(num, den);
  }

  // Decimal / scientific literal: [sign] digits [. digits] [e[sign]digits]
  std::string mantissa = s;
  long long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    mantissa = s.substr(0, e);
    const std::string es = s.substr(e + 1);
    exp10 = std::stoll(es);  // throws on malformed exponent
  }
  std::string digits = mantissa;
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    exp10 -= static_cast<long long>(mantissa.size() - dot - 1);
  }
  if (digits.empty() || digits == "+" || digits == "-")
    throw std::invalid_argument("no digits in rational literal: " + s);
  return Rational(parse_integer(digits)) * pow10(exp10);
}

}  // namespace curv2k
