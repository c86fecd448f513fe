#include "cubeflip/rational.hpp"

#include "cubeflip/errors.hpp"

namespace cubeflip {

BigInt rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
BigInt rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

std::string rat_str(const Rational& q) {
  return rat_num(q).str() + "/" + rat_den(q).str();
}

Rational parse_rational(const std::string& text) {
  const auto bad = [&] { fail(Errc::parse, "not a rational: '" + text + "'"); };
  if (text.empty()) bad();
  std::string::size_type slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rational(0);  // unreachable
}

}  // namespace cubeflip
