#include "bellbound/rational.hpp"

#include <cstdlib>
#include <numeric>

#include "bellbound/errors.hpp"

namespace bell {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw UnsupportedParameter("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
}

Rational Rational::parse(const std::string& text) {
  const char* p = text.c_str();
  char* end = nullptr;
  long long n = std::strtoll(p, &end, 10);
  if (end == p) throw UnsupportedParameter("cannot parse rational: '" + text + "'");
  long long d = 1;
  if (*end == '/') {
    const char* q = end + 1;
    d = std::strtoll(q, &end, 10);
    if (end == q) throw UnsupportedParameter("cannot parse rational: '" + text + "'");
  }
  if (*end != '\0') throw UnsupportedParameter("cannot parse rational: '" + text + "'");
  return Rational(n, d);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace bell
