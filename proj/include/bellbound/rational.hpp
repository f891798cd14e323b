#pragma once

#include <string>

namespace bell {

// Exact rational, always reduced, denominator positive. The phase parameter
// of a Bell scenario is stored this way because quarter-class detection and
// the mod-8 structure of c in nu = c/4 are integer facts, not float ones.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  // Accepts "c/4", "-3/4", "2"; no whitespace.
  static Rational parse(const std::string& text);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace bell
