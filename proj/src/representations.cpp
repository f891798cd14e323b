#include "bellbound/representations.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "bellbound/errors.hpp"
#include "bellbound/trig.hpp"

namespace bell {

namespace {

constexpr double kPi = std::numbers::pi;

int outcome_pm(int residue) { return (residue % 2 == 0) ? 1 : -1; }

}  // namespace

double SignVector::scale(int n_parties) const {
  if (c % 2 != 0) return std::ldexp(std::numbers::sqrt2, -n_parties);  // 2^{-(N-1/2)}
  return std::ldexp(1.0, -(n_parties - 1));
}

Eigen::VectorXd SignVector::expanded(int n_parties) const {
  Eigen::VectorXd v(n_parties + 1);
  for (int gamma = 0; gamma <= n_parties; ++gamma) v(gamma) = sign(gamma);
  return v;
}

SignVector sign_vector(long long c) {
  static constexpr std::array<std::array<int, 4>, 8> kTable = {{
      {+1, 0, -1, 0},    // c = 0
      {+1, -1, -1, +1},  // c = 1
      {0, -1, 0, +1},    // c = 2
      {-1, -1, +1, +1},  // c = 3
      {-1, 0, +1, 0},    // c = 4
      {-1, +1, +1, -1},  // c = 5
      {0, +1, 0, -1},    // c = 6
      {+1, +1, -1, -1},  // c = 7
  }};
  int cm = static_cast<int>(((c % 8) + 8) % 8);
  return SignVector{kTable[cm], cm};
}

double eval_product(const BellScenario& s, const Assignment& a) {
  validate_assignment(s, a);
  const int n = s.n_parties;
  const int d = s.n_outcomes;
  const double nu = s.nu.value();

  std::complex<double> sum = 0.0;
  for (int h = 1; h < d; ++h) {
    std::complex<double> prod = std::polar(1.0, 2.0 * kPi * nu * h / d);
    const std::complex<double> half_root = std::polar(1.0, kPi * h / d);
    for (int j = 0; j < n; ++j) {
      const std::complex<double> aj = std::polar(1.0, 2.0 * kPi * h * a.alpha[j] / d);
      const std::complex<double> bj = std::polar(1.0, 2.0 * kPi * h * a.beta[j] / d);
      prod *= aj + half_root * bj;
    }
    sum += prod;
  }
  return std::ldexp(2.0 * sum.real(), -n);
}

double eval_cosine(const BellScenario& s, const Assignment& a) {
  validate_assignment(s, a);
  const int n = s.n_parties;
  const int d = s.n_outcomes;
  const double four_nu = 4.0 * s.nu.value();

  double total = 0.0;
  for (int gamma = 0; gamma <= n; ++gamma) {
    const std::uint64_t count = binomial(n, gamma);
    for (std::uint64_t k = 1; k <= count; ++k) {
      const double arg =
          4.0 * static_cast<double>(combination_value(a, gamma, k)) +
          2.0 * gamma + four_nu;
      for (int h = 1; h < d; ++h) total += std::cos(h * kPi / (2.0 * d) * arg);
    }
  }
  return std::ldexp(total, -(n - 1));
}

double eval_cotangent(const BellScenario& s, const Assignment& a) {
  validate_assignment(s, a);
  if (!s.odd_arguments())
    throw UnsupportedParameter(
        "cotangent form needs odd argument values; 4*nu = " +
        Rational(4 * s.nu.num, s.nu.den).str() + " is not an odd integer");

  const int n = s.n_parties;
  const int d = s.n_outcomes;
  double total = 0.0;
  for (int gamma = 0; gamma <= n; ++gamma) {
    const std::uint64_t count = binomial(n, gamma);
    for (std::uint64_t k = 1; k <= count; ++k) {
      const Residue4d r = argument_value(s, a, gamma, k);
      const int sign = (r.value % 4 == 1) ? 1 : -1;
      total += sign * cot_pi(r.value, 4LL * d);
    }
  }
  return std::ldexp(total, -n) - 1.0;
}

double dimension_sum(long long m, int r, int d) {
  if (d < 2) throw std::domain_error("dimension_sum needs d >= 2");
  if (r < 0 || r > 3) throw std::domain_error("residue class r must be in {0,1,2,3}");
  const long long q = 4 * m + r;
  switch (((q % 4) + 4) % 4) {
    case 1:
      return 0.5 * cot_pi(q, 4LL * d) - 0.5;
    case 3:
      return -0.5 * cot_pi(q, 4LL * d) - 0.5;
    case 2:
      return 0.0;
    default:
      // theta a multiple of 2 pi sums d-1 ones; otherwise the phases cancel.
      return (q % (4LL * d) == 0) ? static_cast<double>(d - 1) : -1.0;
  }
}

Eigen::VectorXd correlation_vector(const Assignment& a) {
  const int n = a.n_parties();
  // Coefficients of x^gamma in prod_j (A_j + B_j x); exact small integers.
  std::vector<double> poly{1.0};
  for (int j = 0; j < n; ++j) {
    const double aj = outcome_pm(a.alpha[j]);
    const double bj = outcome_pm(a.beta[j]);
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t g = 0; g < poly.size(); ++g) {
      next[g] += poly[g] * aj;
      next[g + 1] += poly[g] * bj;
    }
    poly.swap(next);
  }
  return Eigen::Map<Eigen::VectorXd>(poly.data(), static_cast<int>(poly.size()));
}

double eval_sign_form(const BellScenario& s, const Assignment& a) {
  validate_assignment(s, a);
  if (s.n_outcomes != 2)
    throw UnsupportedParameter("sign-vector form is defined for d = 2 only");
  if (!s.quarter_class())
    throw UnsupportedParameter("sign-vector form needs nu = c/4; got nu = " + s.nu.str());

  const SignVector sv = sign_vector(s.four_nu());
  const Eigen::VectorXd corr = correlation_vector(a);
  return sv.scale(s.n_parties) * sv.expanded(s.n_parties).dot(corr);
}

}  // namespace bell
