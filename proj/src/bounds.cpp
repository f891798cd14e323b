#include "bellbound/bounds.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "bellbound/errors.hpp"
#include "bellbound/oracle.hpp"
#include "bellbound/representations.hpp"
#include "bellbound/trig.hpp"

namespace bell {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

GammaSelection select_gammas(int n_parties) {
  if (n_parties < 1) throw std::domain_error("select_gammas needs N >= 1");
  GammaSelection sel;
  if (n_parties % 2 == 0) {
    const int half = n_parties / 2;
    sel.gamma1 = {half};
    if (half - 1 >= 0) sel.gamma2.push_back(half - 1);
    if (half + 1 <= n_parties) sel.gamma2.push_back(half + 1);
    if (n_parties % 4 == 0) {
      sel.gamma1_parity = "even";
      sel.gamma2_parity = "odd";
    } else {
      sel.gamma1_parity = "odd";
      sel.gamma2_parity = "even";
    }
  } else {
    sel.gamma1 = {(n_parties - 1) / 2, (n_parties + 1) / 2};
    sel.gamma1_parity = "odd and even";
  }
  return sel;
}

int max_constraint(int gamma, const Rational& nu) {
  const long long four_nu = 4 * nu.num / nu.den;
  if ((4 * nu.num) % nu.den != 0 || four_nu % 2 == 0)
    throw UnsupportedParameter(
        "maximum constraint needs odd argument values; nu = " + nu.str());
  const long long exponent = gamma + (four_nu - 1) / 2;
  return (((exponent % 2) + 2) % 2 == 0) ? 1 : -1;
}

std::vector<Residue4d> propagate_sequence(int n_parties, int anchor_gamma,
                                          Residue4d anchor, Residue4d difference) {
  std::vector<Residue4d> terms;
  terms.reserve(n_parties + 1);
  for (int gamma = 0; gamma <= n_parties; ++gamma) {
    const long long raw = static_cast<long long>(anchor.value) +
                          static_cast<long long>(gamma - anchor_gamma) * difference.value;
    terms.push_back(make_residue(raw, anchor.modulus));
  }
  return terms;
}

double closed_bound_even(int n_parties, int d) {
  if (n_parties < 2 || n_parties % 2 != 0)
    throw std::domain_error("closed_bound_even needs even N >= 2");
  if (d < 2) throw std::domain_error("closed_bound_even needs d >= 2");
  const int half = n_parties / 2;
  double total = 0.0;
  for (int z = 0; z < half; ++z) {
    const double sign = (z % 2 == 0) ? 1.0 : -1.0;
    total += sign * static_cast<double>(binomial(n_parties + 1, half - z)) *
             cot_pi(2 * z + 1, 4LL * d);
  }
  const double end_sign = (half % 2 == 0) ? 1.0 : -1.0;
  total += end_sign * cot_pi(n_parties + 1, 4LL * d);
  return std::ldexp(total, -n_parties) - 1.0;
}

double closed_bound_odd(int n_parties, int d) {
  if (n_parties < 1 || n_parties % 2 == 0)
    throw std::domain_error("closed_bound_odd needs odd N >= 1");
  if (d < 2) throw std::domain_error("closed_bound_odd needs d >= 2");
  const int half = (n_parties - 1) / 2;
  double total = 0.0;
  for (int z = 0; z <= half; ++z) {
    const double sign = (z % 2 == 0) ? 1.0 : -1.0;
    total += sign * static_cast<double>(binomial(n_parties, half - z)) *
             cot_pi(2 * z + 1, 4LL * d);
  }
  return std::ldexp(total, -(n_parties - 1)) - 1.0;
}

double closed_bound(int n_parties, int d) {
  return (n_parties % 2 == 0) ? closed_bound_even(n_parties, d)
                              : closed_bound_odd(n_parties, d);
}

double trial_bound(int d) {
  if (d < 2) throw std::domain_error("trial_bound needs d >= 2");
  return cot_pi(1, 4LL * d) - 1.0;
}

double trial_bound_ratio(int d) { return trial_bound(d) / (d - 1); }

double svetlichny_bound(int n_parties) {
  if (n_parties < 2) throw std::domain_error("svetlichny_bound needs N >= 2");
  // d = 2 converts each cotangent group through s cot((pi/8)A) = 2 cos((pi/4)A) + 1,
  // which absorbs the alternating signs of the cotangent sums.
  double total = 0.0;
  if (n_parties % 2 == 0) {
    const int half = n_parties / 2;
    for (int z = 0; z < half; ++z)
      total += static_cast<double>(binomial(n_parties + 1, half - z)) *
               std::cos((2 * z + 1) * kPi / 4.0);
    total += std::cos((n_parties + 1) * kPi / 4.0);
    return total * std::exp2(-(n_parties - 1) / 2.0);
  }
  const int half = (n_parties - 1) / 2;
  for (int z = 0; z <= half; ++z)
    total += static_cast<double>(binomial(n_parties, half - z)) *
             std::cos((2 * z + 1) * kPi / 4.0);
  return total * std::exp2(-(n_parties - 2) / 2.0);
}

double bound_from_sequence(const BellScenario& s, const std::vector<Residue4d>& terms) {
  if (terms.size() != static_cast<std::size_t>(s.n_parties) + 1)
    throw std::domain_error("sequence must have N+1 argument terms");
  double total = 0.0;
  for (int gamma = 0; gamma <= s.n_parties; ++gamma) {
    const int value = terms[gamma].value;
    if (value % 2 == 0)
      throw UnsupportedParameter("argument term is even; cotangent form inapplicable");
    const int sign = (value % 4 == 1) ? 1 : -1;
    total += static_cast<double>(binomial(s.n_parties, gamma)) * sign *
             cot_pi(value, 4LL * s.n_outcomes);
  }
  return std::ldexp(total, -s.n_parties) - 1.0;
}

Assignment witness_assignment(const BellScenario& s) {
  if (!(s.nu == Rational(1, 4)))
    throw UnsupportedParameter("witness construction is for nu = 1/4; got nu = " +
                               s.nu.str());
  const int n = s.n_parties;
  const int d = s.n_outcomes;
  const double target = closed_bound(n, d);

  // Even-parity anchor gamma0 takes argument value 1. With all beta_j - alpha_j
  // congruent to delta, the sequence has common difference 4*delta + 2; delta = 0
  // gives +2 (N = 0, 3 mod 4) and delta = -1 gives -2 (N = 1, 2 mod 4).
  const int gamma0 = 2 * ((n + 1) / 4);
  const bool rising = (n % 4 == 0) || (n % 4 == 3);
  const int alpha_sum = ((gamma0 / 2) % d + d) % d;

  Assignment a;
  a.alpha.assign(n, 0);
  a.alpha[0] = rising ? (d - alpha_sum) % d : alpha_sum;
  const int shift = rising ? 0 : d - 1;
  a.beta.resize(n);
  for (int j = 0; j < n; ++j) a.beta[j] = (a.alpha[j] + shift) % d;

  if (std::abs(eval_cotangent(s, a) - target) <= 1e-9) return a;

  // Analytic route missed; search. Randomized first, exhaustive second.
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> pick(0, d - 1);
  for (int trial = 0; trial < 20000; ++trial) {
    for (int j = 0; j < n; ++j) {
      a.alpha[j] = pick(rng);
      a.beta[j] = pick(rng);
    }
    if (std::abs(eval_cotangent(s, a) - target) <= 1e-9) return a;
  }

  const std::uint64_t total = s.assignment_count();
  if (total > 100'000'000ULL)
    throw VerificationFailure("witness search space " + std::to_string(total) +
                              " exceeds the exhaustive fallback budget");
  const ProductEvaluator eval(s);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Assignment cand = index_to_assignment(idx, n, d);
    if (std::abs(eval(cand) - target) <= 1e-9) return cand;
  }
  throw VerificationFailure(
      "no assignment attains the closed bound " + std::to_string(target) +
      " for N = " + std::to_string(n) + ", d = " + std::to_string(d));
}

}  // namespace bell
