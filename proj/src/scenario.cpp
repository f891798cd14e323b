#include "bellbound/scenario.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "bellbound/errors.hpp"

namespace bell {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // exact at every step: result holds binomial(n-k+i-1, i-1) * ...
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

BellScenario::BellScenario(int n, int d, Rational phase)
    : n_parties(n), n_outcomes(d), nu(phase) {
  if (n < 1) throw std::domain_error("scenario needs at least one party");
  if (d < 2) throw std::domain_error("scenario needs at least two outcomes");
}

bool BellScenario::quarter_class() const { return (4 * nu.num) % nu.den == 0; }

long long BellScenario::four_nu() const {
  if (!quarter_class())
    throw UnsupportedParameter("4*nu is not an integer for nu = " + nu.str());
  return 4 * nu.num / nu.den;
}

int BellScenario::quarter_c() const {
  long long c = four_nu() % 8;
  return static_cast<int>(c < 0 ? c + 8 : c);
}

bool BellScenario::odd_arguments() const {
  return quarter_class() && (four_nu() % 2 != 0);
}

std::uint64_t BellScenario::assignment_count() const {
  std::uint64_t total = 1;
  const std::uint64_t d = static_cast<std::uint64_t>(n_outcomes);
  for (int i = 0; i < 2 * n_parties; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / d)
      return std::numeric_limits<std::uint64_t>::max();
    total *= d;
  }
  return total;
}

void validate_assignment(const BellScenario& s, const Assignment& a) {
  if (a.n_parties() != s.n_parties ||
      a.beta.size() != static_cast<std::size_t>(s.n_parties))
    throw std::domain_error("assignment length does not match party count");
  for (int j = 0; j < s.n_parties; ++j) {
    if (a.alpha[j] < 0 || a.alpha[j] >= s.n_outcomes || a.beta[j] < 0 ||
        a.beta[j] >= s.n_outcomes)
      throw std::domain_error("assignment entry is not a residue mod d");
  }
}

int Residue4d::symmetric() const {
  return value > modulus / 2 ? value - modulus : value;
}

Residue4d make_residue(long long raw, int modulus) {
  long long v = raw % modulus;
  if (v < 0) v += modulus;
  return Residue4d{static_cast<int>(v), modulus};
}

std::vector<int> subset_from_rank(int n, int gamma, std::uint64_t k) {
  if (gamma < 0 || gamma > n)
    throw std::domain_error("gamma must lie in [0, N]");
  if (k < 1 || k > binomial(n, gamma))
    throw std::domain_error("subset rank k out of range");

  std::vector<int> sites;
  sites.reserve(gamma);
  std::uint64_t rest = k - 1;
  int site = 1;
  for (int slot = gamma; slot >= 1; --slot) {
    // count subsets that fix `site` as the next element
    while (true) {
      std::uint64_t block = binomial(n - site, slot - 1);
      if (rest < block) {
        sites.push_back(site);
        ++site;
        break;
      }
      rest -= block;
      ++site;
    }
  }
  return sites;
}

std::uint64_t rank_from_subset(int n, const std::vector<int>& subset) {
  std::vector<int> sites = subset;
  std::sort(sites.begin(), sites.end());
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (sites[i] < 1 || sites[i] > n)
      throw std::domain_error("site index outside [1, N]");
    if (i > 0 && sites[i] == sites[i - 1])
      throw std::domain_error("duplicate site index in subset");
  }

  std::uint64_t rank = 0;
  int slot = static_cast<int>(sites.size());
  int next = 1;
  for (int s : sites) {
    for (int u = next; u < s; ++u) rank += binomial(n - u, slot - 1);
    next = s + 1;
    --slot;
  }
  return rank + 1;
}

long long combination_value(const Assignment& a, int gamma, std::uint64_t k) {
  const int n = a.n_parties();
  const std::vector<int> sites = subset_from_rank(n, gamma, k);
  long long sum = 0;
  std::size_t pos = 0;
  for (int j = 1; j <= n; ++j) {
    if (pos < sites.size() && sites[pos] == j) {
      sum += a.beta[j - 1];
      ++pos;
    } else {
      sum += a.alpha[j - 1];
    }
  }
  return sum;
}

Residue4d argument_value(const BellScenario& s, const Assignment& a, int gamma,
                         std::uint64_t k) {
  const long long raw =
      4 * combination_value(a, gamma, k) + 2 * gamma + s.four_nu();
  return make_residue(raw, s.modulus());
}

}  // namespace bell
