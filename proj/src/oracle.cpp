#include "bellbound/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "bellbound/errors.hpp"

namespace bell {

namespace {

constexpr double kPi = std::numbers::pi;

// In-place mixed-radix increment, least significant digit first.
void advance(Assignment& a, int d, int first_digit) {
  const int n = a.n_parties();
  for (int pos = first_digit; pos < 2 * n; ++pos) {
    int& digit = pos < n ? a.alpha[pos] : a.beta[pos - n];
    if (++digit < d) return;
    digit = 0;
  }
}

// Visits reduced indexes [begin, end) with the decoded assignment.
template <typename Visit>
void scan_range(const BellScenario& s, bool fixed_first, std::uint64_t begin,
                std::uint64_t end, Visit&& visit) {
  const int d = s.n_outcomes;
  Assignment a =
      index_to_assignment(fixed_first ? begin * d : begin, s.n_parties, d);
  const int first_digit = fixed_first ? 1 : 0;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    visit(idx, const_cast<const Assignment&>(a));
    advance(a, d, first_digit);
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> partition(std::uint64_t total,
                                                               int threads) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (std::uint64_t begin = 0; begin < total; begin += chunk)
    ranges.emplace_back(begin, std::min(begin + chunk, total));
  return ranges;
}

}  // namespace

Assignment index_to_assignment(std::uint64_t idx, int n_parties, int d) {
  Assignment a;
  a.alpha.resize(n_parties);
  a.beta.resize(n_parties);
  for (int j = 0; j < n_parties; ++j) {
    a.alpha[j] = static_cast<int>(idx % d);
    idx /= d;
  }
  for (int j = 0; j < n_parties; ++j) {
    a.beta[j] = static_cast<int>(idx % d);
    idx /= d;
  }
  if (idx != 0) throw std::out_of_range("assignment index exceeds d^(2N)");
  return a;
}

std::uint64_t assignment_to_index(const Assignment& a, int d) {
  std::uint64_t idx = 0;
  const int n = a.n_parties();
  for (int j = 2 * n - 1; j >= 0; --j) {
    const int digit = j < n ? a.alpha[j] : a.beta[j - n];
    idx = idx * d + static_cast<std::uint64_t>(digit);
  }
  return idx;
}

SearchResult brute_force_max(const BellScenario& s, const Evaluator& eval,
                             const SearchOptions& opts) {
  std::uint64_t total = s.assignment_count();
  if (opts.shift_symmetry) total /= s.n_outcomes;
  if (total > opts.budget)
    throw BudgetExceeded("exhaustive search needs " + std::to_string(total) +
                         " evaluations; budget is " + std::to_string(opts.budget));

  int threads = opts.threads > 0
                    ? opts.threads
                    : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total));
  const auto ranges = partition(total, threads);

  // Pass 1: exact maximum per range, merged with plain max.
  std::vector<double> local_max(ranges.size(),
                                -std::numeric_limits<double>::infinity());
  {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      pool.emplace_back([&, i] {
        double best = -std::numeric_limits<double>::infinity();
        scan_range(s, opts.shift_symmetry, ranges[i].first, ranges[i].second,
                   [&](std::uint64_t, const Assignment& a) {
                     best = std::max(best, eval(a));
                   });
        local_max[i] = best;
      });
    }
    for (auto& t : pool) t.join();
  }
  const double global_max = *std::max_element(local_max.begin(), local_max.end());

  // Pass 2: witnesses within tolerance of the fixed global maximum. Ranges
  // are contiguous and scanned in index order, so keeping the first
  // witness_cap per range and concatenating reproduces the uncapped prefix.
  const double threshold =
      global_max - opts.tie_tolerance * std::abs(global_max);
  std::vector<std::vector<std::uint64_t>> local_hits(ranges.size());
  std::vector<std::uint64_t> local_counts(ranges.size(), 0);
  {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      pool.emplace_back([&, i] {
        scan_range(s, opts.shift_symmetry, ranges[i].first, ranges[i].second,
                   [&](std::uint64_t idx, const Assignment& a) {
                     if (eval(a) >= threshold) {
                       ++local_counts[i];
                       if (local_hits[i].size() < opts.witness_cap)
                         local_hits[i].push_back(idx);
                     }
                   });
      });
    }
    for (auto& t : pool) t.join();
  }

  SearchResult result;
  result.max_value = global_max;
  result.assignments_scanned = total;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    result.argmax_count += local_counts[i];
    for (std::uint64_t idx : local_hits[i]) {
      if (result.argmax.size() >= opts.witness_cap) break;
      const std::uint64_t full = opts.shift_symmetry ? idx * s.n_outcomes : idx;
      result.argmax.push_back(index_to_assignment(full, s.n_parties, s.n_outcomes));
    }
  }
  return result;
}

ProductEvaluator::ProductEvaluator(const BellScenario& s)
    : n_parties_(s.n_parties), n_outcomes_(s.n_outcomes) {
  const int d = n_outcomes_;
  const double nu = s.nu.value();
  phase_.resize(d);
  a_pow_.resize(static_cast<std::size_t>(d) * d);
  b_pow_.resize(static_cast<std::size_t>(d) * d);
  for (int h = 1; h < d; ++h) {
    phase_[h] = std::polar(1.0, 2.0 * kPi * nu * h / d);
    const std::complex<double> half_root = std::polar(1.0, kPi * h / d);
    for (int r = 0; r < d; ++r) {
      const auto root = std::polar(1.0, 2.0 * kPi * h * r / d);
      a_pow_[static_cast<std::size_t>(h) * d + r] = root;
      b_pow_[static_cast<std::size_t>(h) * d + r] = half_root * root;
    }
  }
}

double ProductEvaluator::operator()(const Assignment& a) const {
  const int d = n_outcomes_;
  double total = 0.0;
  for (int h = 1; h < d; ++h) {
    std::complex<double> prod = phase_[h];
    const std::complex<double>* arow = &a_pow_[static_cast<std::size_t>(h) * d];
    const std::complex<double>* brow = &b_pow_[static_cast<std::size_t>(h) * d];
    for (int j = 0; j < n_parties_; ++j)
      prod *= arow[a.alpha[j]] + brow[a.beta[j]];
    total += prod.real();
  }
  return std::ldexp(2.0 * total, -n_parties_);
}

ConstraintReport verify_constraints(const BellScenario& s, const Assignment& a) {
  ConstraintReport report;
  const int n = s.n_parties;
  const int m = s.modulus();
  report.residues.resize(n + 1);
  report.constant_in_k = true;
  for (int gamma = 0; gamma <= n; ++gamma) {
    const std::uint64_t count = binomial(n, gamma);
    report.residues[gamma].reserve(count);
    for (std::uint64_t k = 1; k <= count; ++k)
      report.residues[gamma].push_back(argument_value(s, a, gamma, k).value);
    for (int v : report.residues[gamma])
      if (v != report.residues[gamma].front()) report.constant_in_k = false;
  }
  if (!report.constant_in_k) return report;

  report.arithmetic = true;
  const int first_diff =
      ((report.residues[1].front() - report.residues[0].front()) % m + m) % m;
  for (int gamma = 0; gamma + 1 <= n; ++gamma) {
    const int diff = ((report.residues[gamma + 1].front() -
                       report.residues[gamma].front()) %
                          m +
                      m) %
                     m;
    if (diff != first_diff) report.arithmetic = false;
  }
  if (report.arithmetic)
    report.common_difference = Residue4d{first_diff, m}.symmetric();
  return report;
}

}  // namespace bell
