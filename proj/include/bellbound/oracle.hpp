#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "bellbound/scenario.hpp"

namespace bell {

using Evaluator = std::function<double(const Assignment&)>;

/// Mixed-radix decode: digits 0..N-1 are alpha, digits N..2N-1 are beta,
/// least significant digit first.
Assignment index_to_assignment(std::uint64_t idx, int n_parties, int d);
std::uint64_t assignment_to_index(const Assignment& a, int d);

struct SearchOptions {
  int threads = 0;                      // 0 picks hardware concurrency
  std::uint64_t budget = 100'000'000;   // refuse larger searches
  std::size_t witness_cap = 64;
  double tie_tolerance = 1e-12;         // relative to the maximum
  /// Fix alpha_1 = 0 and scan d^(2N-1) assignments. Only sound when the
  /// evaluator is invariant under a global outcome shift (d divides N for
  /// the product form); validate against the full search before relying on it.
  bool shift_symmetry = false;
};

struct SearchResult {
  double max_value = 0.0;
  std::vector<Assignment> argmax;       // ascending index order, capped
  std::uint64_t argmax_count = 0;       // all assignments within tolerance
  std::uint64_t assignments_scanned = 0;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// Exhaustive maximum of a pure evaluator over every deterministic
/// assignment. Two passes: the exact maximum is found first, then witnesses
/// within tolerance are collected in index order, so results are identical
/// for every thread count. Throws BudgetExceeded past opts.budget.
SearchResult brute_force_max(const BellScenario& s, const Evaluator& eval,
                             const SearchOptions& opts = {});

/// Product-form evaluator with cached phase tables. Bit-for-bit the same
/// formula as eval_product, tabulated for tight search loops.
class ProductEvaluator {
 public:
  explicit ProductEvaluator(const BellScenario& s);
  double operator()(const Assignment& a) const;

 private:
  int n_parties_;
  int n_outcomes_;
  std::vector<std::complex<double>> phase_;   // w^{nu n}, n = 1..d-1
  std::vector<std::complex<double>> a_pow_;   // w^{n r}
  std::vector<std::complex<double>> b_pow_;   // w^{n/2} w^{n r}
};

/// Structure of the argument values of one assignment: the residues for
/// every (gamma, k), whether each gamma collapses to a single argument term,
/// and whether those terms form an arithmetic sequence mod 4d.
struct ConstraintReport {
  std::vector<std::vector<int>> residues;  // residues[gamma][k-1]
  bool constant_in_k = false;
  bool arithmetic = false;
  int common_difference = 0;  // symmetric representative, 0 when not arithmetic
};

ConstraintReport verify_constraints(const BellScenario& s, const Assignment& a);

}  // namespace bell
