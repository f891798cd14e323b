#pragma once

#include <cstdint>
#include <vector>

#include "bellbound/rational.hpp"

namespace bell {

/// Exact binomial coefficient; valid for n <= 62.
std::uint64_t binomial(int n, int k);

/// An N-party, d-outcome scenario with phase parameter nu.
struct BellScenario {
  int n_parties;    // N >= 1
  int n_outcomes;   // d >= 2
  Rational nu;

  BellScenario(int n, int d, Rational phase);

  int modulus() const { return 4 * n_outcomes; }

  /// nu is a multiple of 1/4, i.e. 4*nu is an integer.
  bool quarter_class() const;
  /// 4*nu as an integer; requires quarter_class().
  long long four_nu() const;
  /// c with nu = c/4, reduced to [0, 8). Requires quarter_class().
  int quarter_c() const;
  /// 4*nu is an odd integer, so every argument value is odd.
  bool odd_arguments() const;
  /// d^(2N), saturating at UINT64_MAX on overflow.
  std::uint64_t assignment_count() const;

  friend bool operator==(const BellScenario&, const BellScenario&) = default;
};

/// A deterministic local strategy: outcome residues in {0,..,d-1} for both
/// measurement choices at every site. alpha[j] belongs to site j+1.
struct Assignment {
  std::vector<int> alpha;
  std::vector<int> beta;

  int n_parties() const { return static_cast<int>(alpha.size()); }

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Throws std::domain_error unless sizes match N and entries are residues mod d.
void validate_assignment(const BellScenario& s, const Assignment& a);

/// Index of one combination: gamma beta-type slots, k-th subset choice.
/// k is 1-based, 1 <= k <= binomial(N, gamma).
struct SubsetIndex {
  int gamma;
  std::uint64_t k;
};

/// Least nonnegative residue modulo 4d.
struct Residue4d {
  int value;
  int modulus;

  /// Representative in (-2d, 2d].
  int symmetric() const;

  friend bool operator==(const Residue4d&, const Residue4d&) = default;
};

Residue4d make_residue(long long raw, int modulus);

/// The k-th size-gamma subset of sites {1,..,N}. Subsets are ordered
/// lexicographically on their sorted site lists, so the subset holding the
/// lowest differing site index gets the smaller k.
std::vector<int> subset_from_rank(int n, int gamma, std::uint64_t k);

/// Inverse of subset_from_rank; subset entries are 1-based site indices.
std::uint64_t rank_from_subset(int n, const std::vector<int>& subset);

/// Sum of the N measurement parameters with beta at the sites of the k-th
/// size-gamma subset and alpha elsewhere. Plain integer, never reduced.
long long combination_value(const Assignment& a, int gamma, std::uint64_t k);

/// (4*combination + 2*gamma + 4*nu) mod 4d. Requires an integral 4*nu;
/// otherwise throws UnsupportedParameter (use the cosine form instead).
Residue4d argument_value(const BellScenario& s, const Assignment& a, int gamma,
                         std::uint64_t k);

}  // namespace bell
