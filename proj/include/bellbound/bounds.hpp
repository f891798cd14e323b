#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bellbound/scenario.hpp"

namespace bell {

/// gamma values carrying the largest binomial weight (gamma1) and, for even
/// N, the second largest (gamma2). These are the anchors of the maximum
/// constraints; odd N has two gamma1 of both parities and no gamma2.
struct GammaSelection {
  std::vector<int> gamma1;
  std::vector<int> gamma2;
  std::string gamma1_parity;  // "even", "odd", "odd and even"
  std::string gamma2_parity;  // empty when gamma2 is absent
};

GammaSelection select_gammas(int n_parties);

/// Target residue (+1 or -1) that makes a gamma-group cotangent term equal
/// cot(pi/4d): (-1)^{gamma + (4 nu - 1)/2}. Requires odd 4*nu.
int max_constraint(int gamma, const Rational& nu);

/// Arithmetic propagation of argument terms: entry gamma is
/// anchor + (gamma - anchor_gamma) * difference, reduced mod 4d.
std::vector<Residue4d> propagate_sequence(int n_parties, int anchor_gamma,
                                          Residue4d anchor, Residue4d difference);

/// Maximal local-realistic value of the nu = 1/4 function, even N:
/// (1/2^N)[sum_{z=0}^{N/2-1} (-1)^z binom(N+1, N/2-z) cot((2z+1) pi/4d)
///         + (-1)^{N/2} cot((N+1) pi/4d)] - 1.
/// The endpoint term carries argument N+1: it is the gamma = N end of the
/// arithmetic sequence 1 + 2(gamma - N/2), which stays odd.
double closed_bound_even(int n_parties, int d);

/// Maximal local-realistic value of the nu = 1/4 function, odd N:
/// (1/2^{N-1}) sum_{z=0}^{(N-1)/2} (-1)^z binom(N, (N-1)/2-z) cot((2z+1) pi/4d) - 1.
double closed_bound_odd(int n_parties, int d);

/// Parity dispatch over the two closed forms.
double closed_bound(int n_parties, int d);

/// Over-count obtained by maximizing every cotangent term independently:
/// cot(pi/4d) - 1. Always >= the true bound.
double trial_bound(int d);

/// trial_bound(d) / (d - 1); tends to 4/pi as d grows.
double trial_bound_ratio(int d);

/// Bound of the rescaled Svetlichny-Collins function via the d = 2 cosine
/// sums; equals 1 for every N >= 2.
double svetlichny_bound(int n_parties);

/// Cotangent-form total of a full argument-term sequence (gamma = 0..N),
/// each term weighted by binomial(N, gamma). Terms must be odd residues.
double bound_from_sequence(const BellScenario& s, const std::vector<Residue4d>& terms);

/// An assignment attaining closed_bound(N, d) for nu = 1/4, built by solving
/// the anchor congruences (constant beta_j - alpha_j gives common difference
/// +-2); falls back to randomized and exhaustive search if the analytic
/// solution misses. Throws VerificationFailure when nothing attains the bound.
Assignment witness_assignment(const BellScenario& s);

struct BoundReport {
  BellScenario scenario;
  std::optional<double> closed_form;
  std::optional<double> brute_force;
  std::vector<Assignment> witnesses;
  std::optional<double> quantum_reference;
  double trial_bound = 0.0;
  std::int64_t elapsed_ms = 0;
  std::optional<std::uint64_t> assignments_scanned;
  std::optional<std::uint64_t> argmax_count;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

}  // namespace bell
