#pragma once

#include <Eigen/Core>
#include <array>

#include "bellbound/scenario.hpp"

namespace bell {

/// Period-4 pattern of correlation-term signs for nu = c/4 at d = 2.
/// Entries are +1, -1 or 0; element gamma of the expanded length-(N+1)
/// vector is period4[gamma mod 4].
struct SignVector {
  std::array<int, 4> period4;
  int c;  // reduced residue mod 8

  int sign(int gamma) const { return period4[((gamma % 4) + 4) % 4]; }

  /// Coefficient magnitude: 2^{-(N-1/2)} for odd c, 2^{-(N-1)} for even c.
  double scale(int n_parties) const;

  /// The expanded vector (sign(0), .., sign(N)).
  Eigen::VectorXd expanded(int n_parties) const;
};

SignVector sign_vector(long long c);

/// Direct complex evaluation of the function: twice the real part of
/// (1/2^N) sum_{n=1}^{d-1} w^{nu n} prod_j (A_j^n + w^{n/2} B_j^n),
/// w = exp(2 pi i / d), A_j = w^{alpha_j}, B_j = w^{beta_j}.
double eval_product(const BellScenario& s, const Assignment& a);

/// Cosine representation, valid for any nu:
/// (1/2^{N-1}) sum_{n,gamma,k} cos[(n pi / 2d)(4 C^gamma_k + 2 gamma + 4 nu)].
double eval_cosine(const BellScenario& s, const Assignment& a);

/// Cotangent representation, valid when 4*nu is an odd integer:
/// (1/2^N) sum_{gamma,k} s cot[(pi/4d) A^gamma_k] - 1, with s = +1 for
/// argument values congruent to 1 mod 4 and s = -1 for 3 mod 4.
/// Throws UnsupportedParameter when some argument value would be even.
double eval_cotangent(const BellScenario& s, const Assignment& a);

/// sum_{n=1}^{d-1} cos(n theta) at theta = (pi/2d)(4m + r), in closed form:
///   odd 4m+r:  +-cot(theta/2)/2 - 1/2, sign + iff 4m+r = 1 (mod 4)
///   4m+r = 0 (mod 4): d-1 when 4d divides 4m+r (theta multiple of 2 pi), else -1
///   4m+r = 2 (mod 4): 0
double dimension_sum(long long m, int r, int d);

/// Correlation terms C(0..N) for d = 2 outcomes (-1)^alpha_j, (-1)^beta_j:
/// C(gamma) sums all distinct products with exactly gamma beta-type factors.
Eigen::VectorXd correlation_vector(const Assignment& a);

/// Sign-vector inner product form, d = 2 and quarter-class nu only:
/// scale(c) * S^{c/4} . C_N. Throws UnsupportedParameter otherwise.
double eval_sign_form(const BellScenario& s, const Assignment& a);

}  // namespace bell
