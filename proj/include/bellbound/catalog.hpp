#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "bellbound/oracle.hpp"
#include "bellbound/scenario.hpp"

namespace bell {

/// A named (N,2) Bell function in functional form; outcomes are +-1,
/// 0 -> +1 and 1 -> -1.
struct NamedFunction {
  std::string name;
  int n_parties;
  Evaluator eval;
};

NamedFunction chsh();
NamedFunction mermin(int n_parties);
NamedFunction svetlichny3(int variant);  // variant 1 or 2, N fixed at 3
NamedFunction ardehali(int n_parties);
NamedFunction mermin_collins(int n_parties);
NamedFunction svetlichny_collins(int n_parties);

/// Lookup by CLI name: chsh, mermin, svetlichny1, svetlichny2, ardehali,
/// mermin-collins, svetlichny-collins. Throws UnsupportedParameter.
NamedFunction named_function(const std::string& name, int n_parties);

/// Exchange the A and B measurements of every site.
Evaluator exchange_measurements(Evaluator f);

struct Reduction {
  Rational nu;
  BellScenario gbf;
  double scale;             // fitted pointwise, an exact power of sqrt(2)
  int scale_log_sqrt2;      // scale = 2^{scale_log_sqrt2 / 2}
  int table_log_sqrt2;      // the tabulated scale exponent
  bool matches_table;
  bool verified;            // pointwise over all assignments
  double max_deviation;
};

/// Reduce a named function to (nu, scale) and verify the identity
/// named(a) = scale * product_form(a) over every assignment (N <= 10).
/// Throws VerificationFailure with the first counterexample on mismatch.
Reduction reduce_to_gbf(const std::string& name, int n_parties, bool verify = true);

double quantum_reference_chsh();                       // 2 sqrt(2)
double quantum_reference(const BellScenario& s);       // d - 1

/// The 4x4 operator 2 sqrt(2) (s+ x s- + s- x s+) whose largest eigenvalue
/// is the CHSH quantum maximum.
Eigen::Matrix4cd chsh_operator();
double chsh_operator_max_eigenvalue();

}  // namespace bell
