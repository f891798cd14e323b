#include "bellbound/catalog.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <numbers>
#include <unsupported/Eigen/KroneckerProduct>
#include <utility>

#include "bellbound/errors.hpp"
#include "bellbound/representations.hpp"

namespace bell {

namespace {

double pm(int residue) { return (residue % 2 == 0) ? 1.0 : -1.0; }

// MC_N and its A<->B exchange in one pass:
//   MC_1 = A_1,  MC_j = (MC_{j-1}(A_j+B_j) + MC'_{j-1}(A_j-B_j)) / 2.
std::pair<double, double> mermin_collins_pair(const Assignment& a) {
  double m = pm(a.alpha[0]);
  double mp = pm(a.beta[0]);
  for (int j = 1; j < a.n_parties(); ++j) {
    const double aj = pm(a.alpha[j]);
    const double bj = pm(a.beta[j]);
    const double m_next = 0.5 * (m * (aj + bj) + mp * (aj - bj));
    const double mp_next = 0.5 * (mp * (bj + aj) + m * (bj - aj));
    m = m_next;
    mp = mp_next;
  }
  return {m, mp};
}

}  // namespace

NamedFunction chsh() {
  return {"chsh", 2, [](const Assignment& a) {
            const double a1 = pm(a.alpha[0]), a2 = pm(a.alpha[1]);
            const double b1 = pm(a.beta[0]), b2 = pm(a.beta[1]);
            return a1 * a2 + a1 * b2 + b1 * a2 - b1 * b2;
          }};
}

NamedFunction mermin(int n_parties) {
  if (n_parties < 1) throw UnsupportedParameter("mermin needs N >= 1");
  return {"mermin", n_parties, [](const Assignment& a) {
            // (1/2i)[prod(A+iB) - prod(A-iB)] = Im prod(A+iB)
            std::complex<double> prod = 1.0;
            for (int j = 0; j < a.n_parties(); ++j)
              prod *= std::complex<double>(pm(a.alpha[j]), pm(a.beta[j]));
            return prod.imag();
          }};
}

NamedFunction svetlichny3(int variant) {
  if (variant != 1 && variant != 2)
    throw UnsupportedParameter("svetlichny3 variant must be 1 or 2");
  const double s = (variant == 1) ? 1.0 : -1.0;
  return {variant == 1 ? "svetlichny1" : "svetlichny2", 3,
          [s](const Assignment& a) {
            const double a1 = pm(a.alpha[0]), a2 = pm(a.alpha[1]), a3 = pm(a.alpha[2]);
            const double b1 = pm(a.beta[0]), b2 = pm(a.beta[1]), b3 = pm(a.beta[2]);
            return a1 * a2 * a3 +
                   s * (b1 * a2 * a3 + a1 * b2 * a3 + a1 * a2 * b3) -
                   (b1 * b2 * a3 + b1 * a2 * b3 + a1 * b2 * b3) -
                   s * b1 * b2 * b3;
          }};
}

NamedFunction ardehali(int n_parties) {
  if (n_parties < 2) throw UnsupportedParameter("ardehali needs N >= 2");
  return {"ardehali", n_parties, [](const Assignment& a) {
            static constexpr std::array<int, 4> kSignA = {-1, 0, +1, 0};
            static constexpr std::array<int, 4> kSignB = {0, +1, 0, -1};
            const int n = a.n_parties();
            Assignment head{{a.alpha.begin(), a.alpha.end() - 1},
                            {a.beta.begin(), a.beta.end() - 1}};
            const Eigen::VectorXd corr = correlation_vector(head);
            double t1 = 0.0, t2 = 0.0;
            for (int gamma = 0; gamma < n; ++gamma) {
              t1 += kSignA[gamma % 4] * corr(gamma);
              t2 += kSignB[gamma % 4] * corr(gamma);
            }
            return std::numbers::sqrt2 *
                   (t1 * pm(a.alpha[n - 1]) + t2 * pm(a.beta[n - 1]));
          }};
}

NamedFunction mermin_collins(int n_parties) {
  if (n_parties < 1) throw UnsupportedParameter("mermin-collins needs N >= 1");
  return {"mermin-collins", n_parties,
          [](const Assignment& a) { return mermin_collins_pair(a).first; }};
}

NamedFunction svetlichny_collins(int n_parties) {
  if (n_parties < 2) throw UnsupportedParameter("svetlichny-collins needs N >= 2");
  const bool even = n_parties % 2 == 0;
  return {"svetlichny-collins", n_parties, [even](const Assignment& a) {
            const auto [m, mp] = mermin_collins_pair(a);
            return even ? m : 0.5 * (m + mp);
          }};
}

NamedFunction named_function(const std::string& name, int n_parties) {
  if (name == "chsh") {
    if (n_parties != 2) throw UnsupportedParameter("chsh is the N = 2 function");
    return chsh();
  }
  if (name == "mermin") return mermin(n_parties);
  if (name == "svetlichny1" || name == "svetlichny2") {
    if (n_parties != 3)
      throw UnsupportedParameter(name + " is defined for N = 3 only");
    return svetlichny3(name == "svetlichny1" ? 1 : 2);
  }
  if (name == "ardehali") return ardehali(n_parties);
  if (name == "mermin-collins") return mermin_collins(n_parties);
  if (name == "svetlichny-collins") return svetlichny_collins(n_parties);
  throw UnsupportedParameter("unknown function name: " + name);
}

Evaluator exchange_measurements(Evaluator f) {
  return [f = std::move(f)](const Assignment& a) {
    return f(Assignment{a.beta, a.alpha});
  };
}

namespace {

struct ReductionEntry {
  Rational nu;
  int table_log_sqrt2;
};

ReductionEntry reduction_entry(const std::string& name, int n) {
  if (name == "chsh") return {Rational(-1, 4), 3};
  if (name == "mermin") return {Rational(-1, 2), 2 * (n - 1)};
  if (name == "svetlichny1") return {Rational(-1, 4), 5};
  if (name == "svetlichny2") return {Rational(1, 4), 5};
  if (name == "ardehali") return {Rational(1, 1), 2 * n - 1};
  if (name == "mermin-collins") return {Rational(1 - n, 4), n - 1};
  if (name == "svetlichny-collins")
    return n % 2 == 0 ? ReductionEntry{Rational(1 - n, 4), n - 1}
                      : ReductionEntry{Rational(-n, 4), n - 2};
  throw UnsupportedParameter("unknown function name: " + name);
}

}  // namespace

Reduction reduce_to_gbf(const std::string& name, int n_parties, bool verify) {
  const NamedFunction f = named_function(name, n_parties);
  const ReductionEntry entry = reduction_entry(name, n_parties);
  const BellScenario gbf(n_parties, 2, entry.nu);
  const ProductEvaluator product(gbf);
  const std::uint64_t total = gbf.assignment_count();
  if (n_parties > 10)
    throw UnsupportedParameter("reduction verification is exhaustive; N <= 10");

  // The tabulated scale is not trusted: fit the ratio on the first assignment
  // where the product form is nonzero, then snap to a power of sqrt(2).
  double fitted = 0.0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Assignment a = index_to_assignment(idx, n_parties, 2);
    const double g = product(a);
    if (std::abs(g) > 1e-9) {
      fitted = f.eval(a) / g;
      break;
    }
  }
  if (!(fitted > 0.0))
    throw VerificationFailure(name + ": no positive scale ratio against nu = " +
                              entry.nu.str());
  const int log_sqrt2 = static_cast<int>(std::lround(2.0 * std::log2(fitted)));
  const double scale = std::exp2(log_sqrt2 / 2.0);
  if (std::abs(scale - fitted) > 1e-6 * fitted)
    throw VerificationFailure(name + ": scale ratio " + std::to_string(fitted) +
                              " is not a power of sqrt(2)");

  Reduction red{entry.nu,       gbf,   scale, log_sqrt2, entry.table_log_sqrt2,
                log_sqrt2 == entry.table_log_sqrt2, false, 0.0};
  if (!verify) return red;

  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Assignment a = index_to_assignment(idx, n_parties, 2);
    const double dev = std::abs(f.eval(a) - scale * product(a));
    red.max_deviation = std::max(red.max_deviation, dev);
    if (dev >= 1e-9)
      throw VerificationFailure(
          name + ": reduction mismatch " + std::to_string(dev) +
          " at assignment index " + std::to_string(idx));
  }
  red.verified = true;
  return red;
}

double quantum_reference_chsh() { return 2.0 * std::numbers::sqrt2; }

double quantum_reference(const BellScenario& s) {
  return static_cast<double>(s.n_outcomes - 1);
}

Eigen::Matrix4cd chsh_operator() {
  using namespace std::complex_literals;
  Eigen::Matrix2cd sx, sy;
  sx << 0, 1, 1, 0;
  sy << 0, -1i, 1i, 0;
  const Eigen::Matrix2cd sp = 0.5 * (sx + 1i * sy);
  const Eigen::Matrix2cd sm = 0.5 * (sx - 1i * sy);
  return 2.0 * std::numbers::sqrt2 *
         (Eigen::kroneckerProduct(sp, sm) + Eigen::kroneckerProduct(sm, sp));
}

double chsh_operator_max_eigenvalue() {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(chsh_operator());
  return solver.eigenvalues().maxCoeff();
}

}  // namespace bell
