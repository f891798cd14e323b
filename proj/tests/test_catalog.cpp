#include "bellbound/catalog.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"

#include "bellbound/errors.hpp"
#include "bellbound/representations.hpp"
#include "test_util.hpp"

using namespace bell;

namespace {

double pm(int r) { return r % 2 == 0 ? 1.0 : -1.0; }

// Printed sign-vector expressions of the named functions, used as the
// cross-check for the functional evaluators (compared up to overall scale).
double sign_form_value(const std::string& name, int n, const Assignment& a) {
  const Eigen::VectorXd corr = correlation_vector(a);
  const auto dot = [&](long long c) {
    double sum = 0.0;
    const SignVector sv = sign_vector(c);
    for (int g = 0; g <= n; ++g) sum += sv.sign(g) * corr(g);
    return sum;
  };
  if (name == "mermin") return dot(-2);
  if (name == "svetlichny1") return dot(-1);
  if (name == "svetlichny2") return dot(1);
  if (name == "ardehali") return std::numbers::sqrt2 * dot(4);
  if (name == "mermin-collins") return std::exp2(-n / 2.0) * dot(1 - n);
  if (name == "svetlichny-collins")
    return n % 2 == 0 ? std::exp2(-n / 2.0) * dot(1 - n)
                      : std::exp2(-(n + 1) / 2.0) * dot(-n);
  throw std::logic_error("no sign form for " + name);
}

SearchResult local_bound(const NamedFunction& f) {
  const BellScenario s(f.n_parties, 2, Rational(0, 1));
  return brute_force_max(s, f.eval);
}

}  // namespace

TEST_CASE("mermin N=2 expands to A1B2 + B1A2") {
  const NamedFunction m2 = mermin(2);
  for (std::uint64_t idx = 0; idx < 16; ++idx) {
    const Assignment a = index_to_assignment(idx, 2, 2);
    const double expected =
        pm(a.alpha[0]) * pm(a.beta[1]) + pm(a.beta[0]) * pm(a.alpha[1]);
    CHECK_NEAR(m2.eval(a), expected, 1e-12);
  }
}

TEST_CASE("svetlichny variants at the all-zero assignment") {
  const Assignment zero{{0, 0, 0}, {0, 0, 0}};
  CHECK_NEAR(svetlichny3(1).eval(zero), 0.0, 0.0);  // 1 + 3 - 3 - 1
  CHECK_NEAR(svetlichny3(2).eval(zero), -4.0, 0.0);
  CHECK_THROWS_AS(svetlichny3(3), UnsupportedParameter);
}

TEST_CASE("mermin-collins initial condition and chsh link") {
  const NamedFunction mc1 = mermin_collins(1);
  CHECK_NEAR(mc1.eval(Assignment{{0}, {1}}), 1.0, 0.0);
  CHECK_NEAR(mc1.eval(Assignment{{1}, {0}}), -1.0, 0.0);

  // MC_2 is half the CHSH combination
  const NamedFunction mc2 = mermin_collins(2);
  const NamedFunction c = chsh();
  for (std::uint64_t idx = 0; idx < 16; ++idx) {
    const Assignment a = index_to_assignment(idx, 2, 2);
    CHECK_NEAR(mc2.eval(a), 0.5 * c.eval(a), 1e-12);
  }
}

TEST_CASE("ardehali N=2 expands to sqrt2 (B1B2 - A1A2)") {
  const NamedFunction a2 = ardehali(2);
  for (std::uint64_t idx = 0; idx < 16; ++idx) {
    const Assignment a = index_to_assignment(idx, 2, 2);
    const double expected = std::numbers::sqrt2 * (pm(a.beta[0]) * pm(a.beta[1]) -
                                                   pm(a.alpha[0]) * pm(a.alpha[1]));
    CHECK_NEAR(a2.eval(a), expected, 1e-12);
  }
}

TEST_CASE("measurement exchange is an involution") {
  for (const NamedFunction& f :
       {mermin(3), ardehali(3), mermin_collins(4), svetlichny_collins(5)}) {
    const Evaluator twice = exchange_measurements(exchange_measurements(f.eval));
    std::mt19937_64 rng(47);
    for (int it = 0; it < 50; ++it) {
      const Assignment a = testutil::random_assignment(f.n_parties, 2, rng);
      CHECK_NEAR(twice(a), f.eval(a), 0.0);
    }
  }
}

TEST_CASE("table reductions verify pointwise") {
  struct Case {
    std::string name;
    int n;
    Rational nu;
    int log_sqrt2;
  };
  std::vector<Case> cases = {{"chsh", 2, Rational(-1, 4), 3},
                             {"svetlichny1", 3, Rational(-1, 4), 5},
                             {"svetlichny2", 3, Rational(1, 4), 5}};
  for (int n = 1; n <= 6; ++n)
    cases.push_back({"mermin", n, Rational(-1, 2), 2 * (n - 1)});
  for (int n = 2; n <= 6; ++n)
    cases.push_back({"ardehali", n, Rational(1, 1), 2 * n - 1});
  for (int n = 1; n <= 6; ++n)
    cases.push_back({"mermin-collins", n, Rational(1 - n, 4), n - 1});
  for (int n = 2; n <= 6; ++n)
    cases.push_back({"svetlichny-collins", n,
                     n % 2 == 0 ? Rational(1 - n, 4) : Rational(-n, 4),
                     n % 2 == 0 ? n - 1 : n - 2});

  for (const Case& c : cases) {
    CAPTURE(c.name);
    CAPTURE(c.n);
    const Reduction red = reduce_to_gbf(c.name, c.n);
    CHECK(red.verified);
    CHECK(red.nu == c.nu);
    CHECK(red.scale_log_sqrt2 == c.log_sqrt2);
    CHECK(red.matches_table);
    CHECK(red.max_deviation < 1e-9);
  }

  CHECK_THROWS_AS(reduce_to_gbf("nosuch", 3), UnsupportedParameter);
}

TEST_CASE("sign forms match the functional forms up to a sqrt2 power") {
  const std::vector<std::pair<std::string, int>> cases = {
      {"mermin", 2},         {"mermin", 3},          {"mermin", 5},
      {"svetlichny1", 3},    {"svetlichny2", 3},     {"ardehali", 2},
      {"ardehali", 4},       {"mermin-collins", 2},  {"mermin-collins", 3},
      {"mermin-collins", 5}, {"svetlichny-collins", 4}, {"svetlichny-collins", 5}};
  for (const auto& [name, n] : cases) {
    CAPTURE(name);
    CAPTURE(n);
    const NamedFunction f = named_function(name, n);
    // normalize both sides on the first assignment where both are nonzero
    double ratio = 0.0;
    bool flagged = true;
    const std::uint64_t total = 1ULL << (2 * n);
    for (std::uint64_t idx = 0; idx < total && flagged; ++idx) {
      const Assignment a = index_to_assignment(idx, n, 2);
      const double direct = f.eval(a);
      const double via_signs = sign_form_value(name, n, a);
      if (std::abs(direct) > 1e-9 && std::abs(via_signs) > 1e-9) {
        ratio = direct / via_signs;
        flagged = false;
      }
    }
    REQUIRE_FALSE(flagged);
    // the normalizations drift by at most a power of sqrt2 between conventions
    const double log2r = 2.0 * std::log2(std::abs(ratio));
    CHECK_NEAR(log2r, std::round(log2r), 1e-9);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const Assignment a = index_to_assignment(idx, n, 2);
      CHECK_NEAR(f.eval(a), ratio * sign_form_value(name, n, a), 1e-9);
    }
  }
}

TEST_CASE("local bounds of the named functions") {
  // Svetlichny-Collins comes out at exactly 1 for every parity.
  for (int n : {3, 4, 5})
    CHECK_NEAR(local_bound(svetlichny_collins(n)).max_value, 1.0, 1e-9);

  // The three-party Svetlichny sums reach the classic value 4.
  CHECK_NEAR(local_bound(svetlichny3(1)).max_value, 4.0, 1e-9);
  CHECK_NEAR(local_bound(svetlichny3(2)).max_value, 4.0, 1e-9);

  // chsh reaches 2.
  CHECK_NEAR(local_bound(chsh()).max_value, 2.0, 1e-9);
}

TEST_CASE("quantum references") {
  CHECK_NEAR(quantum_reference_chsh(), 2.0 * std::numbers::sqrt2, 0.0);
  CHECK_NEAR(chsh_operator_max_eigenvalue(), 2.0 * std::numbers::sqrt2, 1e-12);
  CHECK_NEAR(quantum_reference(BellScenario(4, 3, Rational(1, 4))), 2.0, 0.0);
  CHECK_NEAR(quantum_reference(BellScenario(2, 7, Rational(1, 4))), 6.0, 0.0);

  // the operator is 2 sqrt2 (|01><10| + |10><01|)
  const Eigen::Matrix4cd op = chsh_operator();
  CHECK_NEAR(std::abs(op(1, 2) - std::complex<double>(2 * std::numbers::sqrt2, 0)),
             0.0, 1e-12);
  CHECK_NEAR(std::abs(op(2, 1) - std::complex<double>(2 * std::numbers::sqrt2, 0)),
             0.0, 1e-12);
  CHECK_NEAR(op.cwiseAbs().sum(), 4 * std::numbers::sqrt2, 1e-12);
}

TEST_CASE("name lookup guards") {
  CHECK_THROWS_AS(named_function("chsh", 3), UnsupportedParameter);
  CHECK_THROWS_AS(named_function("svetlichny1", 4), UnsupportedParameter);
  CHECK_THROWS_AS(named_function("unknown", 3), UnsupportedParameter);
  CHECK_THROWS_AS(ardehali(1), UnsupportedParameter);
  CHECK_THROWS_AS(svetlichny_collins(1), UnsupportedParameter);
}
