// bellbound: local-realistic bounds of generic Bell functions.
//
// Subcommands:
//   bound    closed-form bound for nu = 1/4 plus trial bound and d-1 reference
//   brute    exhaustive search over all d^(2N) deterministic assignments
//   catalog  named (N,2) functions, their generic reductions and local bounds
//   ratio    CSV of (cot(pi/4d)-1)/(d-1) over a dimension range

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "bellbound/bounds.hpp"
#include "bellbound/catalog.hpp"
#include "bellbound/errors.hpp"
#include "bellbound/oracle.hpp"
#include "bellbound/report.hpp"

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
      .count();
}

int default_threads() {
  if (const char* env = std::getenv("BELLBOUND_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 0;  // oracle picks hardware concurrency
}

void emit(const bell::BoundReport& report, const std::string& format) {
  if (format == "json") {
    auto j = bell::to_json(report);
    if (report.closed_form && report.quantum_reference)
      j["trial_ratio"] = report.trial_bound / *report.quantum_reference;
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << bell::bound_report_csv(report);
  } else {
    std::cout << bell::bound_report_text(report);
  }
}

int run_bound(int n, int d, const std::string& nu_text, const std::string& format) {
  const auto start = Clock::now();
  const bell::Rational nu = bell::Rational::parse(nu_text);
  if (!(nu == bell::Rational(1, 4)))
    throw bell::UnsupportedParameter(
        "closed-form bounds are available for nu = 1/4; use `brute` for nu = " +
        nu.str());
  bell::BoundReport report{bell::BellScenario(n, d, nu)};
  report.closed_form = bell::closed_bound(n, d);
  report.trial_bound = bell::trial_bound(d);
  report.quantum_reference = bell::quantum_reference(report.scenario);
  report.witnesses.push_back(bell::witness_assignment(report.scenario));
  report.elapsed_ms = ms_since(start);
  emit(report, format);
  return 0;
}

int run_brute(int n, int d, const std::string& nu_text, double scale, int threads,
              std::size_t witness_cap, std::uint64_t budget,
              const std::string& format) {
  const auto start = Clock::now();
  const bell::BellScenario scenario(n, d, bell::Rational::parse(nu_text));
  const bell::ProductEvaluator product(scenario);
  bell::SearchOptions opts;
  opts.threads = threads;
  opts.witness_cap = witness_cap;
  opts.budget = budget;
  const bell::SearchResult result = bell::brute_force_max(
      scenario,
      [&](const bell::Assignment& a) { return scale * product(a); }, opts);

  bell::BoundReport report{scenario};
  report.brute_force = result.max_value;
  report.trial_bound = bell::trial_bound(d);
  report.witnesses = result.argmax;
  report.assignments_scanned = result.assignments_scanned;
  report.argmax_count = result.argmax_count;
  report.elapsed_ms = ms_since(start);
  emit(report, format);
  return 0;
}

int run_catalog(const std::string& name, int n, bool verify, int threads,
                const std::string& format) {
  const auto start = Clock::now();
  const bell::NamedFunction f = bell::named_function(name, n);
  const bell::Reduction red = bell::reduce_to_gbf(name, n, verify);

  bell::SearchOptions opts;
  opts.threads = threads;
  const bell::SearchResult local =
      bell::brute_force_max(red.gbf, f.eval, opts);

  if (format == "json") {
    nlohmann::json j;
    j["name"] = f.name;
    j["n"] = n;
    j["nu"] = red.nu.str();
    j["scale"] = red.scale;
    j["scale_log_sqrt2"] = red.scale_log_sqrt2;
    j["scale_matches_table"] = red.matches_table;
    j["verified"] = red.verified;
    j["local_bound"] = local.max_value;
    j["elapsed_ms"] = ms_since(start);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "name              = " << f.name << " (N=" << n << ")\n"
              << "nu                = " << red.nu.str() << "\n"
              << "scale             = " << bell::format_double(red.scale)
              << " (sqrt2^" << red.scale_log_sqrt2 << ")\n"
              << "verified          = " << (red.verified ? "yes" : "not checked")
              << "\n"
              << "local_bound       = " << bell::format_double(local.max_value)
              << "\n"
              << "elapsed_ms        = " << ms_since(start) << "\n";
  }
  return 0;
}

int run_ratio(int d_max, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  bell::write_ratio_csv(out, d_max);
  if (!out) throw std::runtime_error("write failed: " + path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local-realistic bounds of generic Bell functions"};
  app.require_subcommand(1);

  int n = 2, d = 2;
  std::string nu = "1/4";
  std::string format = "text";
  int threads = default_threads();
  std::size_t witness_cap = 64;
  std::uint64_t budget = 100'000'000ULL;
  double scale = 1.0;
  std::string name;
  bool verify = false;
  int d_max = 2;
  std::string out_path;

  auto* bound = app.add_subcommand("bound", "closed-form bound for nu = 1/4");
  bound->add_option("--n", n, "number of parties")->required();
  bound->add_option("--d", d, "number of outcomes")->required();
  bound->add_option("--nu", nu, "phase parameter (default 1/4)");
  bound->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));

  auto* brute = app.add_subcommand("brute", "exhaustive assignment search");
  brute->add_option("--n", n)->required();
  brute->add_option("--d", d)->required();
  brute->add_option("--nu", nu, "phase parameter, e.g. -1/4")->required();
  brute->add_option("--scale", scale, "multiply the function by this factor");
  brute->add_option("--threads", threads, "worker threads (env BELLBOUND_THREADS)");
  brute->add_option("--witnesses", witness_cap, "cap on reported witnesses");
  brute->add_option("--budget", budget, "max assignments to scan");
  brute->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* catalog = app.add_subcommand("catalog", "named (N,2) Bell functions");
  catalog->add_option("--name", name, "chsh|mermin|svetlichny1|svetlichny2|ardehali|"
                                      "mermin-collins|svetlichny-collins")
      ->required();
  catalog->add_option("--n", n, "number of parties");
  catalog->add_flag("--verify", verify, "verify the reduction pointwise");
  catalog->add_option("--threads", threads);
  catalog->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* ratio = app.add_subcommand("ratio", "trial bound to quantum reference CSV");
  ratio->add_option("--dmax", d_max, "largest dimension")->required()
      ->check(CLI::Range(2, 100'000'000));
  ratio->add_option("--out", out_path, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (bound->parsed()) return run_bound(n, d, nu, format);
    if (brute->parsed())
      return run_brute(n, d, nu, scale, threads, witness_cap, budget, format);
    if (catalog->parsed()) {
      if (name == "chsh" && !catalog->count("--n")) n = 2;
      if ((name == "svetlichny1" || name == "svetlichny2") && !catalog->count("--n"))
        n = 3;
      return run_catalog(name, n, verify, threads, format);
    }
    if (ratio->parsed()) return run_ratio(d_max, out_path);
  } catch (const bell::UnsupportedParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bell::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bell::VerificationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
