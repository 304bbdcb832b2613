// cartan: evaluate form expressions and run the identity suite.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cartan/dsl.hpp"
#include "cartan/fixture.hpp"
#include "cartan/verify.hpp"

namespace {

using namespace cartan;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailures = 2;

struct EvalArgs {
  std::string fixture = "euclid3";
  std::vector<std::string> lets;
  std::string let_file;
  std::string expression;
};

struct CheckArgs {
  std::vector<std::string> fixtures;
  std::string filter = "*";
  std::uint64_t seed = 42;
  std::optional<int> trials;
  int max_degree = 2;
  std::string report = "text";
  std::string out;
  bool no_timing = false;
  bool stop_at_first_failure = false;
};

int run_eval(const EvalArgs& args) {
  const Fixture fixture = load_fixture(args.fixture);
  dsl::Environment env(fixture.geometry);
  if (!args.let_file.empty()) {
    std::ifstream in(args.let_file);
    if (!in) throw std::runtime_error("cannot read " + args.let_file);
    const auto doc = nlohmann::ordered_json::parse(in);
    if (!doc.is_object()) throw std::runtime_error(args.let_file + ": expected an object of name -> expression");
    for (const auto& [name, value] : doc.items()) {
      if (!value.is_string()) throw std::runtime_error(args.let_file + ": binding '" + name + "' is not a string");
      env.bind_source(name, value.get<std::string>());
    }
  }
  for (const auto& let : args.lets) {
    const auto eq = let.find('=');
    if (eq == std::string::npos) throw std::runtime_error("--let expects name=expr, got '" + let + "'");
    env.bind_source(let.substr(0, eq), let.substr(eq + 1));
  }
  std::cout << dsl::render(dsl::evaluate(args.expression, env)) << "\n";
  return kOk;
}

int run_check(const CheckArgs& args) {
  std::vector<Fixture> fixtures;
  for (const auto& name : args.fixtures.empty() ? builtin_fixture_names() : args.fixtures)
    fixtures.push_back(load_fixture(name));
  verify::RunOptions options;
  options.spec.seed = args.seed;
  options.spec.max_degree = args.max_degree;
  options.trials = args.trials;
  options.stop_at_first_failure = args.stop_at_first_failure;
  const verify::Report report = verify::run_suite(args.filter, fixtures, options);
  const std::string body = args.report == "json" ? verify::report_json(report, !args.no_timing)
                                                 : verify::report_text(report, !args.no_timing);
  if (args.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(args.out);
    if (!out || !(out << body)) throw std::runtime_error("cannot write " + args.out);
  }
  return report.passed() ? kOk : kFailures;
}

int list_fixtures() {
  for (const auto& name : builtin_fixture_names()) {
    const Fixture f = load_fixture(name);
    std::string coords;
    for (const auto& c : f.geometry->coords()) coords += (coords.empty() ? "" : ",") + c;
    std::cout << f.name << "  dim " << f.geometry->dim() << "  (" << coords << ")  sgn " << f.geometry->signature_sign()
              << "  killing " << f.killing_vectors.size() << (f.geometry->holonomic() ? "" : "  anholonomic") << "\n";
  }
  return kOk;
}

int list_identities() {
  for (const auto& c : verify::registry())
    std::cout << c.id << "  [" << (c.criterion ? std::to_string(c.criterion) : "-") << "]  " << c.anchor << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact exterior calculus: form expressions and identity checks"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a form expression on a fixture");
  eval->add_option("--fixture", eval_args.fixture, "Fixture name or JSON path")->capture_default_str();
  eval->add_option("--let", eval_args.lets, "Binding name=expr, evaluated in order");
  eval->add_option("--let-file", eval_args.let_file, "JSON object of name -> expression");
  eval->add_option("expression", eval_args.expression, "Expression")->required();

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Run identity checks");
  check->add_option("--fixture", check_args.fixtures, "Fixture name or JSON path (repeatable; default all)");
  check->add_option("--filter", check_args.filter, "Check id glob")->capture_default_str();
  check->add_option("--seed", check_args.seed, "Sample seed")->capture_default_str();
  check->add_option("--trials", check_args.trials, "Trials per check and fixture (default per check)")
      ->check(CLI::PositiveNumber);
  check->add_option("--max-degree", check_args.max_degree, "Polynomial degree of random coefficients")
      ->check(CLI::Range(0, 8))
      ->capture_default_str();
  check->add_option("--report", check_args.report, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  check->add_option("--out", check_args.out, "Write the report to a file");
  check->add_flag("--no-timing", check_args.no_timing, "Omit timings so reports are byte-identical");
  check->add_flag("--stop-at-first-failure", check_args.stop_at_first_failure, "Stop a check at its first failure");

  auto* fixtures = app.add_subcommand("fixtures", "Fixture catalog");
  auto* fixtures_list = fixtures->add_subcommand("list", "List built-in fixtures");
  fixtures->require_subcommand(1);
  auto* identities = app.add_subcommand("identities", "Identity catalog");
  auto* identities_list = identities->add_subcommand("list", "List registered checks");
  identities->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval) return run_eval(eval_args);
    if (*check) return run_check(check_args);
    if (*fixtures_list) return list_fixtures();
    if (*identities_list) return list_identities();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
