#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cartan/verify.hpp"

namespace cartan::verify {

namespace {


/// Empty when the equation holds, else the rendered difference.
std::optional<std::string> compare(const Equation& eq) {
  const Form diff = to_coordinate(eq.lhs) - to_coordinate(eq.rhs);
  if (diff.is_zero()) return std::nullopt;
  return to_string(diff);
}

}  // namespace

bool Report::passed() const {
  for (const auto& r : results)
    if (r.failures != 0) return false;
  return true;
}

std::size_t Report::distinct_checks() const {
  std::vector<std::string> ids;
  for (const auto& r : results)
    if (std::find(ids.begin(), ids.end(), r.check_id) == ids.end()) ids.push_back(r.check_id);
  return ids.size();
}

CheckResult run_check(const IdentityCheck& check, const Fixture& fixture, const RunOptions& options) {
  CheckResult result;
  result.check_id = check.id;
  result.anchor = check.anchor;
  result.fixture = fixture.name;
  result.criterion = check.criterion;
  if (check.needs_killing && fixture.killing_vectors.empty()) return result;

  const auto start = std::chrono::steady_clock::now();
  const int trials = options.trials.value_or(check.default_trials);
  bool witnessed = false;
  for (int k = 0; k < trials; ++k) {
    Sampler sampler(options.spec, check.id, fixture.name, static_cast<std::uint64_t>(k));
    Trial trial(fixture, sampler);
    ++result.trials;
    std::optional<Counterexample> failure;
    try {
      const std::vector<Equation> eqs = check.build(trial);
      for (const auto& eq : eqs) {
        const auto diff = compare(eq);
        if (!diff) continue;
        failure = Counterexample{static_cast<std::uint64_t>(k), eq.label, trial.inputs(), to_string(eq.lhs),
                                 to_string(eq.rhs), *diff};
        break;
      }
    } catch (const std::exception& e) {
      failure = Counterexample{static_cast<std::uint64_t>(k), "(evaluation)", trial.inputs(), "", "",
                               std::string("error: ") + e.what()};
    }
    witnessed = witnessed || trial.witnessed();
    if (failure) {
      ++result.failures;
      if (!result.counterexample) result.counterexample = std::move(failure);
      if (options.stop_at_first_failure) break;
    }
  }
  if (check.needs_anholonomy_witness && !fixture.geometry->holonomic() && !witnessed && result.trials > 0) {
    ++result.failures;
    if (!result.counterexample)
      result.counterexample = Counterexample{0, "(witness)", {}, "", "", "no trial exercised a nonzero anholonomy term"};
  }
  result.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

Report run_suite(const std::vector<const IdentityCheck*>& checks, const std::vector<Fixture>& fixtures,
                 const RunOptions& options) {
  Report report;
  report.seed = options.spec.seed;
  for (const auto& f : fixtures) report.fixtures.push_back(f.name);
  for (const auto* c : checks)
    for (const auto& f : fixtures) report.results.push_back(run_check(*c, f, options));
  return report;
}

Report run_suite(const std::string& filter, const std::vector<Fixture>& fixtures, const RunOptions& options) {
  std::vector<const IdentityCheck*> selected;
  for (const auto& c : registry())
    if (glob_match(filter.empty() ? "*" : filter, c.id)) selected.push_back(&c);
  if (selected.empty()) throw std::invalid_argument("no checks selected");
  return run_suite(selected, fixtures, options);
}

std::string report_json(const Report& report, bool include_timing) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["seed"] = report.seed;
  doc["fixtures"] = report.fixtures;
  doc["passed"] = report.passed();
  ordered_json results = ordered_json::array();
  for (const auto& r : report.results) {
    ordered_json j;
    j["check_id"] = r.check_id;
    j["anchor"] = r.anchor;
    j["fixture"] = r.fixture;
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    if (r.counterexample) {
      const auto& c = *r.counterexample;
      ordered_json inputs = ordered_json::object();
      for (const auto& [k, v] : c.inputs) inputs[k] = v;
      j["counterexample"] = {{"trial", c.trial}, {"equation", c.equation}, {"inputs", inputs},
                             {"lhs", c.lhs},     {"rhs", c.rhs},           {"difference", c.difference}};
    }
    if (include_timing) j["millis"] = r.millis;
    results.push_back(std::move(j));
  }
  doc["results"] = std::move(results);
  return doc.dump(2) + "\n";
}

std::string report_text(const Report& report, bool include_timing) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : report.results) {
    const bool skipped = r.trials == 0;
    os << (skipped ? "SKIP" : r.failures == 0 ? "PASS" : "FAIL") << "  " << r.check_id << " [" << r.fixture << "] "
       << r.failures << "/" << r.trials;
    if (include_timing) os << "  " << static_cast<long long>(r.millis) << " ms";
    os << "\n";
    if (r.failures != 0) ++failed;
    if (r.counterexample) {
      const auto& c = *r.counterexample;
      os << "    trial " << c.trial << ", " << c.equation << "\n";
      for (const auto& [k, v] : c.inputs) os << "      " << k << " = " << v << "\n";
      if (!c.lhs.empty()) os << "      lhs = " << c.lhs << "\n      rhs = " << c.rhs << "\n";
      os << "      lhs - rhs = " << c.difference << "\n";
    }
  }
  os << "seed " << report.seed << ": " << report.results.size() - failed << "/" << report.results.size()
     << " check runs passed across " << report.distinct_checks() << " checks\n";
  return os.str();
}

}  // namespace cartan::verify
