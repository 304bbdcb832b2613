#ifndef CARTAN_VERIFY_HPP
#define CARTAN_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cartan/brackets.hpp"
#include "cartan/fixture.hpp"

namespace cartan::verify {

/// Parameters of the random sample stream.
struct GenSpec {
  std::uint64_t seed = 42;
  int max_degree = 2;   // total degree of each polynomial coefficient
  int max_terms = 3;    // terms per polynomial coefficient
  int coeff_bound = 5;  // coefficients p/q with 1 <= |p|, q <= bound
};

/// Deterministic sample stream keyed by (seed, check id, fixture, trial).
class Sampler {
 public:
  Sampler(const GenSpec& spec, std::uint64_t key);
  Sampler(const GenSpec& spec, const std::string& check_id, const std::string& fixture, std::uint64_t trial);

  const GenSpec& spec() const { return spec_; }
  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }
  Rational coefficient();
  Poly poly(std::size_t nvars);

 private:
  GenSpec spec_;
  std::mt19937_64 engine_;
};

/// A random p-form in the coordinate basis with sparse polynomial
/// components; FormError unless 0 <= degree <= n.
Form gen_form(Sampler& sampler, const GeometryPtr& geometry, int degree);
RationalFn gen_scalar(Sampler& sampler, const GeometryPtr& geometry);
VectorField gen_vector(Sampler& sampler, const GeometryPtr& geometry);

/// Inputs for one trial of one check on one fixture.  Every draw is recorded
/// by name so a failure can be reported with the inputs that produced it.
class Trial {
 public:
  Trial(const Fixture& fixture, Sampler& sampler);

  const Fixture& fixture() const { return fixture_; }
  const GeometryPtr& geometry() const { return fixture_.geometry; }
  int dim() const { return static_cast<int>(fixture_.geometry->dim()); }
  Sampler& sampler() { return sampler_; }

  /// Degree drawn uniformly from [lo, hi] clipped to [0, n].
  int degree(int lo, int hi);
  Form form(const std::string& name, int degree);
  RationalFn scalar(const std::string& name);
  Form one_form(const std::string& name) { return form(name, 1); }
  VectorField vector(const std::string& name);
  /// Random constant combination of the fixture's declared Killing vectors.
  VectorField killing(const std::string& name);

  /// Marks that a run exercised a term that must be seen at least once.
  void witness() { witnessed_ = true; }
  bool witnessed() const { return witnessed_; }

  const std::vector<std::pair<std::string, std::string>>& inputs() const { return inputs_; }

 private:
  const Fixture& fixture_;
  Sampler& sampler_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  bool witnessed_ = false;
};

/// One side-by-side comparison; a check passes a trial when every equation
/// has lhs - rhs exactly zero.
struct Equation {
  std::string label;
  Form lhs;
  Form rhs;
};

using Builder = std::function<std::vector<Equation>(Trial&)>;

struct IdentityCheck {
  std::string id;
  std::string anchor;          // the identity, written as a formula
  int criterion = 0;           // acceptance group, 0 for supplementary checks
  int default_trials = 100;
  bool needs_killing = false;  // skipped on fixtures without Killing vectors
  bool needs_anholonomy_witness = false;  // on anholonomic fixtures
  Builder build;
};

/// The full catalog, in a fixed order.
const std::vector<IdentityCheck>& registry();
const IdentityCheck* find_check(const std::string& id);

/// Glob with '*' and '?'.
bool glob_match(const std::string& pattern, const std::string& text);

struct Counterexample {
  std::uint64_t trial = 0;
  std::string equation;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string lhs;
  std::string rhs;
  std::string difference;  // or the error message when evaluation threw
};

struct CheckResult {
  std::string check_id;
  std::string anchor;
  std::string fixture;
  int criterion = 0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::optional<Counterexample> counterexample;
  double millis = 0;
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<std::string> fixtures;
  std::vector<CheckResult> results;
  bool passed() const;
  std::size_t distinct_checks() const;
};

struct RunOptions {
  GenSpec spec;
  std::optional<int> trials;  // overrides each check's default
  bool stop_at_first_failure = false;
};

/// Runs one check on one fixture.
CheckResult run_check(const IdentityCheck& check, const Fixture& fixture, const RunOptions& options);

/// Runs every registered check matching the glob on every fixture.
/// Throws std::invalid_argument when nothing matches.
Report run_suite(const std::string& filter, const std::vector<Fixture>& fixtures, const RunOptions& options);
Report run_suite(const std::vector<const IdentityCheck*>& checks, const std::vector<Fixture>& fixtures,
                 const RunOptions& options);

std::string report_json(const Report& report, bool include_timing = true);
std::string report_text(const Report& report, bool include_timing = true);

}  // namespace cartan::verify

#endif  // CARTAN_VERIFY_HPP
