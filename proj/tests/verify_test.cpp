#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cartan/verify.hpp"

using namespace cartan;
using namespace cartan::verify;

namespace {

std::vector<Fixture> fixtures(std::initializer_list<const char*> names) {
  std::vector<Fixture> out;
  for (const char* n : names) out.push_back(load_fixture(n));
  return out;
}

RunOptions trials(int k) {
  RunOptions o;
  o.trials = k;
  return o;
}

}  // namespace

TEST(Generators, DeterministicFromSeed) {
  const Fixture f = load_fixture("conf3");
  GenSpec spec;
  Sampler a(spec, "some_check", "conf3", 7), b(spec, "some_check", "conf3", 7);
  for (int deg = 0; deg <= 3; ++deg) EXPECT_EQ(gen_form(a, f.geometry, deg), gen_form(b, f.geometry, deg));
  EXPECT_EQ(gen_vector(a, f.geometry), gen_vector(b, f.geometry));

  Sampler c(spec, "some_check", "conf3", 8);
  Sampler d(spec, "some_check", "conf3", 7);
  bool differs = false;
  for (int k = 0; k < 4; ++k) differs |= !(gen_form(c, f.geometry, 2) == gen_form(d, f.geometry, 2));
  EXPECT_TRUE(differs);
}

TEST(Generators, DegreeBounds) {
  const Fixture f = load_fixture("euclid3");
  Sampler s(GenSpec{}, 1);
  EXPECT_THROW(gen_form(s, f.geometry, 4), FormError);
  EXPECT_THROW(gen_form(s, f.geometry, -1), FormError);
  const Form scalar = gen_form(s, f.geometry, 0);
  EXPECT_EQ(scalar.degree(), 0);
  EXPECT_FALSE(scalar.is_zero());
}

TEST(Generators, CoefficientsWithinBounds) {
  GenSpec spec;
  spec.max_degree = 1;
  spec.coeff_bound = 2;
  Sampler s(spec, 99);
  for (int k = 0; k < 200; ++k) {
    const Poly p = s.poly(3);
    EXPECT_LE(p.total_degree(), 1u);
    EXPECT_LE(p.size(), 3u);
    // Up to three terms p/q with 1 <= |p|, q <= 2 may combine.
    for (const auto& t : p.terms()) {
      EXPECT_LE(abs(t.coeff), 6);
      EXPECT_TRUE(t.coeff.get_den() == 1 || t.coeff.get_den() == 2);
    }
  }
}

TEST(Glob, Matching) {
  EXPECT_TRUE(glob_match("eq2*", "eq20_delta_wedge"));
  EXPECT_FALSE(glob_match("eq2*", "eq13_components_frame"));
  EXPECT_TRUE(glob_match("*", ""));
  EXPECT_TRUE(glob_match("eq?0_*", "eq40_interior_of_bracket"));
  EXPECT_FALSE(glob_match("eq?0_*", "eq41_oneform_on_bracket"));
  EXPECT_TRUE(glob_match("kernel_dd_zero", "kernel_dd_zero"));
}

TEST(Registry, Audit) {
  const std::set<std::string> expected{
      "kernel_dd_zero", "kernel_codiff_nilpotent", "kernel_star_star_sign", "kernel_star_one_volume",
      "kernel_star_volume_sign", "kernel_flat_sharp_identity",
      "eq13_components_coordinate", "eq13_components_frame", "eq23_nabla_representation", "eq08_one_form_definition",
      "eq05_graded_antisymmetry", "eq06_right_leibniz", "eq16_left_expansion", "eq14_graded_jacobi",
      "eq07_scalar_bracket_zero", "eq17_scalar_oneform_chain", "eq18_scalar_form", "eq06_gtilde_decomposition",
      "eq20_delta_wedge", "eq20_base_scalar", "eq20_base_oneform", "eq22_delta_bracket", "eq24_box_wedge",
      "eq25_box_scalar_scalar", "eq26_box_scalar_oneform", "eq27_box_scalar_form", "eq28_box_oneform_oneform",
      "eq19_hodge_lie_wedge", "eq19b_hodge_lie_unit", "eq19c_star_lie_star", "eq19d_strip",
      "eq03_springboard", "eq29_degree1", "eq29_equal_degree_inner", "eq29_degree_cutoff", "eq29_components",
      "eq30_scalar_interior", "eq31_volume_interior", "eq32_star_interior", "eq33_interior_star",
      "eq34_interior_composition", "eq35_interior_star_swap", "eq36_star_interior_swap", "eq37_star_star_interior",
      "eq38_interior_exterior_commutator", "eq39_oneform_exterior_commutator",
      "eq40_interior_of_bracket", "eq41_oneform_on_bracket", "eq42_exact_on_bracket", "eq43_scalar_bracket_insertion",
      "eq44_oneform_bracket_insertion", "eq45_d_j", "eq46_delta_j", "eq47_lie_j", "eq48_box_j", "eq49_i_d",
      "eq50_i_lie", "eq51_i_delta", "eq52_i_box",
      "eq06_killing_collapse", "eq53_lie_delta", "eq54_killing", "eq69_lie_delta_theta", "eq70_killing",
      "eq62_theta_scalar", "eq63_theta_oneform", "eq64_theta_wedge", "eq65_theta_d", "eq66_theta_insertion",
      "eq67_theta_bracket", "eq68_parity_split"};
  std::set<std::string> present;
  for (const auto& c : registry()) {
    EXPECT_TRUE(present.insert(c.id).second) << "duplicate " << c.id;
    EXPECT_FALSE(c.anchor.empty()) << c.id;
    EXPECT_TRUE(c.build) << c.id;
  }
  for (const auto& id : expected) EXPECT_TRUE(present.count(id)) << "missing " << id;
  EXPECT_GE(present.size(), 45u);
  for (int criterion = 1; criterion <= 9; ++criterion) {
    int n = 0;
    for (const auto& c : registry()) n += c.criterion == criterion;
    EXPECT_GT(n, 0) << "criterion " << criterion;
  }
}

TEST(Runner, LeibnizOfDHolds) {
  const CheckResult r = run_check(*find_check("eq45_d_j"), load_fixture("euclid3"), trials(100));
  EXPECT_EQ(r.trials, 100u);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_FALSE(r.counterexample);
}

TEST(Runner, FrameRouteOnConformalFixture) {
  const CheckResult r = run_check(*find_check("eq13_components_frame"), load_fixture("conf3"), trials(20));
  EXPECT_EQ(r.failures, 0u);
}

TEST(Runner, SignFlipIsCaught) {
  IdentityCheck corrupted = *find_check("eq20_delta_wedge");
  corrupted.id = "corrupted";
  const Builder original = corrupted.build;
  corrupted.build = [original](Trial& t) {
    std::vector<Equation> eqs = original(t);
    for (auto& eq : eqs) eq.rhs = -eq.rhs;
    return eqs;
  };
  const CheckResult r = run_check(corrupted, load_fixture("euclid3"), trials(10));
  EXPECT_GT(r.failures, 0u);
  ASSERT_TRUE(r.counterexample);
  EXPECT_FALSE(r.counterexample->inputs.empty());
  EXPECT_NE(r.counterexample->difference, "0");
}

TEST(Runner, BuilderErrorsAreFailures) {
  IdentityCheck bad{"bad", "a = a", 0, 5, false, false, [](Trial& t) {
                      const Form a = t.form("a", 3);
                      return std::vector<Equation>{{"reflexive", a, a}};
                    }};
  const CheckResult r = run_check(bad, load_fixture("euclid2"), trials(5));
  EXPECT_EQ(r.failures, 5u);
  ASSERT_TRUE(r.counterexample);
  EXPECT_NE(r.counterexample->difference.find("error"), std::string::npos);
}

TEST(Runner, MissingWitnessFails) {
  IdentityCheck check{"unwitnessed", "a = a", 0, 3, false, true, [](Trial& t) {
                        const Form a = t.form("a", 1);
                        return std::vector<Equation>{{"reflexive", a, a}};
                      }};
  EXPECT_EQ(run_check(check, load_fixture("conf3"), trials(3)).failures, 1u);
  EXPECT_EQ(run_check(check, load_fixture("euclid3"), trials(3)).failures, 0u);
}

TEST(Runner, KillingChecksSkipFixturesWithoutKillingVectors) {
  Fixture f = load_fixture("euclid3");
  f.killing_vectors.clear();
  const CheckResult r = run_check(*find_check("eq54_killing"), f, trials(3));
  EXPECT_EQ(r.trials, 0u);
  EXPECT_EQ(r.failures, 0u);
}

TEST(Suite, FilterSelection) {
  const Report r = run_suite("eq2*", fixtures({"euclid2"}), trials(2));
  EXPECT_FALSE(r.results.empty());
  for (const auto& res : r.results) EXPECT_EQ(res.check_id.substr(0, 3), "eq2");
  EXPECT_TRUE(r.passed());
}

TEST(Suite, EmptySelectionIsAnError) {
  try {
    run_suite("nosuch*", fixtures({"euclid2"}), trials(1));
    FAIL() << "expected an error";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "no checks selected");
  }
}

TEST(Suite, ReportsAreByteIdentical) {
  const auto fx = fixtures({"euclid2", "conf3"});
  const std::string a = report_json(run_suite("eq1*", fx, trials(3)), false);
  const std::string b = report_json(run_suite("eq1*", fx, trials(3)), false);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("millis"), std::string::npos);
  EXPECT_NE(report_json(run_suite("eq1*", fx, trials(1)), true).find("millis"), std::string::npos);
}

TEST(Suite, SeedChangesSamples) {
  RunOptions a = trials(1), b = trials(1);
  b.spec.seed = 43;
  const auto fx = fixtures({"euclid3"});
  IdentityCheck failing{"always_fails", "a = 0", 0, 1, false, false, [](Trial& t) {
                          return std::vector<Equation>{{"nonzero", t.form("a", 2), Form(t.geometry(), 2)}};
                        }};
  const auto ra = run_suite(std::vector<const IdentityCheck*>{&failing}, fx, a);
  const auto rb = run_suite(std::vector<const IdentityCheck*>{&failing}, fx, b);
  ASSERT_TRUE(ra.results[0].counterexample && rb.results[0].counterexample);
  EXPECT_NE(ra.results[0].counterexample->lhs, rb.results[0].counterexample->lhs);
}
