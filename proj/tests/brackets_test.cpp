#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cartan/brackets.hpp"
#include "cartan/fixture.hpp"
#include "cartan/ratfn_parse.hpp"

using namespace cartan;

namespace {

struct Space {
  explicit Space(const std::string& name) : g(load_fixture(name).geometry) {}
  RationalFn f(const std::string& s) const { return parse_ratfn(s, g->coords()); }
  Form scalar(const std::string& s) const { return Form::scalar(g, f(s)); }
  Form dx(std::size_t mu) const { return coordinate_differential(g, mu); }
  Form dx(std::size_t mu, std::size_t nu) const { return wedge(dx(mu), dx(nu)); }
  VectorField del(std::size_t mu) const { return coordinate_vector(g, mu); }
  GeometryPtr g;
};

Form conj_lie(const VectorField& v, const Form& a) { return star_inv(lie(v, star(a))); }

}  // namespace

TEST(Bracket, WorkedExamples) {
  const Space s("euclid2");
  EXPECT_EQ(sn_bracket(s.dx(1).scaled(s.f("x")), s.dx(0)), -s.dx(1));
  EXPECT_TRUE(sn_bracket(s.dx(0).scaled(s.f("x")), s.dx(1).scaled(s.f("y"))).is_zero());
  EXPECT_EQ(sn_bracket(s.scalar("x"), s.dx(0)), s.scalar("-1"));
  EXPECT_TRUE(sn_bracket(s.scalar("x"), s.scalar("y")).is_zero());
}

TEST(Bracket, OneFormDefinitionOnMinkowski) {
  const Space s("mink4");
  // sharp(x dt) = -x d_t, sharp(dx) = d_x; [-x d_t, d_x] = d_t, flat(d_t) = -dt.
  EXPECT_EQ(sn_bracket(s.dx(0).scaled(s.f("x")), s.dx(1)), -s.dx(0));
  EXPECT_EQ(sn_bracket_one_form_def(s.dx(0).scaled(s.f("x")), s.dx(1)), -s.dx(0));
}

TEST(Bracket, RoutesAgreeOnConformalExample) {
  const Space s("conf3");
  const Form a = s.dx(0).scaled(s.f("y"));
  const Form b = s.dx(1, 2).scaled(s.f("z"));
  const Form expected = sn_bracket(a, b);
  EXPECT_EQ(sn_bracket_components(a, b, false), expected);
  EXPECT_EQ(sn_bracket_components(a, b, true), expected);
  EXPECT_EQ(sn_bracket_nabla(a, b), expected);
  EXPECT_EQ(sn_bracket_one_form_def(a, b), expected);
}

TEST(Bracket, FrameRouteSeesAnholonomy) {
  const Space s("conf3");
  const Form a = s.dx(0).scaled(s.f("y"));
  const Form b = s.dx(1).scaled(s.f("z"));
  BracketTerms terms{Form(s.g, 0), Form(s.g, 0), Form(s.g, 0)};
  EXPECT_EQ(sn_bracket_components(a, b, true, &terms), sn_bracket(a, b));
  EXPECT_FALSE(terms.anholonomy.is_zero());
}

TEST(Bracket, CoordinateRouteNeedsMetricBracketTerm) {
  const Space s("conf3");
  const Form a = s.dx(0).scaled(s.f("y"));
  const Form b = s.dx(1).scaled(s.f("z"));
  BracketTerms terms{Form(s.g, 0), Form(s.g, 0), Form(s.g, 0)};
  const Form full = sn_bracket_components(a, b, false, &terms);
  EXPECT_EQ(full, sn_bracket(a, b));
  ASSERT_FALSE(terms.anholonomy.is_zero());
  EXPECT_NE(full - terms.anholonomy, sn_bracket(a, b));
}

TEST(GeneralizedInterior, Examples) {
  const Space s("euclid3");
  EXPECT_EQ(gen_interior(s.dx(0, 1), wedge(s.dx(0, 1), s.dx(2))), s.dx(2));
  EXPECT_EQ(gen_interior(s.dx(0), s.dx(0, 1)), interior(s.del(0), s.dx(0, 1)));
  EXPECT_EQ(gen_interior(s.scalar("x"), s.dx(1)), s.dx(1).scaled(s.f("x")));
  EXPECT_EQ(gen_interior(s.dx(0, 1), s.dx(0, 1)), s.scalar("1"));
  EXPECT_TRUE(gen_interior(s.dx(0, 1), s.dx(0)).is_zero());
  const Space c("conf3");
  const Form a = c.dx(0, 2).scaled(c.f("y"));
  const Form b = wedge(c.dx(0, 1), c.dx(2)).scaled(c.f("x"));
  EXPECT_EQ(gen_interior(a, b), gen_interior_components(a, b));
}

TEST(Theta, Examples) {
  const Space s("euclid3");
  EXPECT_EQ(theta(s.scalar("x"), s.dx(1)), -s.dx(0, 1));
  EXPECT_EQ(theta(s.dx(0), s.dx(1).scaled(s.f("x"))), s.dx(1));
}

TEST(GradedCommutator, Parity) {
  const Space s("euclid3");
  const FormOperator d = [](const Form& f) { return ext_d(f); };
  const FormOperator jx = [&](const Form& f) { return wedge(s.dx(0), f); };
  EXPECT_TRUE(graded_commutator(d, jx, 1, s.scalar("y")).is_zero());
  EXPECT_EQ(graded_commutator(d, jx, 0, s.scalar("y")), s.dx(0, 1).scaled(s.f("-2")));
}

// The naive forms below are false; the registered checks use the corrected
// forms, which hold on the same inputs.

TEST(NaiveForm, BoxScalarOneForm) {
  const Space s("euclid3");
  const Form phi = s.scalar("2");
  const Form lambda = s.dx(0).scaled(s.f("x^2"));
  const Form dphi = ext_d(phi);
  const VectorField v = sharp1(dphi);
  const Form lhs = laplace_de_rham(lambda.scaled(phi.as_scalar()));
  const Form naive = lambda.scaled(laplace_de_rham(phi).as_scalar()) + lie(v, lambda) -
                       dphi.scaled(codifferential(lambda).as_scalar()) + codifferential(wedge(lambda, dphi));
  const Form corrected = laplace_de_rham(lambda).scaled(phi.as_scalar()) + lie(v, lambda) -
                         dphi.scaled(codifferential(lambda).as_scalar()) + codifferential(wedge(lambda, dphi));
  EXPECT_EQ(lhs, s.dx(0).scaled(s.f("4")));
  EXPECT_NE(lhs, naive);
  EXPECT_EQ(lhs, corrected);
}

TEST(NaiveForm, BoxOneFormOneForm) {
  const Space s("euclid3");
  const Form lambda = s.dx(1).scaled(s.f("x"));
  const Form tau = s.dx(0).scaled(s.f("x^2"));
  const VectorField vl = sharp1(lambda), vt = sharp1(tau);
  const Form lhs = laplace_de_rham(wedge(lambda, tau));
  const Form common = -wedge(codifferential(ext_d(lambda)), tau) + wedge(lambda, laplace_de_rham(tau)) -
                      conj_lie(vl, ext_d(tau)) + conj_lie(vt, ext_d(lambda)) + ext_d(conj_lie(vl, tau));
  EXPECT_THROW(common + lambda.scaled(codifferential(tau).as_scalar()), FormError);
  EXPECT_EQ(lhs, common + ext_d(lambda).scaled(codifferential(tau).as_scalar()));
}

TEST(NaiveForm, InteriorLieDivergenceSign) {
  const Space s("euclid3");
  const VectorField v = s.del(0).scaled(s.f("x"));
  const Form one = s.scalar("1");
  const Form lhs = gen_interior(one, lie(v, one)) - lie(v, gen_interior(one, one));
  const Form div_term = gen_interior(one, one).scaled(divergence(v));
  EXPECT_TRUE(lhs.is_zero());
  EXPECT_NE(lhs, -gen_interior(conj_lie(v, one), one) - div_term);
  EXPECT_EQ(lhs, -gen_interior(conj_lie(v, one), one) + div_term);
}

TEST(NaiveForm, LieDeltaExpandedSign) {
  const Space s("euclid3");
  const VectorField v = s.del(1).scaled(s.f("x^2"));
  const Form dv = ext_d(flat1(v));
  const Form beta = s.dx(0, 2).scaled(s.f("y"));
  const int b = beta.degree();
  const Form lhs = lie(v, codifferential(beta)) - codifferential(lie(v, beta));
  const Form box_i = laplace_de_rham(interior(v, beta)) - interior(v, laplace_de_rham(beta));
  const Form bracket_term = star_inv(sn_bracket(dv, star(beta))).signed_by(b);
  ASSERT_FALSE(bracket_term.is_zero());
  EXPECT_NE(lhs, box_i + interior(sharp1(codifferential(dv)), beta) + bracket_term);
  EXPECT_EQ(lhs, box_i + interior(sharp1(codifferential(dv)), beta) - bracket_term);
}

TEST(NaiveForm, ThetaWedgeCommutatorForms) {
  const Space s("euclid2");
  const Form phi = s.scalar("x"), psi = s.scalar("y"), one = s.scalar("1");
  const FormOperator i_psi = [&](const Form& f) { return gen_interior(psi, f); };
  const FormOperator theta_phi = [&](const Form& f) { return theta(phi, f); };
  const Form lhs = theta(wedge(phi, psi), one);
  EXPECT_EQ(lhs, -s.dx(0).scaled(s.f("y")) - s.dx(1).scaled(s.f("x")));
  EXPECT_EQ(lhs, gen_interior(psi, theta(phi, one)) + theta(psi, gen_interior(phi, one)));
  // [i^psi, Theta^phi]_{0+1} = -2 y dx.
  EXPECT_NE(lhs, graded_commutator(i_psi, theta_phi, 1, one));
  // The parity split's right side: i^{[[phi,psi]]} 1 + 2 Theta^phi i^psi 1.
  const Form table = gen_interior(sn_bracket(phi, psi), one) + theta(phi, gen_interior(psi, one)).scaled(Rational(2));
  EXPECT_NE(lhs, table);
  EXPECT_EQ(graded_commutator(i_psi, theta_phi, 1, one), table);
}
