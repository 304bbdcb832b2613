#include <string>

#include <gtest/gtest.h>

#include "cartan/fixture.hpp"
#include "cartan/hodge.hpp"
#include "cartan/ratfn_parse.hpp"

using namespace cartan;

namespace {

struct Space {
  explicit Space(const std::string& name) : g(load_fixture(name).geometry) {}
  RationalFn f(const std::string& s) const { return parse_ratfn(s, g->coords()); }
  Form scalar(const std::string& s) const { return Form::scalar(g, f(s)); }
  Form dx(std::size_t mu) const { return coordinate_differential(g, mu); }
  Form dx(std::size_t mu, std::size_t nu) const { return wedge(dx(mu), dx(nu)); }
  GeometryPtr g;
};

}  // namespace

TEST(Star, EuclideanExamples) {
  const Space s("euclid3");
  EXPECT_EQ(star(s.dx(0)), s.dx(1, 2));
  EXPECT_EQ(star(s.dx(1)), -s.dx(0, 2));
  EXPECT_EQ(star(s.dx(0, 1).scaled(s.f("x"))), s.dx(2).scaled(s.f("x")));
  EXPECT_EQ(star(s.scalar("1")), volume_form(s.g));
  EXPECT_EQ(star(volume_form(s.g)), s.scalar("1"));
}

TEST(Star, InverseSign) {
  const Space e2("euclid2");
  EXPECT_EQ(star_inv(e2.dx(0)), -star(e2.dx(0)));
  EXPECT_EQ(star(star(e2.dx(1))), -e2.dx(1));
  const Space m4("mink4");
  EXPECT_EQ(star(volume_form(m4.g)), m4.scalar("-1"));
  const Form a = m4.dx(0, 2).scaled(m4.f("x"));
  EXPECT_EQ(star_inv(star(a)), a);
  EXPECT_EQ(star(star_inv(a)), a);
}

TEST(Star, ConformalFrameRule) {
  const Space s("conf3");
  // e^1 = f dx, so *dx = *e^1 / f = e^2 ^ e^3 / f = f dy ^ dz.
  EXPECT_EQ(star(s.dx(0)), s.dx(1, 2).scaled(s.f("1 + x^2")));
  EXPECT_EQ(volume_form(s.g), wedge(s.dx(0), s.dx(1, 2)).scaled(s.f("(1 + x^2)^3")));
}

TEST(Inner, Pairings) {
  const Space m4("mink4");
  EXPECT_EQ(form_inner(m4.dx(0), m4.dx(0)), m4.f("-1"));
  EXPECT_EQ(form_inner(m4.dx(0, 1), m4.dx(0, 1)), m4.f("-1"));
  const Space c3("conf3");
  const Form a = c3.dx(0, 1).scaled(c3.f("y")) + c3.dx(1, 2);
  const Form b = c3.dx(0, 1) + c3.dx(1, 2).scaled(c3.f("z"));
  EXPECT_EQ(form_inner(a, b), form_inner_components(a, b));
  EXPECT_THROW(form_inner(c3.dx(0), c3.dx(0, 1)), FormError);
}

TEST(Codifferential, Examples) {
  const Space s("euclid3");
  EXPECT_EQ(codifferential(s.dx(0).scaled(s.f("x"))), s.scalar("-1"));
  EXPECT_EQ(laplace_de_rham(s.scalar("x^2")), s.scalar("2"));
  EXPECT_EQ(laplace_de_rham(s.scalar("x*y*z")), s.scalar("0"));
  EXPECT_TRUE(codifferential(s.scalar("x")).is_zero());
}

TEST(Codifferential, ConnectionRouteAgrees) {
  for (const char* name : {"euclid3", "mink4", "conf3"}) {
    const Space s(name);
    const Form a = s.dx(0, 1).scaled(s.f("x*y")) + s.dx(1, 2).scaled(s.f("z^2"));
    EXPECT_EQ(codifferential(a), codifferential_via_connection(a)) << name;
    const Form l = s.dx(0).scaled(s.f("y*z")) + s.dx(2).scaled(s.f("x"));
    EXPECT_EQ(codifferential(l), codifferential_via_connection(l)) << name;
  }
}

TEST(Divergence, Examples) {
  const Space s("euclid3");
  EXPECT_EQ(divergence(coordinate_vector(s.g, 0).scaled(s.f("x"))), s.f("1"));
  const Space c("conf3");
  // div v = (1/sqrt g) d_mu (sqrt g v^mu), sqrt g = (1 + x^2)^3.
  EXPECT_EQ(divergence(coordinate_vector(c.g, 0)), c.f("6*x/(1 + x^2)"));
}
