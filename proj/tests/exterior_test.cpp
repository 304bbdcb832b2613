#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cartan/exterior.hpp"
#include "cartan/fixture.hpp"
#include "cartan/ratfn_parse.hpp"

using namespace cartan;

namespace {

struct Space {
  explicit Space(const std::string& name) : fixture(load_fixture(name)), g(fixture.geometry) {}
  RationalFn f(const std::string& s) const { return parse_ratfn(s, g->coords()); }
  Form scalar(const std::string& s) const { return Form::scalar(g, f(s)); }
  Form dx(std::size_t mu) const { return coordinate_differential(g, mu); }
  VectorField del(std::size_t mu) const { return coordinate_vector(g, mu); }
  VectorField vec(const std::vector<std::string>& comps) const {
    std::vector<RationalFn> c;
    for (const auto& s : comps) c.push_back(f(s));
    return VectorField(g, c);
  }

  Fixture fixture;
  GeometryPtr g;
};

}  // namespace

TEST(Wedge, SignsAndNilpotency) {
  const Space s("euclid3");
  EXPECT_EQ(wedge(s.dx(0), s.dx(1)), -wedge(s.dx(1), s.dx(0)));
  EXPECT_TRUE(wedge(s.dx(2), s.dx(2)).is_zero());
  const Form w = wedge(wedge(s.dx(2), s.dx(0)), s.dx(1));
  EXPECT_EQ(w, wedge(wedge(s.dx(0), s.dx(1)), s.dx(2)));
  EXPECT_EQ(wedge(s.scalar("x"), s.dx(1)), s.dx(1).scaled(s.f("x")));
}

TEST(Wedge, TypedZeroBeyondDimension) {
  const Space s("euclid2");
  const Form top = wedge(s.dx(0), s.dx(1));
  const Form over = wedge(top, s.dx(0));
  EXPECT_TRUE(over.is_zero());
  EXPECT_EQ(over.degree(), 3);
  EXPECT_THROW(top + s.dx(0), FormError);
}

TEST(Render, CanonicalText) {
  const Space s("euclid3");
  const Form a = wedge(s.dx(0), s.dx(1)).scaled(s.f("x")) - wedge(s.dx(1), s.dx(2)).scaled(s.f("1 + y"));
  EXPECT_EQ(to_string(a), "x*dx^dy - (y + 1)*dy^dz");
  EXPECT_EQ(to_string(Form(s.g, 2)), "0");
  EXPECT_EQ(to_string(to_multivector(s.vec({"x", "0", "-1"}))), "x*@x - @z");
}

TEST(ExteriorDerivative, Examples) {
  const Space s("euclid3");
  EXPECT_EQ(ext_d(s.scalar("x*y")), s.dx(0).scaled(s.f("y")) + s.dx(1).scaled(s.f("x")));
  EXPECT_EQ(ext_d(s.dx(1).scaled(s.f("x"))), wedge(s.dx(0), s.dx(1)));
  EXPECT_TRUE(ext_d(ext_d(s.scalar("x^2*y*z/(1 + z^2)"))).is_zero());
}

TEST(Interior, ClassicalInsertion) {
  const Space s("euclid3");
  EXPECT_EQ(interior(s.del(0), wedge(s.dx(0), s.dx(1))), s.dx(1));
  EXPECT_EQ(interior(s.del(1), wedge(s.dx(0), s.dx(1))), -s.dx(0));
  EXPECT_EQ(interior(s.del(0), s.scalar("x")).degree(), -1);
}

TEST(Musical, MinkowskiSharp) {
  const Space s("mink4");
  EXPECT_EQ(sharp1(s.dx(0)), -s.del(0));
  EXPECT_EQ(sharp1(s.dx(1)), s.del(1));
  EXPECT_EQ(flat1(sharp1(s.dx(0).scaled(s.f("x")))), s.dx(0).scaled(s.f("x")));
}

TEST(Musical, ConformalSharp) {
  const Space s("conf3");
  EXPECT_EQ(sharp1(s.dx(0)), s.del(0).scaled(s.f("1/(1 + x^2)^2")));
  const Form b = wedge(s.dx(0), s.dx(2)).scaled(s.f("y"));
  EXPECT_EQ(flat(sharp(b)), b);
}

TEST(Lie, Examples) {
  const Space s("euclid3");
  EXPECT_EQ(lie_form_components(s.del(0), s.dx(0).scaled(s.f("x"))), s.dx(0));
  EXPECT_EQ(lie_bracket(s.vec({"0", "x", "0"}), s.del(0)), -s.del(1));
  const VectorField v = s.vec({"y", "x*z", "1"});
  const Form a = wedge(s.dx(0), s.dx(2)).scaled(s.f("x*y"));
  EXPECT_EQ(lie_form_components(v, a), interior(v, ext_d(a)) + ext_d(interior(v, a)));
  const Multivector m = to_multivector(s.vec({"z", "0", "x"}));
  EXPECT_EQ(to_vector(lie_multivector(v, m)), lie_bracket(v, s.vec({"z", "0", "x"})));
}

TEST(Lie, InverseMetricVanishesForKilling) {
  const Space s("mink4");
  for (const auto& kv : s.fixture.killing_vectors) {
    const Matrix lg = lie_inverse_metric(VectorField(s.g, kv.components));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) EXPECT_TRUE(lg(i, j).is_zero()) << kv.name;
  }
}

TEST(Basis, FrameRoundTrip) {
  const Space s("conf3");
  const Form a = wedge(s.dx(0), s.dx(1)).scaled(s.f("z")) + wedge(s.dx(1), s.dx(2));
  const Form framed = change_basis(a, Basis::frame);
  EXPECT_EQ(framed.basis(), Basis::frame);
  EXPECT_EQ(framed.component(IndexSet{0b011}), s.f("z/(1 + x^2)^2"));
  EXPECT_EQ(change_basis(framed, Basis::coordinate), a);
  EXPECT_EQ(change_basis(frame_coform(s.g, 1), Basis::frame), Form::basis_element(s.g, 0b010, Basis::frame));
  EXPECT_EQ(frame_coform(s.g, 1), s.dx(1).scaled(s.f("1 + x^2")));
}

TEST(CovariantDerivative, MetricFormIsParallel) {
  const Space s("conf3");
  // nabla_m of dx is -Gamma^x_{m nu} dx^nu.
  for (std::size_t m = 0; m < 3; ++m) {
    Form expected(s.g, 1);
    for (std::size_t nu = 0; nu < 3; ++nu) expected -= s.dx(nu).scaled(s.g->christoffel(0, m, nu));
    EXPECT_EQ(covariant_derivative(s.dx(0), m), expected);
  }
}
