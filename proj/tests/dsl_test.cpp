#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cartan/dsl.hpp"
#include "cartan/fixture.hpp"

using namespace cartan;
using namespace cartan::dsl;

namespace {

std::string eval_on(const std::string& fixture, const std::string& src) {
  Environment env(load_fixture(fixture).geometry);
  return render(evaluate(src, env));
}

const std::vector<std::string> kCorpus{
    "x",
    "-x",
    "--x",
    "3",
    "1/3",
    "x^2",
    "(x + 1)^3",
    "x*dx^dy",
    "x*dx^dy - (1 + y)*dy^dz",
    "dx^dy^dz",
    "(dx + dy)^dz",
    "dx^(dy + dz)",
    "a - (b - c)",
    "a - b - c",
    "a/(b*c)",
    "a/b/c",
    "a*(b/c)",
    "-(x + y)*dz",
    "-x^2",
    "(-x)^2",
    "d(d(f))",
    "delta(x*dx)",
    "box(x^2)",
    "star(dx)",
    "starinv(dx^dy)",
    "wedge(dx, dy)",
    "ip(dx^dy, dx^dy^dz)",
    "jp(x*dy, dz)",
    "sn(x*dy, dx)",
    "theta(x, dy)",
    "lie(x*@x, y*dy)",
    "inner(dx, x*dx + dy)",
    "sharp(x*dx)",
    "flat(x*@y)",
    "div(x*@x)",
    "sn(sn(dx, x*dy), z*dz) + 2*sn(dx, sn(dy, dz))",
    "e1^e2 - e3",
    "(x*y - z/2)/(1 + x^2)*dx",
    "a + b*c^d",
    "x*(y*z)",
};

}  // namespace

TEST(Parse, RoundTripCorpus) {
  ASSERT_GE(kCorpus.size(), 30u);
  for (const auto& src : kCorpus) {
    const NodePtr ast = parse(src);
    const std::string printed = print(*ast);
    const NodePtr again = parse(printed);
    EXPECT_TRUE(*ast == *again) << src << " -> " << printed;
    EXPECT_EQ(print(*again), printed) << src;
  }
}

TEST(Parse, Structure) {
  const NodePtr n = parse("sn(x*dx, y*dy)");
  ASSERT_EQ(n->kind, Node::Kind::call);
  EXPECT_EQ(n->text, "sn");
  ASSERT_EQ(n->args.size(), 2u);
  EXPECT_EQ(n->args[0]->kind, Node::Kind::mul);
  // '^' binds tighter than '*', unary minus looser than '^'.
  EXPECT_EQ(print(*parse("x * dx ^ dy")), "x*dx^dy");
  EXPECT_EQ(parse("-x^2")->kind, Node::Kind::neg);
  EXPECT_EQ(print(*parse("((a))")), "a");
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse("wedge(dx)"), ParseError);
  try {
    parse("x +\n  * y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse("frob(x)"), ParseError);
  EXPECT_THROW(parse("(x"), ParseError);
  EXPECT_THROW(parse("x $ y"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
}

TEST(Evaluate, WorkedAnchors) {
  EXPECT_EQ(eval_on("euclid3", "delta(x*dx)"), "-1");
  EXPECT_EQ(eval_on("euclid3", "box(x^2)"), "2");
  EXPECT_EQ(eval_on("euclid3", "div(x*@x)"), "1");
  EXPECT_EQ(eval_on("euclid3", "ip(dx^dy, dx^dy^dz)"), "dz");
  EXPECT_EQ(eval_on("euclid2", "sn(x*dy, dx)"), "-dy");
}

TEST(Evaluate, Operators) {
  EXPECT_EQ(eval_on("euclid3", "star(dx)"), "dy^dz");
  EXPECT_EQ(eval_on("euclid3", "theta(x, dy)"), "-dx^dy");
  EXPECT_EQ(eval_on("euclid3", "lie(dx, x*dy)"), "dy");
  EXPECT_EQ(eval_on("euclid3", "lie(@x, x*dy)"), "dy");
  EXPECT_EQ(eval_on("mink4", "sharp(dt)"), "-@t");
  EXPECT_EQ(eval_on("mink4", "inner(dt, dt)"), "-1");
  EXPECT_EQ(eval_on("mink4", "flat(@t)"), "-dt");
  EXPECT_EQ(eval_on("euclid3", "wedge(dx, dy)"), "dx^dy");
  EXPECT_EQ(eval_on("euclid3", "jp(dy, dx)"), "-dx^dy");
  EXPECT_EQ(eval_on("euclid3", "2^dx"), "2*dx");
  EXPECT_EQ(eval_on("euclid3", "x^2*y/x"), "x*y");
  EXPECT_EQ(eval_on("conf3", "e1"), "(x^2 + 1)*dx");
  EXPECT_EQ(eval_on("euclid3", "d(x*y*z)"), "y*z*dx + x*z*dy + x*y*dz");
}

TEST(Evaluate, Errors) {
  EXPECT_THROW(eval_on("euclid3", "inner(dx, dx^dy)"), EvalError);
  EXPECT_THROW(eval_on("euclid3", "dx^2"), EvalError);
  EXPECT_THROW(eval_on("euclid3", "dx*dy"), EvalError);
  EXPECT_THROW(eval_on("euclid3", "dx + dx^dy"), EvalError);
  EXPECT_THROW(eval_on("euclid3", "q + 1"), EvalError);
  EXPECT_THROW(eval_on("euclid3", "dx/0"), EvalError);
  EXPECT_THROW(eval_on("euclid3", "e4"), EvalError);
  EXPECT_THROW(eval_on("euclid3", "div(dx^dy)"), EvalError);
}

TEST(Evaluate, Bindings) {
  Environment env(load_fixture("euclid3").geometry);
  env.bind_source("f", "x^2*y + z");
  env.bind_source("w", "f*dx^dy");
  EXPECT_EQ(render(evaluate("d(d(f))", env)), "0");
  EXPECT_EQ(render(evaluate("d(w)", env)), "dx^dy^dz");
  EXPECT_THROW(env.bind_source("d", "x"), EvalError);
  EXPECT_THROW(env.bind_source("1a", "x"), EvalError);
}

TEST(Evaluate, CanonicalPrintingIsAFixedPoint) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"euclid3", "sn(x*dy^dz, y^2*dx)"},
      {"euclid3", "star(x*dx - (1 + y)*dy)"},
      {"conf3", "delta(x*y*dx^dy)"},
      {"conf3", "sharp(dx^dz)"},
      {"conf3", "box(e1^e2)"},
      {"mink4", "lie(t*dx, x*dt^dy)"},
      {"euclid4", "ip(dx^dw, x*dx^dy^dz^dw)"},
      {"conf3", "star(1)"},
  };
  for (const auto& [fixture, src] : cases) {
    Environment env(load_fixture(fixture).geometry);
    const Value first = evaluate(src, env);
    const std::string text = render(first);
    const Value second = evaluate(text, env);
    EXPECT_EQ(render(second), text) << src;
    EXPECT_TRUE(first == second) << src;
  }
}
