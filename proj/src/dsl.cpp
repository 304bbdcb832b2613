#include "cartan/dsl.hpp"

#include <algorithm>
#include <cctype>

namespace cartan::dsl {

namespace {

struct OpInfo {
  const char* name;
  std::size_t arity;
};

constexpr OpInfo kOps[] = {
    {"d", 1},    {"delta", 1}, {"star", 1}, {"starinv", 1}, {"box", 1}, {"wedge", 2},
    {"ip", 2},   {"jp", 2},    {"lie", 2},  {"sn", 2},      {"theta", 2}, {"inner", 2},
    {"sharp", 1}, {"flat", 1}, {"div", 1},
};

const OpInfo* find_op(std::string_view name) {
  for (const auto& op : kOps)
    if (name == op.name) return &op;
  return nullptr;
}

NodePtr make(Node::Kind kind, std::string text, std::vector<NodePtr> args = {}) {
  return std::make_shared<const Node>(Node{kind, std::move(text), std::move(args)});
}

// --- lexer ---------------------------------------------------------------

struct Token {
  enum class Kind { integer, ident, symbol, end } kind;
  std::string text;
  std::size_t line, column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  const auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  const auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, cl = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::integer, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@') {
      std::size_t j = i + 1;
      if (c == '@' && (j >= src.size() || !(std::isalpha(static_cast<unsigned char>(src[j])) || src[j] == '_')))
        throw ParseError("'@' must be followed by a coordinate name", l, cl);
      while (j < src.size() && ident_char(src[j])) ++j;
      out.push_back({Token::Kind::ident, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
    } else if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::symbol, std::string(1, c), l, cl});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
    }
  }
  out.push_back({Token::Kind::end, "", line, col});
  return out;
}

// --- parser --------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  NodePtr parse_all() {
    NodePtr n = expr();
    if (peek().kind != Token::Kind::end) fail("unexpected '" + peek().text + "'");
    return n;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at(const char* sym) const { return peek().kind == Token::Kind::symbol && peek().text == sym; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(peek().kind == Token::Kind::end && msg.rfind("unexpected", 0) == 0 ? "unexpected end of input" : msg,
                     peek().line, peek().column);
  }
  void expect(const char* sym) {
    if (!at(sym)) fail(std::string("expected '") + sym + "'" + (peek().kind == Token::Kind::end ? " at end of input" : ""));
    ++pos_;
  }

  NodePtr expr() {
    NodePtr n = prod();
    while (at("+") || at("-")) {
      const auto kind = at("+") ? Node::Kind::add : Node::Kind::sub;
      ++pos_;
      n = make(kind, "", {n, prod()});
    }
    return n;
  }
  NodePtr prod() {
    NodePtr n = unary();
    while (at("*") || at("/")) {
      const auto kind = at("*") ? Node::Kind::mul : Node::Kind::div;
      ++pos_;
      n = make(kind, "", {n, unary()});
    }
    return n;
  }
  NodePtr unary() {
    if (at("-")) {
      ++pos_;
      return make(Node::Kind::neg, "", {unary()});
    }
    return wedge();
  }
  NodePtr wedge() {
    NodePtr n = atom();
    while (at("^")) {
      ++pos_;
      n = make(Node::Kind::caret, "", {n, atom()});
    }
    return n;
  }
  NodePtr atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::integer) {
      ++pos_;
      return make(Node::Kind::integer, t.text);
    }
    if (at("(")) {
      ++pos_;
      NodePtr n = expr();
      expect(")");
      return n;
    }
    if (t.kind != Token::Kind::ident) fail(t.kind == Token::Kind::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
    const Token name = t;
    ++pos_;
    if (!at("(")) return make(Node::Kind::ident, name.text);
    const OpInfo* op = find_op(name.text);
    if (!op) throw ParseError("unknown operator '" + name.text + "'", name.line, name.column);
    ++pos_;
    std::vector<NodePtr> args{expr()};
    while (at(",")) {
      ++pos_;
      args.push_back(expr());
    }
    expect(")");
    if (args.size() != op->arity)
      throw ParseError(name.text + " takes " + std::to_string(op->arity) + " argument" + (op->arity == 1 ? "" : "s") +
                           ", got " + std::to_string(args.size()),
                       name.line, name.column);
    return make(Node::Kind::call, name.text, std::move(args));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// --- printer -------------------------------------------------------------

int precedence(const Node& n) {
  switch (n.kind) {
    case Node::Kind::add:
    case Node::Kind::sub: return 1;
    case Node::Kind::mul:
    case Node::Kind::div: return 2;
    case Node::Kind::neg: return 3;
    case Node::Kind::caret: return 4;
    default: return 5;
  }
}

void print_to(std::string& out, const Node& n);

void print_operand(std::string& out, const Node& n, bool parens) {
  if (parens) out += '(';
  print_to(out, n);
  if (parens) out += ')';
}

void print_to(std::string& out, const Node& n) {
  const int p = precedence(n);
  switch (n.kind) {
    case Node::Kind::integer:
    case Node::Kind::ident: out += n.text; return;
    case Node::Kind::neg:
      out += '-';
      print_operand(out, *n.args[0], precedence(*n.args[0]) < p);
      return;
    case Node::Kind::call:
      out += n.text;
      out += '(';
      for (std::size_t k = 0; k < n.args.size(); ++k) {
        if (k) out += ", ";
        print_to(out, *n.args[k]);
      }
      out += ')';
      return;
    default: break;
  }
  static const std::map<Node::Kind, const char*> symbols = {
      {Node::Kind::add, " + "}, {Node::Kind::sub, " - "}, {Node::Kind::mul, "*"},
      {Node::Kind::div, "/"},   {Node::Kind::caret, "^"}};
  print_operand(out, *n.args[0], precedence(*n.args[0]) < p);
  out += symbols.at(n.kind);
  print_operand(out, *n.args[1], precedence(*n.args[1]) <= p);
}

// --- evaluator -----------------------------------------------------------

std::string kind_name(const Value& v) {
  if (const auto* f = std::get_if<Form>(&v)) return f->degree() == 0 ? "scalar" : std::to_string(f->degree()) + "-form";
  return std::to_string(std::get<Multivector>(v).degree()) + "-vector";
}

/// Degree-0 multivectors are scalars.
Value normalize(Multivector m) {
  if (m.degree() == 0) return Form::scalar(m.geometry(), m.component(IndexSet{0}));
  return m;
}

const Form& as_form(const Value& v, const char* where) {
  if (const auto* f = std::get_if<Form>(&v)) return *f;
  throw EvalError(std::string(where) + " expects a form, got a " + kind_name(v));
}

bool is_scalar(const Value& v) {
  const auto* f = std::get_if<Form>(&v);
  return f && f->degree() == 0;
}

VectorField as_vector(const Value& v, const char* where) {
  if (const auto* m = std::get_if<Multivector>(&v)) {
    if (m->degree() == 1) return to_vector(*m);
  } else if (std::get<Form>(v).degree() == 1) {
    return sharp1(std::get<Form>(v));
  }
  throw EvalError(std::string(where) + " expects a vector or a 1-form, got a " + kind_name(v));
}

Value add_values(const Value& a, const Value& b, bool subtract) {
  if (a.index() != b.index()) throw EvalError("cannot add a " + kind_name(a) + " and a " + kind_name(b));
  return std::visit(
      [&](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b);
        if (x.degree() != y.degree() && !x.is_zero() && !y.is_zero())
          throw EvalError("cannot add a " + kind_name(a) + " and a " + kind_name(b));
        return subtract ? x - y : x + y;
      },
      a);
}

Value scale(const Value& v, const RationalFn& f) {
  return std::visit([&](const auto& x) -> Value { return x.scaled(f); }, v);
}

Value evaluate_call(const Node& n, const std::vector<Value>& a) {
  const std::string& op = n.text;
  const auto form = [&](std::size_t k) { return as_form(a[k], op.c_str()); };
  if (op == "d") return ext_d(form(0));
  if (op == "delta") return codifferential(form(0));
  if (op == "star") return star(form(0));
  if (op == "starinv") return star_inv(form(0));
  if (op == "box") return laplace_de_rham(form(0));
  if (op == "ip") return gen_interior(form(0), form(1));
  if (op == "jp") return wedge(form(0), form(1));
  if (op == "sn") return sn_bracket(form(0), form(1));
  if (op == "theta") return theta(form(0), form(1));
  if (op == "inner") {
    const Form x = form(0), y = form(1);
    if (x.degree() != y.degree())
      throw EvalError("inner needs equal degrees, got " + std::to_string(x.degree()) + " and " + std::to_string(y.degree()));
    return Form::scalar(x.geometry(), form_inner(x, y));
  }
  if (op == "sharp") return normalize(sharp(form(0)));
  if (op == "flat") {
    if (const auto* m = std::get_if<Multivector>(&a[0])) return flat(*m);
    if (is_scalar(a[0])) return a[0];
    throw EvalError("flat expects a multivector, got a " + kind_name(a[0]));
  }
  if (op == "div") {
    const VectorField v = as_vector(a[0], "div");
    return Form::scalar(v.geometry(), divergence(v));
  }
  if (op == "lie") {
    const VectorField v = as_vector(a[0], "lie");
    if (const auto* m = std::get_if<Multivector>(&a[1])) return normalize(lie_multivector(v, *m));
    return lie(v, std::get<Form>(a[1]));
  }
  if (op == "wedge") {
    if (a[0].index() != a[1].index()) throw EvalError("wedge of a form and a multivector");
    if (const auto* m = std::get_if<Multivector>(&a[0])) return wedge(*m, std::get<Multivector>(a[1]));
    return wedge(form(0), form(1));
  }
  throw EvalError("unknown operator '" + op + "'");
}

Value resolve(const std::string& name, const Environment& env) {
  if (const Value* v = env.lookup(name)) return *v;
  const GeometryPtr& g = env.geometry();
  const auto& coords = g->coords();
  const auto coord = [&](std::string_view s) -> std::ptrdiff_t {
    const auto it = std::find(coords.begin(), coords.end(), s);
    return it == coords.end() ? -1 : it - coords.begin();
  };
  if (const auto mu = coord(name); mu >= 0) return Form::scalar(g, g->coordinate(static_cast<std::size_t>(mu)));
  if (name.size() > 1 && name[0] == 'd')
    if (const auto mu = coord(std::string_view(name).substr(1)); mu >= 0)
      return coordinate_differential(g, static_cast<std::size_t>(mu));
  if (name.size() > 1 && name[0] == '@')
    if (const auto mu = coord(std::string_view(name).substr(1)); mu >= 0)
      return to_multivector(coordinate_vector(g, static_cast<std::size_t>(mu)));
  if (name.size() > 1 && name[0] == 'e' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const std::size_t k = std::stoul(name.substr(1));
    if (k >= 1 && k <= g->dim()) return frame_coform(g, k - 1);
  }
  throw EvalError("unknown identifier '" + name + "'");
}

Value eval(const Node& n, const Environment& env) {
  const GeometryPtr& g = env.geometry();
  switch (n.kind) {
    case Node::Kind::integer:
      return Form::scalar(g, g->constant(Rational(mpz_class(n.text))));
    case Node::Kind::ident: return resolve(n.text, env);
    case Node::Kind::neg: return std::visit([](const auto& x) -> Value { return -x; }, eval(*n.args[0], env));
    case Node::Kind::call: {
      std::vector<Value> args;
      for (const auto& a : n.args) args.push_back(eval(*a, env));
      return evaluate_call(n, args);
    }
    default: break;
  }
  const Value lhs = eval(*n.args[0], env);
  if (n.kind == Node::Kind::caret && is_scalar(lhs) && n.args[1]->kind == Node::Kind::integer) {
    const unsigned long e = std::stoul(n.args[1]->text);
    return Form::scalar(g, std::get<Form>(lhs).as_scalar().pow(static_cast<unsigned>(e)));
  }
  const Value rhs = eval(*n.args[1], env);
  switch (n.kind) {
    case Node::Kind::add: return add_values(lhs, rhs, false);
    case Node::Kind::sub: return add_values(lhs, rhs, true);
    case Node::Kind::mul:
      if (is_scalar(lhs)) return scale(rhs, std::get<Form>(lhs).as_scalar());
      if (is_scalar(rhs)) return scale(lhs, std::get<Form>(rhs).as_scalar());
      throw EvalError("'*' needs a scalar operand, got a " + kind_name(lhs) + " and a " + kind_name(rhs) +
                      "; use '^' for the exterior product");
    case Node::Kind::div: {
      if (!is_scalar(rhs)) throw EvalError("'/' needs a scalar divisor, got a " + kind_name(rhs));
      const RationalFn den = std::get<Form>(rhs).as_scalar();
      if (den.is_zero()) throw EvalError("division by zero");
      return scale(lhs, g->one() / den);
    }
    case Node::Kind::caret:
      if (n.args[1]->kind == Node::Kind::integer)
        throw EvalError("'^' with an integer exponent needs a scalar base, got a " + kind_name(lhs));
      if (is_scalar(lhs) && is_scalar(rhs)) throw EvalError("'^' between scalars needs an integer literal exponent");
      if (is_scalar(lhs)) return scale(rhs, std::get<Form>(lhs).as_scalar());
      if (is_scalar(rhs)) return scale(lhs, std::get<Form>(rhs).as_scalar());
      if (lhs.index() != rhs.index()) throw EvalError("'^' between a form and a multivector");
      if (const auto* m = std::get_if<Multivector>(&lhs)) return wedge(*m, std::get<Multivector>(rhs));
      return wedge(std::get<Form>(lhs), std::get<Form>(rhs));
    default: break;
  }
  throw EvalError("malformed expression");
}

}  // namespace

bool operator==(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.text != b.text || a.args.size() != b.args.size()) return false;
  for (std::size_t k = 0; k < a.args.size(); ++k)
    if (!(*a.args[k] == *b.args[k])) return false;
  return true;
}

NodePtr parse(std::string_view source) { return Parser(source).parse_all(); }

std::string print(const Node& node) {
  std::string out;
  print_to(out, node);
  return out;
}

void Environment::bind(const std::string& name, Value value) { bindings_.insert_or_assign(name, std::move(value)); }

void Environment::bind_source(const std::string& name, std::string_view source) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') ||
      !std::all_of(name.begin(), name.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
    throw EvalError("invalid binding name '" + name + "'");
  if (find_op(name)) throw EvalError("binding name '" + name + "' is an operator");
  bind(name, evaluate(source, *this));
}

const Value* Environment::lookup(const std::string& name) const {
  const auto it = bindings_.find(name);
  return it == bindings_.end() ? nullptr : &it->second;
}

Value evaluate(const Node& node, const Environment& env) { return eval(node, env); }
Value evaluate(std::string_view source, const Environment& env) { return eval(*parse(source), env); }

std::string render(const Value& value) {
  return std::visit([](const auto& x) { return to_string(x); }, value);
}

}  // namespace cartan::dsl
