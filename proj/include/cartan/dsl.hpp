#ifndef CARTAN_DSL_HPP
#define CARTAN_DSL_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cartan/brackets.hpp"
#include "cartan/ratfn_parse.hpp"

namespace cartan::dsl {

/// Expression language over forms.
///
///   expr  := prod (('+' | '-') prod)*
///   prod  := unary (('*' | '/') unary)*
///   unary := '-' unary | wedge
///   wedge := atom ('^' atom)*
///   atom  := integer | ident | op '(' expr (',' expr)* ')' | '(' expr ')'
///
/// Identifiers are resolved at evaluation: bindings first, then coordinates
/// (x), coordinate differentials (dx), frame coforms (e1 .. en) and
/// coordinate vectors (@x).  `a ^ k` with a a scalar and k an integer literal
/// is a power; otherwise `^` is the exterior product.
///
/// Operators: d, delta, star, starinv, box (one form); wedge, ip, jp, sn,
/// theta, inner (two forms); sharp (form to multivector); flat (multivector
/// to form); lie(v, a) and div(v), where v is a vector or a 1-form standing
/// for its sharp.

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum class Kind { integer, ident, neg, add, sub, mul, div, caret, call };
  Kind kind;
  std::string text;  // integer digits, identifier or operator name
  std::vector<NodePtr> args;

  friend bool operator==(const Node& a, const Node& b);
};

/// Syntax and arity errors carry a 1-based line/column.
NodePtr parse(std::string_view source);

/// Fully determined text; parse(print(n)) is structurally equal to n.
std::string print(const Node& node);

/// Unknown identifiers, degree and kind errors at evaluation.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Value = std::variant<Form, Multivector>;

class Environment {
 public:
  explicit Environment(GeometryPtr geometry) : geometry_(std::move(geometry)) {}
  const GeometryPtr& geometry() const { return geometry_; }

  void bind(const std::string& name, Value value);
  /// Parses and evaluates `source`, then binds the result.
  void bind_source(const std::string& name, std::string_view source);
  const Value* lookup(const std::string& name) const;

 private:
  GeometryPtr geometry_;
  std::map<std::string, Value> bindings_;
};

Value evaluate(const Node& node, const Environment& env);
Value evaluate(std::string_view source, const Environment& env);

/// Canonical text of a value (sorted multi-indices, normalized coefficients);
/// reparses to the same value.
std::string render(const Value& value);

}  // namespace cartan::dsl

#endif  // CARTAN_DSL_HPP
