#ifndef CARTAN_RATFN_HPP
#define CARTAN_RATFN_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cartan/poly.hpp"

namespace cartan {

/// Raised by eval_at when the denominator vanishes at the sample point.
class PoleError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Exact rational function num/den over Q in the chart coordinates.
///
/// Normal form: gcd(num, den) = 1 and den has leading coefficient 1 in lex
/// order (the zero function is 0/1).  Every operation returns normal form, so
/// structural equality is mathematical equality.
class RationalFn {
 public:
  explicit RationalFn(std::size_t nvars = 0);
  RationalFn(Poly num);
  RationalFn(Poly num, Poly den);

  static RationalFn constant(std::size_t nvars, const Rational& c);
  static RationalFn variable(std::size_t nvars, std::size_t var);

  std::size_t nvars() const { return num_.nvars(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  /// Value when is_constant().
  Rational constant_value() const { return num_.constant_value(); }

  RationalFn operator-() const;
  RationalFn& operator+=(const RationalFn& other);
  RationalFn& operator-=(const RationalFn& other);
  RationalFn& operator*=(const RationalFn& other);
  RationalFn& operator/=(const RationalFn& other);
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }

  RationalFn scaled(const Rational& c) const;
  RationalFn pow(unsigned exponent) const;

  /// Exact partial derivative by the quotient rule.
  RationalFn partial(std::size_t var) const;
  /// Throws PoleError when the denominator vanishes at point.
  Rational eval_at(std::span<const Rational> point) const;

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  /// Equality by cross multiplication; agrees with == on normal forms.
  bool equals_by_cross_multiplication(const RationalFn& other) const;

  /// `x^2 - 1` or `(x)/(1 + x^2)`; parenthesized whenever a denominator exists.
  std::string to_string(std::span<const std::string> names) const;

 private:
  struct Reduced {};
  RationalFn(Poly num, Poly den, Reduced);
  void normalize();

  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFn& f);

}  // namespace cartan

#endif  // CARTAN_RATFN_HPP
