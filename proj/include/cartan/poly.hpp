#ifndef CARTAN_POLY_HPP
#define CARTAN_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cartan {

/// Arbitrary-precision rational; GMP keeps it canonical (gcd-reduced, positive denominator).
using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Thrown for argument errors of the algebra layer (index out of range,
/// mismatched variable counts, division by zero).
class AlgebraError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector packed one byte per variable, variable 0 in the most
/// significant byte, so numeric order of the packed word is lex order.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}

  static Monomial unit(std::size_t var);

  unsigned exponent(std::size_t var) const {
    return static_cast<unsigned>((bits_ >> shift(var)) & 0xFFu);
  }
  std::uint64_t bits() const { return bits_; }
  bool is_one() const { return bits_ == 0; }
  unsigned total_degree() const;

  /// Product; throws AlgebraError when an exponent would exceed 255.
  Monomial operator*(Monomial other) const;
  bool divides(Monomial other) const;
  /// Quotient other / *this; caller guarantees divides(other).
  Monomial quotient_of(Monomial other) const { return Monomial(other.bits_ - bits_); }
  Monomial without(std::size_t var) const {
    return Monomial(bits_ & ~(std::uint64_t{0xFF} << shift(var)));
  }

  friend bool operator==(Monomial, Monomial) = default;
  friend auto operator<=>(Monomial a, Monomial b) { return a.bits_ <=> b.bits_; }

 private:
  static constexpr unsigned shift(std::size_t var) {
    return static_cast<unsigned>(8 * (kMaxVars - 1 - var));
  }
  std::uint64_t bits_ = 0;
};

struct Term {
  Monomial mono;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Multivariate polynomial over Q in a fixed number of variables.  Terms are
/// kept strictly decreasing in lex order with no zero coefficients, so two
/// equal polynomials are structurally identical.
class Poly {
 public:
  explicit Poly(std::size_t nvars = 0);

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t var);
  static Poly monomial(std::size_t nvars, Monomial m, const Rational& c);
  /// Builds from unsorted terms; combines duplicates and drops zeros.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const;
  /// Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;
  const Term& leading() const { return terms_.front(); }

  unsigned degree_in(std::size_t var) const;
  unsigned total_degree() const;
  /// Bitmask of variables that occur with positive exponent.
  std::uint32_t variables() const;

  /// Coefficient of var^k, as a polynomial free of var.
  Poly coefficient(std::size_t var, unsigned k) const;
  Poly times_monomial(Monomial m) const;
  Poly scaled(const Rational& c) const;

  Poly partial(std::size_t var) const;
  Rational eval(std::span<const Rational> point) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Renders like `x^2*y - 1/3`; reparses to the same polynomial.
  std::string to_string(std::span<const std::string> names) const;

 private:
  void check_compatible(const Poly& other) const;
  Poly add_scaled(const Poly& other, int sign) const;

  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Debug rendering with variable names x0, x1, ...
std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly pow(const Poly& base, unsigned exponent);

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Greatest common divisor, normalized to leading coefficient 1 (zero only
/// when both arguments are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Divides by the leading coefficient.
Poly monic(const Poly& p);

}  // namespace cartan

#endif  // CARTAN_POLY_HPP
