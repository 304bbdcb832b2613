#include "cartan/ratfn.hpp"

#include <ostream>

namespace cartan {

RationalFn::RationalFn(std::size_t nvars) : num_(nvars), den_(Poly::constant(nvars, Rational(1))) {}

RationalFn::RationalFn(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.nvars(), Rational(1))) {}

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars()) throw AlgebraError("numerator and denominator over different variables");
  if (den_.is_zero()) throw AlgebraError("rational function with zero denominator");
  normalize();
}

RationalFn::RationalFn(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {
  // gcd(num, den) = 1 is known; only the leading coefficient needs fixing.
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.nvars(), Rational(1));
    return;
  }
  const Rational lc = den_.leading().coeff;
  if (lc != 1) {
    const Rational inv = Rational(1) / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFn RationalFn::constant(std::size_t nvars, const Rational& c) {
  return RationalFn(Poly::constant(nvars, c));
}

RationalFn RationalFn::variable(std::size_t nvars, std::size_t var) {
  return RationalFn(Poly::variable(nvars, var));
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.nvars(), Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  const Rational lc = den_.leading().coeff;
  if (lc != 1) {
    const Rational inv = Rational(1) / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFn RationalFn::operator-() const {
  RationalFn r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFn& RationalFn::operator+=(const RationalFn& other) {
  if (other.is_zero()) {
    if (nvars() != other.nvars()) throw AlgebraError("rational functions over different variables");
    return *this;
  }
  if (is_zero()) return *this = other;
  if (den_.is_one() && other.den_.is_one()) {
    num_ += other.num_;
    return *this;
  }
  if (other.den_.is_one()) {
    // gcd(n + m d, d) = gcd(n, d) = 1
    num_ += other.num_ * den_;
    if (num_.is_zero()) den_ = Poly::constant(nvars(), Rational(1));
    return *this;
  }
  if (den_.is_one()) {
    *this = RationalFn(num_ * other.den_ + other.num_, other.den_, Reduced{});
    return *this;
  }
  if (den_ == other.den_) {
    num_ += other.num_;
    normalize();
    return *this;
  }
  const Poly g = gcd(den_, other.den_);
  if (g.is_constant()) {
    // Coprime denominators: the sum is already reduced.
    Poly n = num_ * other.den_ + other.num_ * den_;
    Poly d = den_ * other.den_;
    *this = RationalFn(std::move(n), std::move(d), Reduced{});
    return *this;
  }
  const Poly d1 = *divide_exact(den_, g);
  const Poly d2 = *divide_exact(other.den_, g);
  num_ = num_ * d2 + other.num_ * d1;
  den_ = den_ * d2;
  normalize();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& other) { return *this += -other; }

RationalFn& RationalFn::operator*=(const RationalFn& other) {
  if (nvars() != other.nvars()) throw AlgebraError("rational functions over different variables");
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = other;
  if (den_.is_one() && other.den_.is_one()) {
    num_ = num_ * other.num_;
    return *this;
  }
  Poly n1 = num_, d1 = den_, n2 = other.num_, d2 = other.den_;
  if (!d2.is_one()) {
    Poly g = gcd(n1, d2);
    if (!g.is_constant()) {
      n1 = *divide_exact(n1, g);
      d2 = *divide_exact(d2, g);
    }
  }
  if (!d1.is_one()) {
    Poly g = gcd(n2, d1);
    if (!g.is_constant()) {
      n2 = *divide_exact(n2, g);
      d1 = *divide_exact(d1, g);
    }
  }
  *this = RationalFn(n1 * n2, d1 * d2, Reduced{});
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& other) {
  if (other.is_zero()) throw AlgebraError("division by the zero rational function");
  RationalFn inv(other.den_, other.num_, Reduced{});
  return *this *= inv;
}

RationalFn RationalFn::scaled(const Rational& c) const {
  if (sgn(c) == 0) return RationalFn(nvars());
  RationalFn r(*this);
  r.num_ = r.num_.scaled(c);
  return r;
}

RationalFn RationalFn::pow(unsigned exponent) const {
  return RationalFn(cartan::pow(num_, exponent), cartan::pow(den_, exponent), Reduced{});
}

RationalFn RationalFn::partial(std::size_t var) const {
  if (var >= nvars()) throw AlgebraError("partial derivative index out of range");
  if (den_.is_one()) return RationalFn(num_.partial(var));
  // (n/d)' = (n' d - n d') / d^2
  Poly n = num_.partial(var) * den_ - num_ * den_.partial(var);
  return RationalFn(std::move(n), den_ * den_);
}

Rational RationalFn::eval_at(std::span<const Rational> point) const {
  const Rational d = den_.eval(point);
  if (sgn(d) == 0) throw PoleError("denominator vanishes at the evaluation point");
  Rational v = num_.eval(point) / d;
  v.canonicalize();
  return v;
}

bool RationalFn::equals_by_cross_multiplication(const RationalFn& other) const {
  return num_ * other.den_ == other.num_ * den_;
}

std::string RationalFn::to_string(std::span<const std::string> names) const {
  if (den_.is_one()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFn& f) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < f.nvars(); ++i) names.push_back("x" + std::to_string(i));
  return os << f.to_string(names);
}

}  // namespace cartan
