#include "cartan/poly.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>

namespace cartan {

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::unit(std::size_t var) {
  if (var >= kMaxVars) throw AlgebraError("variable index out of range");
  return Monomial(std::uint64_t{1} << shift(var));
}

unsigned Monomial::total_degree() const {
  unsigned total = 0;
  for (std::size_t v = 0; v < kMaxVars; ++v) total += exponent(v);
  return total;
}

Monomial Monomial::operator*(Monomial other) const {
  const std::uint64_t sum = bits_ + other.bits_;
  // Carry into bit 8k means byte k-1 overflowed; sum < bits_ catches the top byte.
  const std::uint64_t carries = (bits_ ^ other.bits_ ^ sum) & 0x0101010101010100ULL;
  if (carries != 0 || sum < bits_) throw AlgebraError("monomial exponent overflow (> 255)");
  return Monomial(sum);
}

bool Monomial::divides(Monomial other) const {
  for (std::size_t v = 0; v < kMaxVars; ++v)
    if (exponent(v) > other.exponent(v)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Poly

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

}  // namespace

Poly::Poly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVars) throw AlgebraError("too many variables");
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  if (sgn(c) != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw AlgebraError("variable index out of range");
  return monomial(nvars, Monomial::unit(var), Rational(1));
}

Poly Poly::monomial(std::size_t nvars, Monomial m, const Rational& c) {
  Poly p(nvars);
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Poly p(nvars);
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw AlgebraError("polynomial is not constant");
  return terms_[0].coeff;
}

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
  return d;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

std::uint32_t Poly::variables() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_)
    for (std::size_t v = 0; v < nvars_; ++v)
      if (t.mono.exponent(v) > 0) mask |= 1u << v;
  return mask;
}

Poly Poly::coefficient(std::size_t var, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.exponent(var) == k) out.push_back({t.mono.without(var), t.coeff});
  // Removing a fixed exponent from every kept term preserves their order.
  Poly p(nvars_);
  p.terms_ = std::move(out);
  return p;
}

Poly Poly::times_monomial(Monomial m) const {
  Poly p(nvars_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff});
  return p;
}

Poly Poly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return Poly(nvars_);
  Poly p(*this);
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly Poly::partial(std::size_t var) const {
  if (var >= nvars_) throw AlgebraError("partial derivative index out of range");
  Poly p(nvars_);
  const Monomial u = Monomial::unit(var);
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exponent(var);
    if (e == 0) continue;
    p.terms_.push_back({Monomial(t.mono.bits() - u.bits()), t.coeff * e});
  }
  return p;
}

Rational Poly::eval(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw AlgebraError("evaluation point has wrong dimension");
  Rational acc(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const unsigned e = t.mono.exponent(i);
      if (e == 0) continue;
      mpz_class n, d;
      mpz_pow_ui(n.get_mpz_t(), point[i].get_num_mpz_t(), e);
      mpz_pow_ui(d.get_mpz_t(), point[i].get_den_mpz_t(), e);
      v *= Rational(n, d);
    }
    acc += v;
  }
  acc.canonicalize();
  return acc;
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

void Poly::check_compatible(const Poly& other) const {
  if (nvars_ != other.nvars_) throw AlgebraError("polynomials over different variable sets");
}

Poly Poly::add_scaled(const Poly& other, int sign) const {
  check_compatible(other);
  Poly out(nvars_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() || (i != terms_.end() && i->mono > j->mono)) {
      out.terms_.push_back(*i++);
    } else if (i == terms_.end() || j->mono > i->mono) {
      out.terms_.push_back({j->mono, sign > 0 ? j->coeff : Rational(-j->coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(i->coeff + j->coeff) : Rational(i->coeff - j->coeff);
      if (sgn(c) != 0) out.terms_.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.is_zero()) {
    check_compatible(other);
    return *this;
  }
  *this = add_scaled(other, +1);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.is_zero()) {
    check_compatible(other);
    return *this;
  }
  *this = add_scaled(other, -1);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.nvars_);
  if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
  if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return Poly::from_terms(a.nvars_, std::move(out));
}

std::string Poly::to_string(std::span<const std::string> names) const {
  if (names.size() < nvars_) throw AlgebraError("not enough variable names");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    bool need_star = false;
    if (t.mono.is_one() || c != 1) {
      os << c.get_str();
      need_star = true;
    }
    for (std::size_t v = 0; v < nvars_; ++v) {
      const unsigned e = t.mono.exponent(v);
      if (e == 0) continue;
      if (need_star) os << "*";
      os << names[v];
      if (e > 1) os << "^" << e;
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << p.to_string(default_names(p.nvars()));
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = Poly::constant(base.nvars(), Rational(1));
  Poly b = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

Poly monic(const Poly& p) {
  if (p.is_zero() || p.leading().coeff == 1) return p;
  return p.scaled(Rational(1) / p.leading().coeff);
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw AlgebraError("polynomials over different variable sets");
  if (b.is_zero()) throw AlgebraError("polynomial division by zero");
  if (a.is_zero()) return Poly(a.nvars());
  if (b.is_constant()) return a.scaled(Rational(1) / b.leading().coeff);
  const Term& lead = b.leading();
  std::vector<Term> quotient;
  Poly rem = a;
  while (!rem.is_zero()) {
    const Term& r = rem.leading();
    if (!lead.mono.divides(r.mono)) return std::nullopt;
    Term q{lead.mono.quotient_of(r.mono), r.coeff / lead.coeff};
    rem -= b.times_monomial(q.mono).scaled(q.coeff);
    quotient.push_back(std::move(q));
  }
  // Quotient terms come out in strictly decreasing order.
  return Poly::from_terms(a.nvars(), std::move(quotient));
}

// ---------------------------------------------------------------------------
// GCD: recursive content / primitive part with a primitive pseudo-remainder
// sequence in the main variable.

namespace {

Poly gcd_impl(const Poly& a, const Poly& b);

Poly one_like(const Poly& p) { return Poly::constant(p.nvars(), Rational(1)); }

/// gcd of the coefficients of p viewed as a polynomial in var.
Poly content_in(const Poly& p, std::size_t var) {
  const unsigned deg = p.degree_in(var);
  Poly g(p.nvars());
  for (unsigned k = 0; k <= deg; ++k) {
    Poly c = p.coefficient(var, k);
    if (c.is_zero()) continue;
    if (c.is_constant()) return one_like(p);
    g = g.is_zero() ? monic(c) : gcd_impl(g, c);
    if (g.is_constant()) return one_like(p);
  }
  return g;
}

Poly primitive_in(const Poly& p, std::size_t var) {
  if (p.is_zero()) return p;
  Poly c = content_in(p, var);
  if (c.is_constant()) return monic(p);
  return monic(*divide_exact(p, c));
}

/// Sparse pseudo-remainder of a by b with respect to var.
Poly pseudo_remainder(Poly a, const Poly& b, std::size_t var) {
  const unsigned db = b.degree_in(var);
  const Poly lb = b.coefficient(var, db);
  while (!a.is_zero()) {
    const unsigned da = a.degree_in(var);
    if (da < db) break;
    const Poly la = a.coefficient(var, da);
    Monomial shift;
    for (unsigned i = 0; i < da - db; ++i) shift = shift * Monomial::unit(var);
    a = lb * a - (la * b).times_monomial(shift);
  }
  return a;
}

Poly gcd_impl(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return one_like(a);
  if (a == b) return monic(a);

  // Variables present in only one argument can be eliminated by taking content.
  const std::uint32_t va = a.variables();
  const std::uint32_t vb = b.variables();
  if (va != vb) {
    const std::uint32_t only_a = va & ~vb;
    const std::uint32_t only_b = vb & ~va;
    if (only_a != 0) return gcd_impl(content_in(a, std::countr_zero(only_a)), b);
    return gcd_impl(a, content_in(b, std::countr_zero(only_b)));
  }

  // Main variable: the one of least degree keeps the remainder sequence short.
  std::size_t var = 0;
  unsigned best = ~0u;
  for (std::uint32_t m = va; m != 0; m &= m - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(m));
    const unsigned d = std::min(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      var = v;
    }
  }

  const Poly ca = content_in(a, var);
  const Poly cb = content_in(b, var);
  const Poly c = gcd_impl(ca, cb);
  Poly p = ca.is_constant() ? monic(a) : monic(*divide_exact(a, ca));
  Poly q = cb.is_constant() ? monic(b) : monic(*divide_exact(b, cb));
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);

  Poly g = one_like(a);
  for (;;) {
    if (auto exact = divide_exact(p, q)) {
      g = q;
      break;
    }
    Poly r = pseudo_remainder(p, q, var);
    if (r.is_zero()) {
      g = q;
      break;
    }
    if (r.degree_in(var) == 0) break;  // primitive parts are coprime
    p = std::move(q);
    q = primitive_in(r, var);
  }
  return monic(c * primitive_in(g, var));
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw AlgebraError("polynomials over different variable sets");
  return gcd_impl(a, b);
}

}  // namespace cartan
