#ifndef CARTAN_EXTERIOR_HPP
#define CARTAN_EXTERIOR_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartan/manifold.hpp"
#include "cartan/multi_index.hpp"
#include "cartan/ratfn.hpp"

namespace cartan {

/// Raised on degree or basis mismatches between operands.
class FormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Basis { coordinate, frame };
enum class Variance { covariant, contravariant };

/// Antisymmetric tensor field of a fixed degree: covariant (a p-form) or
/// contravariant (a p-vector).  Components are stored on strictly increasing
/// multi-indices with no zero entries.  The degree may lie outside [0, n]; such
/// values are always zero ("typed zeros"), so operators never need to fail on
/// degree overflow.
template <Variance V>
class Graded {
 public:
  using Components = std::map<IndexSet, RationalFn, LexLess>;

  Graded(GeometryPtr geometry, int degree, Basis basis = Basis::coordinate)
      : geometry_(std::move(geometry)), degree_(degree), basis_(basis) {
    if (!geometry_) throw FormError("field without a geometry");
  }

  static Graded scalar(GeometryPtr geometry, const RationalFn& value) {
    Graded g(std::move(geometry), 0);
    g.add(0, value);
    return g;
  }

  /// dx^I (or e^I / d_I) with coefficient 1.
  static Graded basis_element(GeometryPtr geometry, IndexSet index, Basis basis = Basis::coordinate) {
    Graded g(geometry, set_size(index), basis);
    g.add(index, geometry->one());
    return g;
  }

  const GeometryPtr& geometry() const { return geometry_; }
  const Geometry& geom() const { return *geometry_; }
  std::size_t dim() const { return geometry_->dim(); }
  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  bool is_zero() const { return comps_.empty(); }
  const Components& components() const { return comps_; }

  RationalFn component(IndexSet index) const {
    const auto it = comps_.find(index);
    return it == comps_.end() ? geometry_->zero() : it->second;
  }

  /// Component on an arbitrary (not necessarily increasing) index tuple.
  RationalFn component(const std::vector<std::size_t>& tuple) const {
    IndexSet s = 0;
    const int sign = tuple_sign(tuple, &s);
    if (sign == 0) return geometry_->zero();
    const RationalFn c = component(s);
    return sign > 0 ? c : -c;
  }

  /// Value of a 0-form.
  RationalFn as_scalar() const {
    if (degree_ != 0) throw FormError("expected a scalar (degree 0), got degree " + std::to_string(degree_));
    return component(IndexSet{0});
  }

  void add(IndexSet index, const RationalFn& value) {
    if (value.is_zero()) return;
    check_index(index);
    auto [it, inserted] = comps_.try_emplace(index, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  void subtract(IndexSet index, const RationalFn& value) {
    if (!value.is_zero()) add(index, -value);
  }

  Graded operator-() const {
    Graded r(*this);
    for (auto& [k, v] : r.comps_) v = -v;
    return r;
  }

  Graded& operator+=(const Graded& other) {
    if (other.is_zero()) return *this;
    if (is_zero() && degree_ != other.degree_) return *this = other;
    check_compatible(other);
    for (const auto& [k, v] : other.comps_) add(k, v);
    return *this;
  }
  Graded& operator-=(const Graded& other) { return *this += -other; }
  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }

  Graded scaled(const RationalFn& f) const {
    Graded r(geometry_, degree_, basis_);
    if (f.is_zero()) return r;
    for (const auto& [k, v] : comps_) r.add(k, v * f);
    return r;
  }
  Graded scaled(const Rational& c) const {
    Graded r(geometry_, degree_, basis_);
    if (sgn(c) == 0) return r;
    for (const auto& [k, v] : comps_) r.comps_.emplace(k, v.scaled(c));
    return r;
  }
  /// Multiplication by (-1)^k.
  Graded signed_by(int k) const { return (k & 1) ? -*this : *this; }

  /// Same degree, basis and components.
  friend bool operator==(const Graded& a, const Graded& b) {
    return a.degree_ == b.degree_ && a.basis_ == b.basis_ && a.comps_ == b.comps_;
  }

  void check_compatible(const Graded& other) const {
    if (geometry_ != other.geometry_ && geometry_->coords() != other.geometry_->coords())
      throw FormError("operands live on different charts");
    if (basis_ != other.basis_) throw FormError("operands are expressed in different bases");
    if (degree_ != other.degree_)
      throw FormError("degree mismatch: " + std::to_string(degree_) + " vs " + std::to_string(other.degree_));
  }

 private:
  void check_index(IndexSet index) const {
    if (set_size(index) != degree_ || (index & ~full_set(dim())) != 0)
      throw FormError("component index " + set_to_string(index) + " invalid for degree " + std::to_string(degree_));
  }

  GeometryPtr geometry_;
  int degree_;
  Basis basis_;
  Components comps_;
};

using Form = Graded<Variance::covariant>;
using Multivector = Graded<Variance::contravariant>;

/// Vector field in the coordinate basis, v = v^mu d_mu.
class VectorField {
 public:
  explicit VectorField(GeometryPtr geometry);
  VectorField(GeometryPtr geometry, std::vector<RationalFn> components);

  const GeometryPtr& geometry() const { return geometry_; }
  const Geometry& geom() const { return *geometry_; }
  std::size_t dim() const { return comps_.size(); }
  const std::vector<RationalFn>& components() const { return comps_; }
  const RationalFn& operator[](std::size_t mu) const { return comps_[mu]; }
  bool is_zero() const;

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& other);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a += -b; }
  VectorField scaled(const RationalFn& f) const;
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.comps_ == b.comps_; }

  /// Directional derivative v(f) = v^mu d_mu f.
  RationalFn apply(const RationalFn& f) const;

 private:
  GeometryPtr geometry_;
  std::vector<RationalFn> comps_;
};

// --- constructors ---------------------------------------------------------

/// dx^mu.
Form coordinate_differential(const GeometryPtr& geometry, std::size_t mu);
/// e^a written in the coordinate basis.
Form frame_coform(const GeometryPtr& geometry, std::size_t a);
/// e_a = Einv^mu_a d_mu.
VectorField frame_vector(const GeometryPtr& geometry, std::size_t a);
/// d_mu.
VectorField coordinate_vector(const GeometryPtr& geometry, std::size_t mu);

Multivector to_multivector(const VectorField& v);
VectorField to_vector(const Multivector& m);

// --- algebra --------------------------------------------------------------

/// Exterior product, sign by merge parity.  Operands must share a basis.
Form wedge(const Form& a, const Form& b);
Multivector wedge(const Multivector& a, const Multivector& b);

/// Exterior derivative.  Frame-basis input is converted to coordinates,
/// differentiated, and converted back.
Form ext_d(const Form& a);

/// Classical insertion i_v.
Form interior(const VectorField& v, const Form& a);
/// Creator j_v = (flat v) ^ .
Form j_product(const VectorField& v, const Form& a);

/// Index raising/lowering with g^{mu nu} / g_{mu nu}.
VectorField sharp1(const Form& lambda);
Form flat1(const VectorField& v);
Multivector sharp(const Form& a);
Form flat(const Multivector& m);

/// Re-expresses components in the coordinate or orthonormal-frame basis.
Form change_basis(const Form& a, Basis to);
Multivector change_basis(const Multivector& m, Basis to);
inline Form to_coordinate(const Form& a) { return a.basis() == Basis::coordinate ? a : change_basis(a, Basis::coordinate); }

// --- Lie derivatives by components ----------------------------------------

/// (L_v a) from components: v^s d_s a_I plus d v contractions per index.
Form lie_form_components(const VectorField& v, const Form& a);
/// L_v m for a multivector, using L_v d_mu = -(d_mu v^s) d_s.
Multivector lie_multivector(const VectorField& v, const Multivector& m);
/// (L_v g~)^{mn} = v^s d_s g^{mn} - g^{sn} d_s v^m - g^{ms} d_s v^n.
Matrix lie_inverse_metric(const VectorField& v);
/// Vector Lie bracket [u, v]^mu = u(v^mu) - v(u^mu).
VectorField lie_bracket(const VectorField& u, const VectorField& v);

/// Levi-Civita covariant derivative along d_m, coordinate components:
/// (nabla_m a)_{nu...} = d_m a_{nu...} - Gamma^s_{m nu_k} a_{...s...}.
Form covariant_derivative(const Form& a, std::size_t m);

// --- rendering ------------------------------------------------------------

/// Canonical text, e.g. `x*dx^dy - (y + 1)*dy^dz`; frame components use e1..en,
/// multivector components use @x for d/dx.  The zero field renders as `0`.
std::string to_string(const Form& a);
std::string to_string(const Multivector& m);
std::string to_string(const VectorField& v);

std::ostream& operator<<(std::ostream& os, const Form& a);
std::ostream& operator<<(std::ostream& os, const Multivector& m);

}  // namespace cartan

#endif  // CARTAN_EXTERIOR_HPP
