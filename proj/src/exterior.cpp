#include "cartan/exterior.hpp"

#include <ostream>
#include <sstream>

namespace cartan {

namespace {

void check_same_geometry(const GeometryPtr& a, const GeometryPtr& b) {
  if (a != b && a->coords() != b->coords()) throw FormError("operands live on different charts");
}

RationalFn signed_value(int sign, const RationalFn& v) { return sign > 0 ? v : -v; }

template <Variance V>
Graded<V> wedge_impl(const Graded<V>& a, const Graded<V>& b) {
  check_same_geometry(a.geometry(), b.geometry());
  if (a.basis() != b.basis()) throw FormError("wedge of operands in different bases");
  Graded<V> out(a.geometry(), a.degree() + b.degree(), a.basis());
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [i, ca] : a.components())
    for (const auto& [j, cb] : b.components()) {
      const int s = merge_sign(i, j);
      if (s != 0) out.add(i | j, signed_value(s, ca * cb));
    }
  return out;
}

/// Replaces, in every basis element, one factor at a time by a linear
/// combination of basis 1-elements: factor mu -> sum_s coeff(mu, s) * basis_s.
template <Variance V, class Coeff>
void replace_each_factor(const Graded<V>& in, Graded<V>& out, Coeff coeff) {
  const std::size_t n = in.dim();
  for (const auto& [index, c] : in.components()) {
    int k = 0;
    for (std::size_t mu : members(index)) {
      const IndexSet rest = index & ~single(mu);
      // basis_I = (-1)^k basis_mu ^ basis_rest
      for (std::size_t s = 0; s < n; ++s) {
        if (rest & single(s)) continue;
        const RationalFn f = coeff(mu, s);
        if (f.is_zero()) continue;
        const int sign = ((k & 1) ? -1 : 1) * merge_sign(single(s), rest);
        out.add(rest | single(s), signed_value(sign, c * f));
      }
      ++k;
    }
  }
}

std::string coefficient_term(const RationalFn& c, const std::string& basis, const std::vector<std::string>& names,
                             bool first) {
  std::string sign_text;
  std::string magnitude;
  bool negative = false;
  if (c.is_polynomial() && c.num().size() == 1) {
    const Term& t = c.num().leading();
    negative = sgn(t.coeff) < 0;
    const Poly abs_poly = negative ? -c.num() : c.num();
    if (!(abs_poly.is_one() && !basis.empty())) magnitude = abs_poly.to_string(names);
  } else if (basis.empty()) {
    magnitude = c.to_string(names);
  } else {
    negative = sgn(c.num().leading().coeff) < 0;
    magnitude = "(" + (negative ? -c : c).to_string(names) + ")";
  }
  if (first) {
    sign_text = negative ? "-" : "";
  } else {
    sign_text = negative ? " - " : " + ";
  }
  std::string body = magnitude;
  if (!basis.empty()) body = magnitude.empty() ? basis : magnitude + "*" + basis;
  return sign_text + body;
}

template <Variance V>
std::string render(const Graded<V>& a) {
  if (a.is_zero()) return "0";
  const auto& names = a.geom().coords();
  std::string out;
  bool first = true;
  for (const auto& [index, c] : a.components()) {
    std::string basis;
    for (std::size_t k : members(index)) {
      if (!basis.empty()) basis += "^";
      if (a.basis() == Basis::frame) {
        basis += (V == Variance::covariant ? "e" : "E") + std::to_string(k + 1);
      } else {
        basis += (V == Variance::covariant ? "d" : "@") + names[k];
      }
    }
    if (basis.empty() && !first) basis = "";
    out += coefficient_term(c, basis, names, first);
    first = false;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// VectorField

VectorField::VectorField(GeometryPtr geometry)
    : geometry_(std::move(geometry)), comps_(geometry_->dim(), geometry_->zero()) {}

VectorField::VectorField(GeometryPtr geometry, std::vector<RationalFn> components)
    : geometry_(std::move(geometry)), comps_(std::move(components)) {
  if (comps_.size() != geometry_->dim()) throw FormError("vector field needs one component per coordinate");
}

bool VectorField::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

VectorField VectorField::operator-() const {
  VectorField r(*this);
  for (auto& c : r.comps_) c = -c;
  return r;
}

VectorField& VectorField::operator+=(const VectorField& other) {
  check_same_geometry(geometry_, other.geometry_);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += other.comps_[i];
  return *this;
}

VectorField VectorField::scaled(const RationalFn& f) const {
  VectorField r(*this);
  for (auto& c : r.comps_) c *= f;
  return r;
}

RationalFn VectorField::apply(const RationalFn& f) const {
  RationalFn acc = geometry_->zero();
  for (std::size_t mu = 0; mu < comps_.size(); ++mu)
    if (!comps_[mu].is_zero()) acc += comps_[mu] * f.partial(mu);
  return acc;
}

// ---------------------------------------------------------------------------
// constructors

Form coordinate_differential(const GeometryPtr& geometry, std::size_t mu) {
  if (mu >= geometry->dim()) throw FormError("coordinate index out of range");
  return Form::basis_element(geometry, single(mu));
}

Form frame_coform(const GeometryPtr& geometry, std::size_t a) {
  if (a >= geometry->dim()) throw FormError("frame index out of range");
  Form f(geometry, 1);
  for (std::size_t mu = 0; mu < geometry->dim(); ++mu) f.add(single(mu), geometry->coframe()(a, mu));
  return f;
}

VectorField frame_vector(const GeometryPtr& geometry, std::size_t a) {
  if (a >= geometry->dim()) throw FormError("frame index out of range");
  std::vector<RationalFn> comps;
  for (std::size_t mu = 0; mu < geometry->dim(); ++mu) comps.push_back(geometry->inverse_coframe()(mu, a));
  return VectorField(geometry, std::move(comps));
}

VectorField coordinate_vector(const GeometryPtr& geometry, std::size_t mu) {
  if (mu >= geometry->dim()) throw FormError("coordinate index out of range");
  VectorField v(geometry);
  std::vector<RationalFn> comps(geometry->dim(), geometry->zero());
  comps[mu] = geometry->one();
  return VectorField(geometry, std::move(comps));
}

Multivector to_multivector(const VectorField& v) {
  Multivector m(v.geometry(), 1);
  for (std::size_t mu = 0; mu < v.dim(); ++mu) m.add(single(mu), v[mu]);
  return m;
}

VectorField to_vector(const Multivector& m) {
  if (m.degree() != 1) throw FormError("expected a 1-vector");
  const Multivector c = m.basis() == Basis::coordinate ? m : change_basis(m, Basis::coordinate);
  std::vector<RationalFn> comps;
  for (std::size_t mu = 0; mu < c.dim(); ++mu) comps.push_back(c.component(single(mu)));
  return VectorField(m.geometry(), std::move(comps));
}

// ---------------------------------------------------------------------------
// algebra

Form wedge(const Form& a, const Form& b) { return wedge_impl(a, b); }
Multivector wedge(const Multivector& a, const Multivector& b) { return wedge_impl(a, b); }

Form ext_d(const Form& a) {
  if (a.basis() == Basis::frame) return change_basis(ext_d(change_basis(a, Basis::coordinate)), Basis::frame);
  Form out(a.geometry(), a.degree() + 1);
  const std::size_t n = a.dim();
  for (const auto& [index, c] : a.components())
    for (std::size_t mu = 0; mu < n; ++mu) {
      if (index & single(mu)) continue;
      const RationalFn dc = c.partial(mu);
      if (!dc.is_zero()) out.add(index | single(mu), signed_value(merge_sign(single(mu), index), dc));
    }
  return out;
}

Form interior(const VectorField& v, const Form& a) {
  check_same_geometry(v.geometry(), a.geometry());
  if (a.basis() == Basis::frame) return change_basis(interior(v, change_basis(a, Basis::coordinate)), Basis::frame);
  Form out(a.geometry(), a.degree() - 1);
  for (const auto& [index, c] : a.components()) {
    int k = 0;
    for (std::size_t mu : members(index)) {
      if (!v[mu].is_zero()) out.add(index & ~single(mu), signed_value((k & 1) ? -1 : 1, v[mu] * c));
      ++k;
    }
  }
  return out;
}

Form j_product(const VectorField& v, const Form& a) {
  const Form lambda = flat1(v);
  return wedge(a.basis() == Basis::frame ? change_basis(lambda, Basis::frame) : lambda, a);
}

VectorField sharp1(const Form& lambda) {
  if (lambda.degree() != 1) throw FormError("sharp of a non-1-form; use sharp()");
  const Form c = to_coordinate(lambda);
  const Geometry& g = c.geom();
  std::vector<RationalFn> comps(g.dim(), g.zero());
  for (std::size_t mu = 0; mu < g.dim(); ++mu)
    for (const auto& [index, value] : c.components()) {
      const std::size_t nu = members(index)[0];
      if (!g.inverse_metric()(mu, nu).is_zero()) comps[mu] += g.inverse_metric()(mu, nu) * value;
    }
  return VectorField(c.geometry(), std::move(comps));
}

Form flat1(const VectorField& v) {
  const Geometry& g = v.geom();
  Form out(v.geometry(), 1);
  for (std::size_t mu = 0; mu < g.dim(); ++mu)
    for (std::size_t nu = 0; nu < g.dim(); ++nu)
      if (!g.metric()(mu, nu).is_zero() && !v[nu].is_zero()) out.add(single(mu), g.metric()(mu, nu) * v[nu]);
  return out;
}

Multivector sharp(const Form& a) {
  const Form c = to_coordinate(a);
  Multivector out(c.geometry(), c.degree());
  if (c.is_zero()) return out;
  const MinorTable& minors = c.geom().inverse_metric_minors();
  for (IndexSet j : subsets(c.dim(), static_cast<std::size_t>(c.degree())))
    for (const auto& [i, value] : c.components()) {
      const RationalFn& m = minors(j, i);
      if (!m.is_zero()) out.add(j, m * value);
    }
  return out;
}

Form flat(const Multivector& m) {
  const Multivector c = m.basis() == Basis::coordinate ? m : change_basis(m, Basis::coordinate);
  Form out(c.geometry(), c.degree());
  if (c.is_zero()) return out;
  const MinorTable& minors = c.geom().metric_minors();
  for (IndexSet j : subsets(c.dim(), static_cast<std::size_t>(c.degree())))
    for (const auto& [i, value] : c.components()) {
      const RationalFn& g = minors(j, i);
      if (!g.is_zero()) out.add(j, g * value);
    }
  return out;
}

Form change_basis(const Form& a, Basis to) {
  if (a.basis() == to) return a;
  Form out(a.geometry(), a.degree(), to);
  if (a.is_zero()) return out;
  const Geometry& g = a.geom();
  const auto& targets = subsets(g.dim(), static_cast<std::size_t>(a.degree()));
  for (const auto& [i, value] : a.components())
    for (IndexSet j : targets) {
      // coordinate -> frame: dx^I = sum_A det(Einv[I, A]) e^A
      // frame -> coordinate: e^A = sum_J det(E[A, J]) dx^J
      const RationalFn& m = to == Basis::frame ? g.inverse_coframe_minors()(i, j) : g.coframe_minors()(i, j);
      if (!m.is_zero()) out.add(j, value * m);
    }
  return out;
}

Multivector change_basis(const Multivector& m, Basis to) {
  if (m.basis() == to) return m;
  Multivector out(m.geometry(), m.degree(), to);
  if (m.is_zero()) return out;
  const Geometry& g = m.geom();
  const auto& targets = subsets(g.dim(), static_cast<std::size_t>(m.degree()));
  for (const auto& [i, value] : m.components())
    for (IndexSet j : targets) {
      // coordinate -> frame: d_I = sum_A det(E[A, I]) e_A
      // frame -> coordinate: e_A = sum_J det(Einv[J, A]) d_J
      const RationalFn& c = to == Basis::frame ? g.coframe_minors()(j, i) : g.inverse_coframe_minors()(j, i);
      if (!c.is_zero()) out.add(j, value * c);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Lie derivatives

Form lie_form_components(const VectorField& v, const Form& a) {
  check_same_geometry(v.geometry(), a.geometry());
  if (a.basis() == Basis::frame)
    return change_basis(lie_form_components(v, change_basis(a, Basis::coordinate)), Basis::frame);
  Form out(a.geometry(), a.degree());
  for (const auto& [index, c] : a.components()) out.add(index, v.apply(c));
  // L_v dx^mu = d(v^mu) = d_s v^mu dx^s
  replace_each_factor(a, out, [&](std::size_t mu, std::size_t s) { return v[mu].partial(s); });
  return out;
}

Multivector lie_multivector(const VectorField& v, const Multivector& m) {
  check_same_geometry(v.geometry(), m.geometry());
  if (m.basis() == Basis::frame)
    return change_basis(lie_multivector(v, change_basis(m, Basis::coordinate)), Basis::frame);
  Multivector out(m.geometry(), m.degree());
  for (const auto& [index, c] : m.components()) out.add(index, v.apply(c));
  // L_v d_mu = [v, d_mu] = -(d_mu v^s) d_s
  replace_each_factor(m, out, [&](std::size_t mu, std::size_t s) { return -v[s].partial(mu); });
  return out;
}

Matrix lie_inverse_metric(const VectorField& v) {
  const Geometry& g = v.geom();
  const std::size_t n = g.dim();
  const Matrix& ginv = g.inverse_metric();
  Matrix out(n, g.nvars());
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k) {
      RationalFn acc = v.apply(ginv(m, k));
      for (std::size_t s = 0; s < n; ++s) {
        if (!ginv(s, k).is_zero()) acc -= ginv(s, k) * v[m].partial(s);
        if (!ginv(m, s).is_zero()) acc -= ginv(m, s) * v[k].partial(s);
      }
      out(m, k) = std::move(acc);
    }
  return out;
}

VectorField lie_bracket(const VectorField& u, const VectorField& v) {
  check_same_geometry(u.geometry(), v.geometry());
  std::vector<RationalFn> comps;
  for (std::size_t mu = 0; mu < u.dim(); ++mu) comps.push_back(u.apply(v[mu]) - v.apply(u[mu]));
  return VectorField(u.geometry(), std::move(comps));
}

Form covariant_derivative(const Form& a, std::size_t m) {
  if (a.basis() == Basis::frame)
    return change_basis(covariant_derivative(change_basis(a, Basis::coordinate), m), Basis::frame);
  const Geometry& g = a.geom();
  Form out(a.geometry(), a.degree());
  for (const auto& [index, c] : a.components()) out.add(index, c.partial(m));
  // nabla_m dx^nu = -Gamma^nu_{m s} dx^s
  replace_each_factor(a, out, [&](std::size_t nu, std::size_t s) { return -g.christoffel(nu, m, s); });
  return out;
}

// ---------------------------------------------------------------------------
// rendering

std::string to_string(const Form& a) { return render(a); }
std::string to_string(const Multivector& m) { return render(m); }
std::string to_string(const VectorField& v) { return render(to_multivector(v)); }

std::ostream& operator<<(std::ostream& os, const Form& a) { return os << to_string(a); }
std::ostream& operator<<(std::ostream& os, const Multivector& m) { return os << to_string(m); }

}  // namespace cartan
