#include "cartan/hodge.hpp"

namespace cartan {

Form volume_form(const GeometryPtr& geometry, Basis basis) {
  const IndexSet all = full_set(geometry->dim());
  if (basis == Basis::frame) return Form::basis_element(geometry, all, Basis::frame);
  Form w(geometry, static_cast<int>(geometry->dim()));
  w.add(all, geometry->coframe_determinant());
  return w;
}

Form star(const Form& a) {
  const Geometry& g = a.geom();
  const int n = static_cast<int>(g.dim());
  Form out(a.geometry(), n - a.degree(), a.basis());
  if (a.is_zero()) return out;
  const IndexSet all = full_set(g.dim());
  if (a.basis() == Basis::frame) {
    for (const auto& [index, c] : a.components()) {
      int sign = merge_sign(index, all & ~index);
      for (std::size_t k : members(index)) sign *= g.eta()[k];
      out.add(all & ~index, sign > 0 ? c : -c);
    }
    return out;
  }
  const auto& targets = subsets(g.dim(), static_cast<std::size_t>(n - a.degree()));
  for (const auto& [index, c] : a.components())
    for (IndexSet to : targets) {
      const RationalFn& h = g.hodge_coefficient(index, to);
      if (!h.is_zero()) out.add(to, c * h);
    }
  return out;
}

Form star_inv(const Form& a) {
  const int n = static_cast<int>(a.dim());
  const int exponent = (n - a.degree()) * (n + 1);
  const Form s = star(a);
  return (a.geom().signature_sign() < 0) ? -s.signed_by(exponent) : s.signed_by(exponent);
}

RationalFn form_inner(const Form& a, const Form& b) {
  if (a.degree() != b.degree())
    throw FormError("inner product of forms of degree " + std::to_string(a.degree()) + " and " +
                    std::to_string(b.degree()));
  if (a.basis() != b.basis()) throw FormError("inner product of operands in different bases");
  const Form top = star_inv(wedge(a, star(b)));
  return top.degree() == 0 ? top.as_scalar() : a.geom().zero();
}

RationalFn form_inner_components(const Form& a, const Form& b) {
  if (a.degree() != b.degree()) throw FormError("inner product of forms of unequal degree");
  const Form ac = to_coordinate(a);
  const Form bc = to_coordinate(b);
  const MinorTable& ginv = a.geom().inverse_metric_minors();
  RationalFn acc = a.geom().zero();
  for (const auto& [i, x] : ac.components())
    for (const auto& [j, y] : bc.components()) {
      const RationalFn& m = ginv(i, j);
      if (!m.is_zero()) acc += x * y * m;
    }
  return acc;
}

Form codifferential(const Form& a) {
  return star_inv(ext_d(star(a))).signed_by(a.degree());
}

Form codifferential_via_connection(const Form& a) {
  const Form c = to_coordinate(a);
  const Geometry& g = c.geom();
  Form out(c.geometry(), c.degree() - 1);
  if (c.degree() <= 0) return a.basis() == Basis::frame ? change_basis(out, Basis::frame) : out;
  for (std::size_t mu = 0; mu < g.dim(); ++mu) {
    const Form nabla = covariant_derivative(c, mu);
    if (nabla.is_zero()) continue;
    for (std::size_t nu = 0; nu < g.dim(); ++nu) {
      const RationalFn& ginv = g.inverse_metric()(mu, nu);
      if (ginv.is_zero()) continue;
      out -= interior(coordinate_vector(c.geometry(), nu), nabla).scaled(ginv);
    }
  }
  return a.basis() == Basis::frame ? change_basis(out, Basis::frame) : out;
}

Form laplace_de_rham(const Form& a) {
  return -(ext_d(codifferential(a)) + codifferential(ext_d(a)));
}

RationalFn divergence(const VectorField& v) {
  return -codifferential(flat1(v)).as_scalar();
}

}  // namespace cartan
