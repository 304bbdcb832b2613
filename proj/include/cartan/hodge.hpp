#ifndef CARTAN_HODGE_HPP
#define CARTAN_HODGE_HPP

#include "cartan/exterior.hpp"

namespace cartan {

/// omega = e^1 ^ ... ^ e^n, in the requested basis.
Form volume_form(const GeometryPtr& geometry, Basis basis = Basis::coordinate);

/// Hodge star.  In the frame basis *e^A = eta_A sign(A, A^c) e^{A^c}; the
/// coordinate-basis result uses the same rule through the precomputed
/// coordinate matrix of the geometry.  The output keeps the input basis.
Form star(const Form& a);
/// Inverse star via the sign law: for a b-form, *^-1 = sgn(g) (-1)^{(n-b)(n+1)} *.
Form star_inv(const Form& a);

/// (a, b) = *^-1(a ^ *b); FormError on unequal degrees.
RationalFn form_inner(const Form& a, const Form& b);
/// The same pairing as sum_{I,J} a_I b_J det(g^-1[I, J]).
RationalFn form_inner_components(const Form& a, const Form& b);

/// delta a = (-1)^a *^-1 d * a.
Form codifferential(const Form& a);
/// delta a = -g^{mu nu} (nabla_mu a)_{nu ...}.
Form codifferential_via_connection(const Form& a);
/// Box = -(d delta + delta d).
Form laplace_de_rham(const Form& a);
/// div(v) = -delta(flat v).
RationalFn divergence(const VectorField& v);

}  // namespace cartan

#endif  // CARTAN_HODGE_HPP
