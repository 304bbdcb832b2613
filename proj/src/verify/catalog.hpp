#ifndef CARTAN_VERIFY_CATALOG_HPP
#define CARTAN_VERIFY_CATALOG_HPP

#include <vector>

#include "cartan/verify.hpp"

namespace cartan::verify::catalog {

void add_kernel_checks(std::vector<IdentityCheck>& out);
void add_bracket_checks(std::vector<IdentityCheck>& out);
void add_interior_checks(std::vector<IdentityCheck>& out);
void add_operator_checks(std::vector<IdentityCheck>& out);

// Shorthands shared by the catalog files.

inline Form scalar_form(const GeometryPtr& g, const RationalFn& f) { return Form::scalar(g, f); }
inline Form d(const Form& a) { return ext_d(a); }
inline Form delta(const Form& a) { return codifferential(a); }
inline Form box(const Form& a) { return laplace_de_rham(a); }
inline Form ip(const Form& a, const Form& b) { return gen_interior(a, b); }
inline Form jp(const Form& a, const Form& b) { return wedge(a, b); }
inline Form sn(const Form& a, const Form& b) { return sn_bracket(a, b); }
/// *^-1 L_v *.
inline Form conj_lie(const VectorField& v, const Form& a) { return star_inv(lie(v, star(a))); }
/// flat L_v sharp, through multivectors.
inline Form transported_lie(const VectorField& v, const Form& a) { return flat(lie_multivector(v, sharp(a))); }
/// (-1)^k as a coefficient.
inline int sign_of(int k) { return (k & 1) ? -1 : 1; }
inline Form signed_form(int k, const Form& a) { return a.signed_by(k); }

}  // namespace cartan::verify::catalog

#endif  // CARTAN_VERIFY_CATALOG_HPP
