// Ground-truth checks of the kernel: d, *, delta, musical maps, classical
// interior and creator operators.

#include "catalog.hpp"

namespace cartan::verify::catalog {

namespace {

RationalFn metric_pairing(const VectorField& u, const VectorField& v) {
  const Geometry& g = u.geom();
  RationalFn acc = g.zero();
  for (std::size_t mu = 0; mu < g.dim(); ++mu)
    for (std::size_t nu = 0; nu < g.dim(); ++nu)
      if (!g.metric()(mu, nu).is_zero()) acc += g.metric()(mu, nu) * u[mu] * v[nu];
  return acc;
}

/// Multivector components copied verbatim into a form, for comparisons.
Form as_components(const Multivector& m) {
  Form f(m.geometry(), m.degree(), m.basis());
  for (const auto& [index, c] : m.components()) f.add(index, c);
  return f;
}

std::string deg_label(const std::string& what, int p) { return what + " [degree " + std::to_string(p) + "]"; }

}  // namespace

void add_kernel_checks(std::vector<IdentityCheck>& out) {
  out.push_back({"kernel_dd_zero", "d d a = 0", 1, 100, false, false, [](Trial& t) {
                   std::vector<Equation> eqs;
                   for (int p = 0; p <= t.dim(); ++p) {
                     const Form a = t.form("a" + std::to_string(p), p);
                     eqs.push_back({deg_label("d d a", p), d(d(a)), Form(t.geometry(), p + 2)});
                   }
                   return eqs;
                 }});
  out.push_back({"kernel_codiff_nilpotent", "delta delta a = 0", 1, 100, false, false, [](Trial& t) {
                   std::vector<Equation> eqs;
                   for (int p = 0; p <= t.dim(); ++p) {
                     const Form a = t.form("a" + std::to_string(p), p);
                     eqs.push_back({deg_label("delta delta a", p), delta(delta(a)), Form(t.geometry(), p - 2)});
                   }
                   return eqs;
                 }});
  out.push_back({"kernel_star_star_sign", "**a = sgn(g) (-1)^{a(n+1)} a", 1, 100, false, false, [](Trial& t) {
                   std::vector<Equation> eqs;
                   const int n = t.dim();
                   const int sg = t.geometry()->signature_sign();
                   for (int p = 0; p <= n; ++p) {
                     const Form a = t.form("a" + std::to_string(p), p);
                     const Form expected = a.signed_by(p * (n + 1) + (sg < 0 ? 1 : 0));
                     eqs.push_back({deg_label("**a", p), star(star(a)), expected});
                   }
                   return eqs;
                 }});
  out.push_back({"kernel_star_one_volume", "*1 = omega, *phi = phi omega", 1, 100, false, false, [](Trial& t) {
                   const auto& g = t.geometry();
                   const RationalFn phi = t.scalar("phi");
                   return std::vector<Equation>{
                       {"*1", star(scalar_form(g, g->one())), volume_form(g)},
                       {"*1 in the frame", star(change_basis(scalar_form(g, g->one()), Basis::frame)),
                        volume_form(g, Basis::frame)},
                       {"omega frame -> coordinate", change_basis(volume_form(g, Basis::frame), Basis::coordinate),
                        volume_form(g)},
                       {"*phi", star(scalar_form(g, phi)), volume_form(g).scaled(phi)}};
                 }});
  out.push_back({"kernel_star_volume_sign", "*omega = sgn(g)", 1, 100, false, false, [](Trial& t) {
                   const auto& g = t.geometry();
                   const RationalFn phi = t.scalar("phi");
                   const Form sg = scalar_form(g, g->constant(Rational(g->signature_sign())));
                   return std::vector<Equation>{
                       {"*omega", star(volume_form(g)), sg},
                       {"*(phi omega)", star(volume_form(g).scaled(phi)), sg.scaled(phi)}};
                 }});
  out.push_back({"kernel_flat_sharp_identity", "flat sharp a = a", 1, 100, false, false, [](Trial& t) {
                   std::vector<Equation> eqs;
                   for (int p = 0; p <= t.dim(); ++p) {
                     const Form a = t.form("a" + std::to_string(p), p);
                     eqs.push_back({deg_label("flat sharp a", p), flat(sharp(a)), a});
                   }
                   const Form lambda = t.one_form("lambda");
                   eqs.push_back({"flat1 sharp1 lambda", flat1(sharp1(lambda)), lambda});
                   return eqs;
                 }});

  out.push_back({"kernel_sharp_flat_identity", "sharp flat m = m", 0, 100, false, false, [](Trial& t) {
                   std::vector<Equation> eqs;
                   for (int p = 0; p <= t.dim(); ++p) {
                     // A multivector with polynomial components: reinterpret a random form.
                     const Form a = t.form("m" + std::to_string(p), p);
                     Multivector m(t.geometry(), p);
                     for (const auto& [index, c] : a.components()) m.add(index, c);
                     eqs.push_back({deg_label("sharp flat m", p), as_components(sharp(flat(m))), a});
                   }
                   const VectorField v = t.vector("v");
                   eqs.push_back({"sharp1 flat1 v", as_components(to_multivector(sharp1(flat1(v)))),
                                  as_components(to_multivector(v))});
                   return eqs;
                 }});
  out.push_back({"kernel_star_inverse", "*^-1 * a = a = * *^-1 a", 0, 100, false, false, [](Trial& t) {
                   std::vector<Equation> eqs;
                   for (int p = 0; p <= t.dim(); ++p) {
                     const Form a = t.form("a" + std::to_string(p), p);
                     eqs.push_back({deg_label("*^-1 * a", p), star_inv(star(a)), a});
                     eqs.push_back({deg_label("* *^-1 a", p), star(star_inv(a)), a});
                   }
                   return eqs;
                 }});
  out.push_back({"kernel_wedge_graded_commutative", "a ^ b = (-1)^{ab} b ^ a", 0, 100, false, false, [](Trial& t) {
                   const int a_deg = t.degree(0, t.dim());
                   const int b_deg = t.degree(0, t.dim());
                   const Form a = t.form("a", a_deg);
                   const Form b = t.form("b", b_deg);
                   const Form c = t.form("c", t.degree(0, t.dim()));
                   return std::vector<Equation>{
                       {"a^b", jp(a, b), jp(b, a).signed_by(a_deg * b_deg)},
                       {"(a^b)^c", jp(jp(a, b), c), jp(a, jp(b, c))}};
                 }});
  out.push_back({"kernel_basis_round_trip", "coordinate -> frame -> coordinate = id; * agrees in both bases", 0, 100,
                 false, false, [](Trial& t) {
                   std::vector<Equation> eqs;
                   for (int p = 0; p <= t.dim(); ++p) {
                     const Form a = t.form("a" + std::to_string(p), p);
                     const Form framed = change_basis(a, Basis::frame);
                     eqs.push_back({deg_label("round trip", p), change_basis(framed, Basis::coordinate), a});
                     eqs.push_back({deg_label("* frame vs coordinate", p), change_basis(star(framed), Basis::coordinate),
                                    star(a)});
                     eqs.push_back({deg_label("d frame vs coordinate", p), change_basis(d(framed), Basis::coordinate),
                                    d(a)});
                   }
                   return eqs;
                 }});
  out.push_back({"kernel_inner_componentwise", "(a, b) = *^-1(a ^ *b) = a_I b_J det(g^-1[I,J]) = (b, a)", 0, 100,
                 false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", p);
                   const auto& g = t.geometry();
                   return std::vector<Equation>{
                       {"(a,b) components", scalar_form(g, form_inner(a, b)), scalar_form(g, form_inner_components(a, b))},
                       {"(a,b) = (b,a)", scalar_form(g, form_inner(a, b)), scalar_form(g, form_inner(b, a))}};
                 }});
  out.push_back({"kernel_laplacian_scalar", "box phi = g^{mn}(d_m d_n phi - Gamma^l_{mn} d_l phi)", 0, 100, false, false,
                 [](Trial& t) {
                   const auto& g = t.geometry();
                   const RationalFn phi = t.scalar("phi");
                   const std::size_t n = g->dim();
                   RationalFn acc = g->zero();
                   for (std::size_t m = 0; m < n; ++m)
                     for (std::size_t k = 0; k < n; ++k) {
                       const RationalFn& ginv = g->inverse_metric()(m, k);
                       if (ginv.is_zero()) continue;
                       RationalFn hess = phi.partial(m).partial(k);
                       for (std::size_t l = 0; l < n; ++l) hess -= g->christoffel(l, m, k) * phi.partial(l);
                       acc += ginv * hess;
                     }
                   return std::vector<Equation>{{"box phi", box(scalar_form(g, phi)), scalar_form(g, acc)}};
                 }});

  out.push_back({"basic_interior_leibniz", "i_v(a ^ b) = (i_v a) ^ b + (-1)^a a ^ i_v b", 0, 100, false, false,
                 [](Trial& t) {
                   const int a_deg = t.degree(0, t.dim());
                   const Form a = t.form("a", a_deg);
                   const Form b = t.form("b", t.degree(0, t.dim() - a_deg));
                   const VectorField v = t.vector("v");
                   return std::vector<Equation>{{"i_v(a^b)", interior(v, jp(a, b)),
                                                 jp(interior(v, a), b) + jp(a, interior(v, b)).signed_by(a_deg)}};
                 }});
  out.push_back({"basic_interior_antisymmetry", "i_u i_v = -i_v i_u, j_v j_v = 0", 0, 100, false, false, [](Trial& t) {
                   const Form a = t.form("a", t.degree(0, t.dim()));
                   const VectorField u = t.vector("u");
                   const VectorField v = t.vector("v");
                   return std::vector<Equation>{
                       {"i_u i_v a", interior(u, interior(v, a)), -interior(v, interior(u, a))},
                       {"i_v i_v a", interior(v, interior(v, a)), Form(t.geometry(), a.degree() - 2)},
                       {"j_v j_v a", j_product(v, j_product(v, a)), Form(t.geometry(), a.degree() + 2)}};
                 }});
  out.push_back({"basic_ij_anticommutator", "i_u j_v + j_v i_u = g(u, v)", 0, 100, false, false, [](Trial& t) {
                   const Form a = t.form("a", t.degree(0, t.dim()));
                   const VectorField u = t.vector("u");
                   const VectorField v = t.vector("v");
                   return std::vector<Equation>{{"(i_u j_v + j_v i_u) a",
                                                 interior(u, j_product(v, a)) + j_product(v, interior(u, a)),
                                                 a.scaled(metric_pairing(u, v))}};
                 }});
  out.push_back({"basic_star_interior", "* i_v a = -(-1)^a j_v * a", 0, 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   const VectorField v = t.vector("v");
                   return std::vector<Equation>{{"* i_v a", star(interior(v, a)), -j_product(v, star(a)).signed_by(p)}};
                 }});
  out.push_back({"basic_star_creator", "* j_v a = (-1)^a i_v * a", 0, 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   const VectorField v = t.vector("v");
                   return std::vector<Equation>{{"* j_v a", star(j_product(v, a)), interior(v, star(a)).signed_by(p)}};
                 }});
  out.push_back({"basic_cartan_formula", "L_v = i_v d + d i_v (against the component formula)", 0, 100, false, false,
                 [](Trial& t) {
                   const Form a = t.form("a", t.degree(0, t.dim()));
                   const VectorField v = t.vector("v");
                   return std::vector<Equation>{{"L_v a", lie(v, a), lie_form_components(v, a)}};
                 }});
  out.push_back({"basic_creator_wedge_sign", "(j_v a) ^ b = (-1)^a a ^ j_v b", 0, 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", t.degree(0, t.dim()));
                   const VectorField v = t.vector("v");
                   return std::vector<Equation>{
                       {"(j_v a)^b", jp(j_product(v, a), b), jp(a, j_product(v, b)).signed_by(p)}};
                 }});
  out.push_back({"basic_codiff_connection", "delta a = -g^{mn} (nabla_m a)_{n...}", 0, 100, false, false, [](Trial& t) {
                   std::vector<Equation> eqs;
                   for (int p = 0; p <= t.dim(); ++p) {
                     const Form a = t.form("a" + std::to_string(p), p);
                     eqs.push_back({deg_label("delta a", p), delta(a), codifferential_via_connection(a)});
                   }
                   return eqs;
                 }});
  out.push_back({"basic_box_commutes_d", "box d a = d box a", 0, 100, false, false, [](Trial& t) {
                   const Form a = t.form("a", t.degree(0, t.dim()));
                   return std::vector<Equation>{{"[box, d] a", box(d(a)), d(box(a))}};
                 }});
  out.push_back({"basic_divergence_volume", "L_v omega = div(v) omega", 0, 100, false, false, [](Trial& t) {
                   const VectorField v = t.vector("v");
                   const Form w = volume_form(t.geometry());
                   return std::vector<Equation>{
                       {"L_v omega", lie_form_components(v, w), w.scaled(divergence(v))}};
                 }});
}

}  // namespace cartan::verify::catalog
