// Schouten-Nijenhuis bracket: the four evaluation routes, the Gerstenhaber
// axioms, the codifferential defect family and the Hodge-Lie chain.

#include "catalog.hpp"

namespace cartan::verify::catalog {

namespace {

std::string pair_label(const std::string& what, int a, int b) {
  return what + " [a=" + std::to_string(a) + ", b=" + std::to_string(b) + "]";
}

/// All (a, b) with 0 <= a, b <= n and a + b - 1 <= n.
template <class F>
std::vector<Equation> over_degree_pairs(Trial& t, F&& f) {
  std::vector<Equation> eqs;
  for (int a = 0; a <= t.dim(); ++a)
    for (int b = 0; b <= t.dim() && a + b - 1 <= t.dim(); ++b) {
      const Form alpha = t.form("alpha" + std::to_string(a) + std::to_string(b), a);
      const Form beta = t.form("beta" + std::to_string(a) + std::to_string(b), b);
      f(eqs, alpha, beta, a, b);
    }
  return eqs;
}

/// (L_{sharp lambda} g~)^{mn} j_m i_n b in coordinates.
Form metric_variation_term(const VectorField& v, const Form& b) {
  const auto& g = b.geometry();
  const Matrix lg = lie_inverse_metric(v);
  Form out(g, b.degree());
  for (std::size_t m = 0; m < g->dim(); ++m)
    for (std::size_t k = 0; k < g->dim(); ++k) {
      if (lg(m, k).is_zero()) continue;
      out += j_product(coordinate_vector(g, m), interior(coordinate_vector(g, k), b)).scaled(lg(m, k));
    }
  return out;
}

}  // namespace

void add_bracket_checks(std::vector<IdentityCheck>& out) {
  // --- evaluation routes ---------------------------------------------------
  out.push_back({"eq13_components_coordinate",
                 "[[a,b]] = sum_r a^(r) ^ (d b_K, dx^r) - (d a_K, dx^r) ^ b_(r) + a^(r) ^ b^(s) ^ [[dx^r, dx^s]]", 2, 100,
                 false, false, [](Trial& t) {
                   return over_degree_pairs(t, [](auto& eqs, const Form& a, const Form& b, int p, int q) {
                     eqs.push_back({pair_label("coordinate route", p, q), sn(a, b), sn_bracket_components(a, b, false)});
                   });
                 }});
  out.push_back({"eq13_components_frame",
                 "[[a,b]] = sum_r a^(r) ^ (d b_K, e^r) - (d a_K, e^r) ^ b_(r) + a^(r) ^ b^(s) ^ c~^{rs}_k e^k", 2, 100,
                 false, true, [](Trial& t) {
                   return over_degree_pairs(t, [&t](auto& eqs, const Form& a, const Form& b, int p, int q) {
                     BracketTerms terms{Form(a.geometry(), 0), Form(a.geometry(), 0), Form(a.geometry(), 0)};
                     const Form via_frame = sn_bracket_components(a, b, true, &terms);
                     if (!terms.anholonomy.is_zero()) t.witness();
                     eqs.push_back({pair_label("frame route", p, q), sn(a, b), via_frame});
                   });
                 }});
  out.push_back({"eq23_nabla_representation", "[[a,b]] = -(nabla_m a) ^ i^m b + (-1)^{a+1} (i^m a) ^ nabla_m b", 2, 100,
                 false, false, [](Trial& t) {
                   return over_degree_pairs(t, [](auto& eqs, const Form& a, const Form& b, int p, int q) {
                     eqs.push_back({pair_label("nabla route", p, q), sn(a, b), sn_bracket_nabla(a, b)});
                   });
                 }});
  out.push_back({"eq08_one_form_definition", "[[lambda, b]] = flat(L_{sharp lambda} sharp b)", 2, 100, false, false,
                 [](Trial& t) {
                   std::vector<Equation> eqs;
                   const Form lambda = t.one_form("lambda");
                   for (int q = 0; q <= t.dim(); ++q) {
                     const Form b = t.form("beta" + std::to_string(q), q);
                     eqs.push_back({pair_label("definition", 1, q), sn(lambda, b), sn_bracket_one_form_def(lambda, b)});
                   }
                   return eqs;
                 }});
  out.push_back({"eq23b_koszul",
                 "[[a,b]] = (-1)^a [-i^m nabla_m (a^b) + (i^m nabla_m a) ^ b + (-1)^a a ^ i^m nabla_m b]", 0, 100, false,
                 false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", t.degree(0, t.dim() + 1 - p));
                   const auto D = [](const Form& f) { return -codifferential_via_connection(f); };
                   const Form rhs = (-D(jp(a, b)) + jp(D(a), b) + jp(a, D(b)).signed_by(p)).signed_by(p);
                   return std::vector<Equation>{{"Koszul form", sn(a, b), rhs}};
                 }});

  // --- Gerstenhaber axioms -------------------------------------------------
  out.push_back({"eq05_graded_antisymmetry", "[[a,b]] = -(-1)^{(a-1)(b-1)} [[b,a]]", 3, 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const int q = t.degree(0, t.dim() + 1 - p);
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   return std::vector<Equation>{{"antisymmetry", sn(a, b), -sn(b, a).signed_by((p - 1) * (q - 1))}};
                 }});
  out.push_back({"eq06_right_leibniz", "[[a, b^c]] = [[a,b]] ^ c + (-1)^{(a-1)b} b ^ [[a,c]]", 3, 100, false, false,
                 [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const int q = t.degree(0, t.dim());
                   const int r = t.degree(0, t.dim() - q);
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   const Form c = t.form("c", r);
                   return std::vector<Equation>{
                       {"right Leibniz", sn(a, jp(b, c)), jp(sn(a, b), c) + jp(b, sn(a, c)).signed_by((p - 1) * q)}};
                 }});
  out.push_back({"eq16_left_expansion", "[[a^b, c]] = a ^ [[b,c]] + (-1)^{ab} b ^ [[a,c]]", 3, 100, false, false,
                 [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const int q = t.degree(0, t.dim() - p);
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   const Form c = t.form("c", t.degree(0, t.dim()));
                   return std::vector<Equation>{
                       {"left expansion", sn(jp(a, b), c), jp(a, sn(b, c)) + jp(b, sn(a, c)).signed_by(p * q)}};
                 }});
  out.push_back({"eq14_graded_jacobi",
                 "(-1)^{(a-1)(c-1)}[[a,[[b,c]]]] + (-1)^{(b-1)(a-1)}[[b,[[c,a]]]] + (-1)^{(c-1)(b-1)}[[c,[[a,b]]]] = 0", 3,
                 100, false, false, [](Trial& t) {
                   const int n = t.dim();
                   const int p = t.degree(0, n);
                   const int q = t.degree(0, n + 2 - p);
                   const int r = t.degree(0, n + 2 - p - q);
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   const Form c = t.form("c", r);
                   const Form cyclic = sn(a, sn(b, c)).signed_by((p - 1) * (r - 1)) +
                                       sn(b, sn(c, a)).signed_by((q - 1) * (p - 1)) +
                                       sn(c, sn(a, b)).signed_by((r - 1) * (q - 1));
                   return std::vector<Equation>{
                       {"cyclic sum", cyclic, Form(t.geometry(), p + q + r - 2)},
                       {"derivation form", sn(a, sn(b, c)),
                        sn(sn(a, b), c) + sn(b, sn(a, c)).signed_by((p - 1) * (q - 1))}};
                 }});
  out.push_back({"eq07_scalar_bracket_zero", "[[phi, psi]] = 0", 3, 100, false, false, [](Trial& t) {
                   const auto& g = t.geometry();
                   const Form phi = scalar_form(g, t.scalar("phi"));
                   const Form psi = scalar_form(g, t.scalar("psi"));
                   return std::vector<Equation>{
                       {"canonical", sn(phi, psi), Form(g, -1)},
                       {"component formula", sn_bracket_components(phi, psi, true), Form(g, -1)}};
                 }});
  out.push_back({"eq17_scalar_oneform_chain",
                 "[[phi,lambda]] = -[[lambda,phi]] = -L_{sharp lambda} phi = -i^lambda d phi = -(lambda, d phi) = -i^{d phi} lambda",
                 3, 100, false, false, [](Trial& t) {
                   const auto& g = t.geometry();
                   const RationalFn phi_fn = t.scalar("phi");
                   const Form phi = scalar_form(g, phi_fn);
                   const Form lambda = t.one_form("lambda");
                   const Form lhs = sn(phi, lambda);
                   return std::vector<Equation>{
                       {"-[[lambda,phi]]", lhs, -sn(lambda, phi)},
                       {"-L phi", lhs, -lie(sharp1(lambda), phi)},
                       {"-i^lambda d phi", lhs, -interior(sharp1(lambda), d(phi))},
                       {"-(lambda, d phi)", lhs, -scalar_form(g, form_inner(lambda, d(phi)))},
                       {"-i^{d phi} lambda", lhs, -ip(d(phi), lambda)}};
                 }});
  out.push_back({"eq18_scalar_form", "[[phi, a]] = -i^{d phi} a = (-1)^a [[a, phi]]", 3, 100, false, false,
                 [](Trial& t) {
                   const auto& g = t.geometry();
                   const Form phi = scalar_form(g, t.scalar("phi"));
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   return std::vector<Equation>{{"-i^{d phi} a", sn(phi, a), -ip(d(phi), a)},
                                                {"(-1)^a [[a,phi]]", sn(phi, a), sn(a, phi).signed_by(p)}};
                 }});
  out.push_back({"eq06_gtilde_decomposition", "[[lambda, b]] = (L_{sharp lambda} g~)^{mn} j_m i_n b + L_{sharp lambda} b",
                 3, 100, false, false, [](Trial& t) {
                   const Form lambda = t.one_form("lambda");
                   const Form b = t.form("b", t.degree(0, t.dim()));
                   const VectorField v = sharp1(lambda);
                   return std::vector<Equation>{
                       {"decomposition", sn(lambda, b), metric_variation_term(v, b) + lie(v, b)}};
                 }});
  out.push_back({"misc_nested_scalar",
                 "[[phi_a, ... [[phi_1, a]] ...]] = (-1)^a i^{d phi_a} ... i^{d phi_1} a = (-1)^a (d phi_1 ^ ... ^ d phi_a, a)",
                 3, 100, false, false, [](Trial& t) {
                   const auto& g = t.geometry();
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   Form nested = a;
                   Form inserted = a;
                   Form product = scalar_form(g, g->one());
                   for (int k = 1; k <= p; ++k) {
                     const Form phi = scalar_form(g, t.scalar("phi" + std::to_string(k)));
                     nested = sn(phi, nested);
                     inserted = ip(d(phi), inserted);
                     product = jp(product, d(phi));
                   }
                   return std::vector<Equation>{
                       {"nested = inserted", nested, inserted.signed_by(p)},
                       {"inserted = i^{product}", inserted, ip(product, a)},
                       {"nested = pairing", nested, scalar_form(g, form_inner(product, a)).signed_by(p)}};
                 }});
  out.push_back({"misc_lie_commutator",
                 "[[l1,[[l2,a]]]] - [[l2,[[l1,a]]]] = [[l3, a]], l3 = flat[sharp l1, sharp l2]", 3, 100, false, false,
                 [](Trial& t) {
                   const Form l1 = t.one_form("lambda1");
                   const Form l2 = t.one_form("lambda2");
                   const Form a = t.form("a", t.degree(0, t.dim()));
                   const Form l3 = flat1(lie_bracket(sharp1(l1), sharp1(l2)));
                   return std::vector<Equation>{
                       {"commutator", sn(l1, sn(l2, a)) - sn(l2, sn(l1, a)), sn(l3, a)},
                       {"[[l1,l2]] = l3", sn(l1, l2), l3}};
                 }});

  // --- codifferential defect and Laplacian of products ---------------------
  out.push_back({"eq20_delta_wedge", "delta(a^b) = (delta a) ^ b + (-1)^a a ^ delta b + (-1)^a [[a,b]]", 4, 100, false,
                 false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", t.degree(0, t.dim() - p));
                   const Form rhs = jp(delta(a), b) + jp(a, delta(b)).signed_by(p) + sn(a, b).signed_by(p);
                   return std::vector<Equation>{{"delta(a^b)", delta(jp(a, b)), rhs}};
                 }});
  out.push_back({"eq20_base_scalar", "delta(phi b) = phi delta b + [[phi, b]]", 4, 100, false, false, [](Trial& t) {
                   const auto& g = t.geometry();
                   const RationalFn phi = t.scalar("phi");
                   const Form b = t.form("b", t.degree(0, t.dim()));
                   return std::vector<Equation>{{"delta(phi b)", delta(b.scaled(phi)),
                                                 delta(b).scaled(phi) + sn(scalar_form(g, phi), b)}};
                 }});
  out.push_back({"eq20_base_oneform",
                 "delta(lambda^b) = -lambda ^ delta b - *^-1 L_{sharp lambda} * b = (delta lambda) b - lambda ^ delta b - [[lambda,b]]",
                 4, 100, false, false, [](Trial& t) {
                   const Form lambda = t.one_form("lambda");
                   const Form b = t.form("b", t.degree(0, t.dim() - 1));
                   const Form lhs = delta(jp(lambda, b));
                   return std::vector<Equation>{
                       {"Hodge-Lie form", lhs, -jp(lambda, delta(b)) - conj_lie(sharp1(lambda), b)},
                       {"bracket form", lhs,
                        b.scaled(delta(lambda).as_scalar()) - jp(lambda, delta(b)) - sn(lambda, b)}};
                 }});
  out.push_back({"eq22_delta_bracket", "delta [[a,b]] = [[delta a, b]] - (-1)^a [[a, delta b]]", 4, 100, false, false,
                 [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", t.degree(0, t.dim() + 1 - p));
                   return std::vector<Equation>{
                       {"delta [[a,b]]", delta(sn(a, b)), sn(delta(a), b) - sn(a, delta(b)).signed_by(p)}};
                 }});
  out.push_back({"eq24_box_wedge",
                 "box(a^b) = (box a) ^ b + a ^ box b - [[a, d b]] + (-1)^a [[d a, b]] - (-1)^a d [[a,b]]", 4, 100, false,
                 false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", t.degree(0, t.dim() - p));
                   const Form rhs = jp(box(a), b) + jp(a, box(b)) - sn(a, d(b)) + sn(d(a), b).signed_by(p) -
                                    d(sn(a, b)).signed_by(p);
                   return std::vector<Equation>{{"box(a^b)", box(jp(a, b)), rhs}};
                 }});
  out.push_back({"eq25_box_scalar_scalar", "box(phi psi) = psi box phi + phi box psi + 2 (d phi, d psi)", 4, 100, false,
                 false, [](Trial& t) {
                   const auto& g = t.geometry();
                   const RationalFn phi = t.scalar("phi");
                   const RationalFn psi = t.scalar("psi");
                   const Form fphi = scalar_form(g, phi);
                   const Form fpsi = scalar_form(g, psi);
                   const Form rhs = box(fphi).scaled(psi) + box(fpsi).scaled(phi) +
                                    scalar_form(g, form_inner(d(fphi), d(fpsi))).scaled(Rational(2));
                   return std::vector<Equation>{{"box(phi psi)", box(scalar_form(g, phi * psi)), rhs}};
                 }});
  out.push_back({"eq26_box_scalar_oneform",
                 "box(phi lambda) = phi box lambda + L_{sharp d phi} lambda + *^-1 L_{sharp d phi} * lambda = phi box lambda + L_{sharp d phi} lambda - (delta lambda) d phi + delta(lambda ^ d phi)",
                 4, 100, false, false, [](Trial& t) {
                   const auto& g = t.geometry();
                   const RationalFn phi = t.scalar("phi");
                   const Form lambda = t.one_form("lambda");
                   const Form dphi = d(scalar_form(g, phi));
                   const VectorField v = sharp1(dphi);
                   const Form lhs = box(lambda.scaled(phi));
                   return std::vector<Equation>{
                       {"first line", lhs, box(lambda).scaled(phi) + lie(v, lambda) + conj_lie(v, lambda)},
                       {"second line", lhs,
                        box(lambda).scaled(phi) + lie(v, lambda) -
                            dphi.scaled(delta(lambda).as_scalar()) + delta(jp(lambda, dphi))}};
                 }});
  out.push_back({"eq27_box_scalar_form",
                 "box(phi b) = (box phi) b + phi box b + L_{sharp d phi} b + flat L_{sharp d phi} sharp b = phi box b + L_{sharp d phi} b + *^-1 L_{sharp d phi} * b",
                 4, 100, false, false, [](Trial& t) {
                   const auto& g = t.geometry();
                   const RationalFn phi = t.scalar("phi");
                   const Form b = t.form("b", t.degree(0, t.dim()));
                   const Form dphi = d(scalar_form(g, phi));
                   const VectorField v = sharp1(dphi);
                   const Form lhs = box(b.scaled(phi));
                   return std::vector<Equation>{
                       {"first line", lhs,
                        b.scaled(box(scalar_form(g, phi)).as_scalar()) + box(b).scaled(phi) + lie(v, b) +
                            transported_lie(v, b)},
                       {"second line", lhs, box(b).scaled(phi) + lie(v, b) + conj_lie(v, b)}};
                 }});
  out.push_back({"eq28_box_oneform_oneform",
                 "box(lambda^tau) = (box lambda)^tau + lambda^box tau - flat L_{sharp lambda} sharp d tau + flat L_{sharp tau} sharp d lambda + d flat L_{sharp lambda} sharp tau = -(delta d lambda)^tau + lambda^box tau + (delta tau) d lambda - *^-1 L_{sharp lambda} * d tau + *^-1 L_{sharp tau} * d lambda + d *^-1 L_{sharp lambda} * tau",
                 4, 100, false, false, [](Trial& t) {
                   const Form lambda = t.one_form("lambda");
                   const Form tau = t.one_form("tau");
                   const VectorField vl = sharp1(lambda);
                   const VectorField vt = sharp1(tau);
                   const Form lhs = box(jp(lambda, tau));
                   const Form first = jp(box(lambda), tau) + jp(lambda, box(tau)) - transported_lie(vl, d(tau)) +
                                      transported_lie(vt, d(lambda)) + d(transported_lie(vl, tau));
                   const Form second = -jp(delta(d(lambda)), tau) + jp(lambda, box(tau)) +
                                       d(lambda).scaled(delta(tau).as_scalar()) - conj_lie(vl, d(tau)) +
                                       conj_lie(vt, d(lambda)) + d(conj_lie(vl, tau));
                   return std::vector<Equation>{{"first line", lhs, first}, {"second line", lhs, second}};
                 }});

  // --- Hodge-Lie chain -----------------------------------------------------
  out.push_back({"eq19_hodge_lie_wedge",
                 "*^-1 L_{sharp tau} * (lambda ^ g) = lambda ^ *^-1 L_{sharp tau} * g + [[tau, lambda]] ^ g", 5, 100,
                 false, false, [](Trial& t) {
                   const Form tau = t.one_form("tau");
                   const Form lambda = t.one_form("lambda");
                   const Form gamma = t.form("gamma", t.degree(0, t.dim() - 1));
                   const VectorField v = sharp1(tau);
                   return std::vector<Equation>{
                       {"wedge", conj_lie(v, jp(lambda, gamma)), jp(lambda, conj_lie(v, gamma)) + jp(sn(tau, lambda), gamma)}};
                 }});
  out.push_back({"eq19b_hodge_lie_unit",
                 "*^-1 L_{sharp tau} * 1 = -delta tau;  *^-1 L_{sharp tau} * lambda = -(delta tau) lambda + [[tau, lambda]]",
                 5, 100, false, false, [](Trial& t) {
                   const auto& g = t.geometry();
                   const Form tau = t.one_form("tau");
                   const Form lambda = t.one_form("lambda");
                   const VectorField v = sharp1(tau);
                   return std::vector<Equation>{
                       {"on 1", conj_lie(v, scalar_form(g, g->one())), -delta(tau)},
                       {"on lambda", conj_lie(v, lambda), -lambda.scaled(delta(tau).as_scalar()) + sn(tau, lambda)}};
                 }});
  out.push_back({"eq19c_star_lie_star",
                 "*^-1 L_{sharp tau} * b = [[tau, b]] - (delta tau) b;  [[lambda, b]] = flat L_{sharp lambda} sharp b",
                 5, 100, false, false, [](Trial& t) {
                   const Form tau = t.one_form("tau");
                   const Form b = t.form("b", t.degree(0, t.dim()));
                   const VectorField v = sharp1(tau);
                   return std::vector<Equation>{
                       {"*^-1 L *", conj_lie(v, b), sn(tau, b) - b.scaled(delta(tau).as_scalar())},
                       {"transport", sn(tau, b), transported_lie(v, b)}};
                 }});
  out.push_back({"eq19d_strip", "*^-1 L_v * = flat L_v sharp + div(v) Id", 5, 100, false, false, [](Trial& t) {
                   const Form b = t.form("b", t.degree(0, t.dim()));
                   const VectorField v = t.vector("v");
                   return std::vector<Equation>{
                       {"operator identity", conj_lie(v, b), transported_lie(v, b) + b.scaled(divergence(v))}};
                 }});
  out.push_back({"eq06_killing_collapse", "sharp lambda Killing: [[lambda, b]] = L_{sharp lambda} b, L g~ = 0", 8, 50, true,
                 false, [](Trial& t) {
                   const VectorField v = t.killing("v");
                   const Form lambda = flat1(v);
                   const Form b = t.form("b", t.degree(0, t.dim()));
                   return std::vector<Equation>{{"collapse", sn(lambda, b), lie(v, b)},
                                                {"g~ preserved", metric_variation_term(v, b), Form(t.geometry(), b.degree())}};
                 }});
}

}  // namespace cartan::verify::catalog
