// Generalized interior product i^a b = (-1)^{a(b+1)} *^-1 (a ^ *b).

#include <algorithm>

#include "catalog.hpp"

namespace cartan::verify::catalog {


void add_interior_checks(std::vector<IdentityCheck>& out) {
  out.push_back({"eq03_springboard", "i^lambda b = i_{sharp lambda} b = (-1)^{b+1} *^-1 j^lambda * b", 6, 100, false,
                 false, [](Trial& t) {
                   const Form lambda = t.one_form("lambda");
                   const int q = t.degree(0, t.dim());
                   const Form b = t.form("b", q);
                   const Form classical = interior(sharp1(lambda), b);
                   return std::vector<Equation>{
                       {"Hodge form", classical, star_inv(jp(lambda, star(b))).signed_by(q + 1)}};
                 }});
  out.push_back({"eq29_degree1", "a = 1: i^lambda b agrees with i_{sharp lambda} b", 6, 100, false, false,
                 [](Trial& t) {
                   std::vector<Equation> eqs;
                   const Form lambda = t.one_form("lambda");
                   const VectorField v = sharp1(lambda);
                   for (int q = 0; q <= t.dim(); ++q) {
                     const Form b = t.form("b" + std::to_string(q), q);
                     eqs.push_back({"b=" + std::to_string(q), ip(lambda, b), interior(v, b)});
                   }
                   return eqs;
                 }});
  out.push_back({"eq29_equal_degree_inner", "a = b: i^a b = (a, b)", 6, 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", p);
                   return std::vector<Equation>{
                       {"pairing", ip(a, b), Form::scalar(t.geometry(), form_inner(a, b))},
                       {"pairing by components", ip(a, b), Form::scalar(t.geometry(), form_inner_components(a, b))}};
                 }});
  out.push_back({"eq29_degree_cutoff", "a > b: i^a b = 0", 6, 100, false, false, [](Trial& t) {
                   const int p = t.degree(1, t.dim());
                   const int q = t.degree(0, p - 1);
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   return std::vector<Equation>{{"cutoff", ip(a, b), Form(t.geometry(), q - p)}};
                 }});
  out.push_back({"eq29_components",
                 "i^a b = 1/(a!(b-a)!) a_{m..} b_{n..} g~(e^m1, e^n1) ... g~(e^ma, e^na) e^{n_{a+1}} ^ ... ^ e^{n_b}", 6,
                 100, false, false, [](Trial& t) {
                   std::vector<Equation> eqs;
                   for (int p = 0; p <= t.dim(); ++p)
                     for (int q = p; q <= t.dim(); ++q) {
                       const Form a = t.form("a" + std::to_string(p) + std::to_string(q), p);
                       const Form b = t.form("b" + std::to_string(p) + std::to_string(q), q);
                       eqs.push_back({"a=" + std::to_string(p) + ", b=" + std::to_string(q), ip(a, b),
                                      gen_interior_components(a, b)});
                     }
                   return eqs;
                 }});
  out.push_back({"eq30_scalar_interior", "i^phi a = phi a", 6, 100, false, false, [](Trial& t) {
                   const RationalFn phi = t.scalar("phi");
                   const Form a = t.form("a", t.degree(0, t.dim()));
                   return std::vector<Equation>{{"scalar", ip(Form::scalar(t.geometry(), phi), a), a.scaled(phi)}};
                 }});
  out.push_back({"eq31_volume_interior", "i^a omega = * a", 6, 100, false, false, [](Trial& t) {
                   const Form a = t.form("a", t.degree(0, t.dim()));
                   return std::vector<Equation>{{"volume", ip(a, volume_form(t.geometry())), star(a)}};
                 }});
  out.push_back({"eq32_star_interior", "* i^a b = (-1)^{a(b+1)} j^a * b", 6, 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const int q = t.degree(p, t.dim());
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   return std::vector<Equation>{{"star", star(ip(a, b)), jp(a, star(b)).signed_by(p * (q + 1))}};
                 }});
  out.push_back({"eq33_interior_star", "i^a * b = (-1)^{ab} * j^a b", 6, 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const int q = t.degree(0, t.dim() - p);
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   return std::vector<Equation>{{"star", ip(a, star(b)), star(jp(a, b)).signed_by(p * q)}};
                 }});
  out.push_back({"eq34_interior_composition",
                 "i^a i^b c = i^{b^a} c = (-1)^{ab} i^{a^b} c = (-1)^{ab} i^b i^a c", 6, 100, false, false,
                 [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const int q = t.degree(0, t.dim() - p);
                   const int r = t.degree(p + q, t.dim());
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   const Form c = t.form("c", r);
                   const Form lhs = ip(a, ip(b, c));
                   return std::vector<Equation>{{"i^{b^a}", lhs, ip(jp(b, a), c)},
                                                {"i^{a^b}", lhs, ip(jp(a, b), c).signed_by(p * q)},
                                                {"i^b i^a", lhs, ip(b, ip(a, c)).signed_by(p * q)}};
                 }});
  out.push_back({"eq35_interior_star_swap", "i^a * b = (-1)^{ab} i^b * a", 6, 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const int q = t.degree(0, t.dim() - p);
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   return std::vector<Equation>{{"swap", ip(a, star(b)), ip(b, star(a)).signed_by(p * q)}};
                 }});
  out.push_back({"eq36_star_interior_swap", "i^{*a} b = (-1)^{a+b+ab+n} i^{*b} a", 6, 100, false, false,
                 [](Trial& t) {
                   const int n = t.dim();
                   const int p = t.degree(0, n);
                   const int q = t.degree(n - p, n);
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   return std::vector<Equation>{{"swap", ip(star(a), b), ip(star(b), a).signed_by(p + q + p * q + n)}};
                 }});
  out.push_back({"eq37_star_star_interior", "i^{*a} * b = sgn(g) (-1)^{n(a+b)+a(b+1)} i^b a", 6, 100, false, false,
                 [](Trial& t) {
                   const int n = t.dim();
                   const int p = t.degree(0, n);
                   const int q = t.degree(0, p);
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   const int s = t.geometry()->signature_sign() < 0 ? 1 : 0;
                   return std::vector<Equation>{
                       {"double star", ip(star(a), star(b)), ip(b, a).signed_by(s + n * (p + q) + p * (q + 1))}};
                 }});
  out.push_back({"eq38_interior_exterior_commutator", "[i^a, j^lambda]_a b = i^{i^lambda a} b", 6, 100, false, false,
                 [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   const Form lambda = t.one_form("lambda");
                   const Form b = t.form("b", t.degree(std::max(p - 1, 0), t.dim()));
                   const Form lhs = graded_commutator([&](const Form& f) { return ip(a, f); },
                                                      [&](const Form& f) { return jp(lambda, f); }, p, b);
                   return std::vector<Equation>{{"commutator", lhs, ip(ip(lambda, a), b)}};
                 }});
  out.push_back({"eq39_oneform_exterior_commutator", "[i^lambda, j^a]_a b = j^{i^lambda a} b", 6, 100, false, false,
                 [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   const Form lambda = t.one_form("lambda");
                   const Form b = t.form("b", t.degree(0, t.dim() + 1 - p));
                   const Form lhs = graded_commutator([&](const Form& f) { return ip(lambda, f); },
                                                      [&](const Form& f) { return jp(a, f); }, p, b);
                   return std::vector<Equation>{{"commutator", lhs, jp(ip(lambda, a), b)}};
                 }});
}

}  // namespace cartan::verify::catalog
