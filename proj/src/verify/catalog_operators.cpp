// Interior product against brackets, commutators with d, delta, L_v and box,
// the Killing specials and the Theta operator.

#include <algorithm>

#include "catalog.hpp"

namespace cartan::verify::catalog {

namespace {

Form th(const Form& a, const Form& b) { return theta(a, b); }

FormOperator i_op(const Form& a) {
  return [a](const Form& f) { return ip(a, f); };
}
FormOperator j_op(const Form& a) {
  return [a](const Form& f) { return jp(a, f); };
}
FormOperator theta_op(const Form& a) {
  return [a](const Form& f) { return th(a, f); };
}
FormOperator vector_interior_op(const VectorField& v) {
  return [v](const Form& f) { return interior(v, f); };
}
FormOperator lie_op(const VectorField& v) {
  return [v](const Form& f) { return lie(v, f); };
}
const FormOperator d_op = [](const Form& f) { return d(f); };
const FormOperator delta_op = [](const Form& f) { return delta(f); };
const FormOperator box_op = [](const Form& f) { return box(f); };

/// Degrees (a, b) with a + b - 1 <= n, and c >= a + b - 1 so that the
/// insertion of the bracket is not trivially zero.
struct Triple {
  int a, b, c;
};
Triple bracket_triple(Trial& t) {
  const int n = t.dim();
  const int a = t.degree(0, n);
  const int b = t.degree(0, n + 1 - a);
  const int c = t.degree(std::max(a + b - 1, 0), n);
  return {a, b, c};
}

}  // namespace

void add_operator_checks(std::vector<IdentityCheck>& out) {
  // --- interior product and the bracket ------------------------------------
  out.push_back({"eq40_interior_of_bracket",
                 "i^{[[a,b]]} c = (-1)^a i^{a^b} d c + (-1)^b d i^{a^b} c + (-1)^{(a-1)(b-1)} i^a d i^b c - i^b d i^a c",
                 7, 100, false, false, [](Trial& t) {
                   const auto [p, q, r] = bracket_triple(t);
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   const Form c = t.form("c", r);
                   const Form ab = jp(a, b);
                   const Form rhs = ip(ab, d(c)).signed_by(p) + d(ip(ab, c)).signed_by(q) +
                                    ip(a, d(ip(b, c))).signed_by((p - 1) * (q - 1)) - ip(b, d(ip(a, c)));
                   return std::vector<Equation>{{"insertion", ip(sn(a, b), c), rhs}};
                 }});
  out.push_back({"eq41_oneform_on_bracket",
                 "i^lambda [[a,b]] = [[i^lambda a, b]] - (-1)^a [[a, i^lambda b]] + (-1)^a [i^{d lambda}(a^b) - (i^{d lambda} a)^b - a^(i^{d lambda} b)]",
                 7, 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const int q = t.degree(0, t.dim() + 1 - p);
                   const Form lambda = t.one_form("lambda");
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   const Form dl = d(lambda);
                   const Form rhs = sn(ip(lambda, a), b) - sn(a, ip(lambda, b)).signed_by(p) +
                                    (ip(dl, jp(a, b)) - jp(ip(dl, a), b) - jp(a, ip(dl, b))).signed_by(p);
                   return std::vector<Equation>{{"expansion", ip(lambda, sn(a, b)), rhs}};
                 }});
  out.push_back({"eq42_exact_on_bracket", "i^{d phi} [[a,b]] = [[i^{d phi} a, b]] - (-1)^a [[a, i^{d phi} b]]", 7, 100,
                 false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const int q = t.degree(0, t.dim() + 1 - p);
                   const Form dphi = d(Form::scalar(t.geometry(), t.scalar("phi")));
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   return std::vector<Equation>{
                       {"derivation", ip(dphi, sn(a, b)), sn(ip(dphi, a), b) - sn(a, ip(dphi, b)).signed_by(p)}};
                 }});
  out.push_back({"eq43_scalar_bracket_insertion",
                 "i^{[[phi,b]]} c = -i^{i^{d phi} b} c = -i^b (d phi ^ c) + (-1)^b d phi ^ i^b c = -[i^b, j^{d phi}]_b c", 7,
                 100, false, false, [](Trial& t) {
                   const int q = t.degree(0, t.dim());
                   const int r = t.degree(std::max(q - 1, 0), t.dim());
                   const Form phi = Form::scalar(t.geometry(), t.scalar("phi"));
                   const Form dphi = d(phi);
                   const Form b = t.form("b", q);
                   const Form c = t.form("c", r);
                   const Form lhs = ip(sn(phi, b), c);
                   return std::vector<Equation>{
                       {"-i^{i^{d phi} b}", lhs, -ip(ip(dphi, b), c)},
                       {"expanded", lhs, -ip(b, jp(dphi, c)) + jp(dphi, ip(b, c)).signed_by(q)},
                       {"commutator", lhs, -graded_commutator(i_op(b), j_op(dphi), q, c)}};
                 }});
  out.push_back({"eq44_oneform_bracket_insertion",
                 "i^{[[lambda,a]]} b = -i^{lambda^a} d b + (-1)^a d i^{lambda^a} b + i^lambda d i^a b - i^a d i^lambda b", 7,
                 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const int q = t.degree(p, t.dim());
                   const Form lambda = t.one_form("lambda");
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   const Form la = jp(lambda, a);
                   const Form rhs =
                       -ip(la, d(b)) + d(ip(la, b)).signed_by(p) + ip(lambda, d(ip(a, b))) - ip(a, d(ip(lambda, b)));
                   return std::vector<Equation>{{"insertion", ip(sn(lambda, a), b), rhs}};
                 }});

  // --- commutators with j^a ------------------------------------------------
  out.push_back({"eq45_d_j", "[d, j^a]_a b = j^{d a} b", 7, 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", t.degree(0, t.dim() - p));
                   return std::vector<Equation>{{"commutator", graded_commutator(d_op, j_op(a), p, b), jp(d(a), b)}};
                 }});
  out.push_back({"eq46_delta_j", "[delta, j^a]_a b = j^{delta a} b + (-1)^a [[a,b]]", 7, 100, false, false,
                 [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", t.degree(0, t.dim() - p));
                   return std::vector<Equation>{{"commutator", graded_commutator(delta_op, j_op(a), p, b),
                                                 jp(delta(a), b) + sn(a, b).signed_by(p)}};
                 }});
  out.push_back({"eq47_lie_j", "[L_v, j^a] b = j^{L_v a} b", 7, 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", t.degree(0, t.dim() - p));
                   const VectorField v = t.vector("v");
                   return std::vector<Equation>{
                       {"commutator", graded_commutator(lie_op(v), j_op(a), 0, b), jp(lie(v, a), b)}};
                 }});
  out.push_back({"eq48_box_j",
                 "[box, j^a] b = j^{box a} b - [[a, d b]] + (-1)^a [[d a, b]] - (-1)^a d [[a,b]]", 7, 100, false, false,
                 [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", t.degree(0, t.dim() - p));
                   const Form rhs =
                       jp(box(a), b) - sn(a, d(b)) + sn(d(a), b).signed_by(p) - d(sn(a, b)).signed_by(p);
                   return std::vector<Equation>{{"commutator", graded_commutator(box_op, j_op(a), 0, b), rhs}};
                 }});

  // --- commutators with i^a ------------------------------------------------
  out.push_back({"eq49_i_d", "[i^a, d]_a b = -i^{delta a} b + (-1)^{b(a+1)} *^-1 [[a, *b]]", 7, 100, false, false,
                 [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const int q = t.degree(std::max(p - 1, 0), t.dim());
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   const Form rhs = -ip(delta(a), b) + star_inv(sn(a, star(b))).signed_by(q * (p + 1));
                   return std::vector<Equation>{{"commutator", graded_commutator(i_op(a), d_op, p, b), rhs}};
                 }});
  out.push_back({"eq50_i_lie",
                 "[i^a, L_v] b = -i^{[[flat v, a]]} b = -i^{flat L_v sharp a} b = -i^{*^-1 L_v * a} b + div(v) i^a b", 7,
                 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const int q = t.degree(p, t.dim());
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   const VectorField v = t.vector("v");
                   const Form lhs = graded_commutator(i_op(a), lie_op(v), 0, b);
                   return std::vector<Equation>{
                       {"bracket", lhs, -ip(sn(flat1(v), a), b)},
                       {"transported", lhs, -ip(transported_lie(v, a), b)},
                       {"Hodge conjugated", lhs, -ip(conj_lie(v, a), b) + ip(a, b).scaled(divergence(v))}};
                 }});
  out.push_back({"eq51_i_delta", "[i^a, delta]_a b = i^{d a} b", 7, 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const int q = t.degree(p, t.dim());
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   return std::vector<Equation>{{"commutator", graded_commutator(i_op(a), delta_op, p, b), ip(d(a), b)}};
                 }});
  out.push_back({"eq52_i_box",
                 "[i^a, box] b = -i^{box a} b - (-1)^{ab} *^-1 [[d a, *b]] + (-1)^{ab} *^-1 d [[a, *b]] + (-1)^{ab+a} *^-1 [[a, d*b]]",
                 7, 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const int q = t.degree(std::max(p - 1, 0), t.dim());
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   const Form sb = star(b);
                   const int s = p * q;
                   const Form rhs = -ip(box(a), b) - star_inv(sn(d(a), sb)).signed_by(s) +
                                    star_inv(d(sn(a, sb))).signed_by(s) + star_inv(sn(a, d(sb))).signed_by(s + p);
                   return std::vector<Equation>{{"commutator", graded_commutator(i_op(a), box_op, 0, b), rhs}};
                 }});

  // --- L_v against delta, Killing specials ---------------------------------
  out.push_back({"eq53_lie_delta",
                 "[L_v, delta] b = [box, i_v] b + [d, i^{d flat v}] b = [box, i_v] b + i_{sharp delta d flat v} b - (-1)^b *^-1 [[d flat v, *b]]",
                 8, 50, false, false, [](Trial& t) {
                   const int q = t.degree(0, t.dim());
                   const Form b = t.form("b", q);
                   const VectorField v = t.vector("v");
                   const Form dv = d(flat1(v));
                   const Form lhs = graded_commutator(lie_op(v), delta_op, 0, b);
                   const Form box_i = graded_commutator(box_op, vector_interior_op(v), 0, b);
                   return std::vector<Equation>{
                       {"commutator form", lhs, box_i + graded_commutator(d_op, i_op(dv), 0, b)},
                       {"expanded", lhs,
                        box_i + interior(sharp1(delta(dv)), b) - star_inv(sn(dv, star(b))).signed_by(q)}};
                 }});
  out.push_back({"eq54_killing", "sharp lambda Killing: [i^lambda, box] b = (d i^{d lambda} - i^{d lambda} d) b", 8, 50,
                 true, false, [](Trial& t) {
                   const VectorField v = t.killing("v");
                   const Form lambda = flat1(v);
                   const Form dl = d(lambda);
                   const Form b = t.form("b", t.degree(0, t.dim()));
                   return std::vector<Equation>{{"commutator", graded_commutator(i_op(lambda), box_op, 0, b),
                                                 d(ip(dl, b)) - ip(dl, d(b))}};
                 }});
  out.push_back({"eq69_lie_delta_theta", "[L_v, delta] b = [box, i_v] b - Theta^{d flat v} b", 8, 50, false, false,
                 [](Trial& t) {
                   const Form b = t.form("b", t.degree(0, t.dim()));
                   const VectorField v = t.vector("v");
                   const Form dv = d(flat1(v));
                   return std::vector<Equation>{
                       {"Theta form", graded_commutator(lie_op(v), delta_op, 0, b),
                        graded_commutator(box_op, vector_interior_op(v), 0, b) - th(dv, b)}};
                 }});
  out.push_back({"eq70_killing", "sharp lambda Killing: [box, i^lambda] b = Theta^{d lambda} b", 8, 50, true, false,
                 [](Trial& t) {
                   const VectorField v = t.killing("v");
                   const Form lambda = flat1(v);
                   const Form b = t.form("b", t.degree(0, t.dim()));
                   return std::vector<Equation>{
                       {"commutator", graded_commutator(box_op, i_op(lambda), 0, b), th(d(lambda), b)}};
                 }});

  // --- Theta ---------------------------------------------------------------
  out.push_back({"eq62_theta_scalar", "Theta^phi a = -d phi ^ a", 9, 100, false, false, [](Trial& t) {
                   const Form phi = Form::scalar(t.geometry(), t.scalar("phi"));
                   const Form a = t.form("a", t.degree(0, t.dim()));
                   return std::vector<Equation>{{"scalar", th(phi, a), -jp(d(phi), a)}};
                 }});
  out.push_back({"eq63_theta_oneform", "Theta^lambda a = L_{sharp lambda} a", 9, 100, false, false, [](Trial& t) {
                   const Form lambda = t.one_form("lambda");
                   const Form a = t.form("a", t.degree(0, t.dim()));
                   return std::vector<Equation>{{"Lie", th(lambda, a), lie(sharp1(lambda), a)}};
                 }});
  out.push_back({"eq64_theta_wedge",
                 "Theta^{a^b} = i^b Theta^a + (-1)^a Theta^b i^a = (-1)^{ab} [i^a Theta^b + (-1)^b Theta^a i^b]",
                 9, 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const int q = t.degree(0, t.dim() - p);
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   const Form c = t.form("c", t.degree(std::max(p + q - 1, 0), t.dim()));
                   const Form lhs = th(jp(a, b), c);
                   return std::vector<Equation>{
                       {"first", lhs, ip(b, th(a, c)) + th(b, ip(a, c)).signed_by(p)},
                       {"second", lhs, (ip(a, th(b, c)) + th(a, ip(b, c)).signed_by(q)).signed_by(p * q)}};
                 }});
  out.push_back({"eq65_theta_d", "[Theta^a, d]_{a+1} = 0", 9, 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const Form a = t.form("a", p);
                   const int r = t.degree(std::max(p - 2, 0), t.dim());
                   const Form c = t.form("c", r);
                   return std::vector<Equation>{
                       {"commutator", graded_commutator(theta_op(a), d_op, p + 1, c), Form(t.geometry(), r - p + 2)}};
                 }});
  out.push_back({"eq66_theta_insertion",
                 "i^{[[a,b]]} c = (-1)^a i^b Theta^a c + (-1)^{(a-1)(b-1)} Theta^a i^b c = (-1)^a [i^b, Theta^a]_{b(a+1)} c = -[Theta^b, i^a]_{a(b+1)} c",
                 9, 100, false, false, [](Trial& t) {
                   const auto [p, q, r] = bracket_triple(t);
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   const Form c = t.form("c", r);
                   const Form lhs = ip(sn(a, b), c);
                   return std::vector<Equation>{
                       {"expanded", lhs, ip(b, th(a, c)).signed_by(p) + th(a, ip(b, c)).signed_by((p - 1) * (q - 1))},
                       {"[i^b, Theta^a]", lhs, graded_commutator(i_op(b), theta_op(a), q * (p + 1), c).signed_by(p)},
                       {"[Theta^b, i^a]", lhs, -graded_commutator(theta_op(b), i_op(a), p * (q + 1), c)}};
                 }});
  out.push_back({"eq67_theta_bracket",
                 "Theta^{[[a,b]]} = (-1)^{(a-1)(b-1)} Theta^a Theta^b - Theta^b Theta^a = -[Theta^b, Theta^a]_{(a-1)(b-1)}", 9,
                 100, false, false, [](Trial& t) {
                   const int p = t.degree(0, t.dim());
                   const int q = t.degree(0, t.dim() + 1 - p);
                   const Form a = t.form("a", p);
                   const Form b = t.form("b", q);
                   const Form c = t.form("c", t.degree(0, t.dim()));
                   const Form lhs = th(sn(a, b), c);
                   return std::vector<Equation>{
                       {"expanded", lhs, th(a, th(b, c)).signed_by((p - 1) * (q - 1)) - th(b, th(a, c))},
                       {"commutator", lhs,
                        -graded_commutator(theta_op(b), theta_op(a), (p - 1) * (q - 1), c)}};
                 }});
  out.push_back({"eq68_parity_split",
                 "[i^b, Theta^a]_{a+1} c = [i^b, Theta^a] c = -i^{[[a,b]]} c (a odd); [i^b, Theta^a]_+ c = i^{[[a,b]]} c (a even, b odd); i^{[[a,b]]} c + 2 Theta^a i^b c (a, b even)",
                 9, 100, false, false, [](Trial& t) {
                   std::vector<Equation> eqs;
                   const int n = t.dim();
                   for (int p = 0; p <= n; ++p)
                     for (int q = 0; q <= n && p + q - 1 <= n; ++q) {
                       const std::string tag = std::to_string(p) + std::to_string(q);
                       const Form a = t.form("a" + tag, p);
                       const Form b = t.form("b" + tag, q);
                       const Form c = t.form("c" + tag, t.degree(std::max(p + q - 1, 0), n));
                       const Form lhs = graded_commutator(i_op(b), theta_op(a), p + 1, c);
                       const Form inserted = ip(sn(a, b), c);
                       const std::string label = "a=" + std::to_string(p) + ", b=" + std::to_string(q);
                       if (p % 2 == 1) {
                         eqs.push_back({label + " bracket", lhs, -inserted});
                       } else if (q % 2 == 1) {
                         eqs.push_back({label + " bracket", lhs, inserted});
                       } else {
                         eqs.push_back(
                             {label + " bracket", lhs, inserted + th(a, ip(b, c)).scaled(Rational(2))});
                       }
                     }
                   return eqs;
                 }});
}

}  // namespace cartan::verify::catalog
