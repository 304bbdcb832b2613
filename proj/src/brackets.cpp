#include "cartan/brackets.hpp"

namespace cartan {

namespace {

/// a^(r)_K = a_{K r}, a form of degree a - 1.
Form strip_last(const Form& a, std::size_t r) {
  Form out(a.geometry(), a.degree() - 1, a.basis());
  for (const auto& [index, c] : a.components()) {
    if (!(index & single(r))) continue;
    const IndexSet rest = index & ~single(r);
    out.add(rest, merge_sign(rest, single(r)) > 0 ? c : -c);
  }
  return out;
}

/// a_(r)_K = a_{r K}.
Form strip_first(const Form& a, std::size_t r) {
  Form out(a.geometry(), a.degree() - 1, a.basis());
  for (const auto& [index, c] : a.components()) {
    if (!(index & single(r))) continue;
    const IndexSet rest = index & ~single(r);
    out.add(rest, merge_sign(single(r), rest) > 0 ? c : -c);
  }
  return out;
}

/// X^r_K = (d f_K, e^r) for every component f_K of a: the pairing of the
/// gradient of the scalar component with the r-th basis coform.
std::vector<Form> gradient_pairings(const Form& a, bool use_frame) {
  const Geometry& g = a.geom();
  const std::size_t n = g.dim();
  std::vector<Form> out(n, Form(a.geometry(), a.degree(), a.basis()));
  for (const auto& [index, c] : a.components()) {
    std::vector<RationalFn> grad;
    grad.reserve(n);
    for (std::size_t s = 0; s < n; ++s) grad.push_back(c.partial(s));
    for (std::size_t mu = 0; mu < n; ++mu) {
      // raised gradient (g^{mu s} d_s c)
      RationalFn up = g.zero();
      for (std::size_t s = 0; s < n; ++s)
        if (!grad[s].is_zero() && !g.inverse_metric()(mu, s).is_zero()) up += g.inverse_metric()(mu, s) * grad[s];
      if (up.is_zero()) continue;
      if (!use_frame) {
        out[mu].add(index, up);
        continue;
      }
      for (std::size_t r = 0; r < n; ++r)
        if (!g.coframe()(r, mu).is_zero()) out[r].add(index, g.coframe()(r, mu) * up);
    }
  }
  return out;
}

}  // namespace

Form graded_commutator(const FormOperator& x, const FormOperator& y, int parity, const Form& b) {
  return x(y(b)) - y(x(b)).signed_by(parity);
}

Form lie(const VectorField& v, const Form& a) { return interior(v, ext_d(a)) + ext_d(interior(v, a)); }

Form sn_bracket(const Form& a, const Form& b) {
  const Form total = codifferential(wedge(a, b)) - wedge(codifferential(a), b) -
                     wedge(a, codifferential(b)).signed_by(a.degree());
  return total.signed_by(a.degree());
}

Form sn_bracket_components(const Form& a, const Form& b, bool use_frame, BracketTerms* terms) {
  const Basis basis = use_frame ? Basis::frame : Basis::coordinate;
  const Form af = change_basis(to_coordinate(a), basis);
  const Form bf = change_basis(to_coordinate(b), basis);
  const Geometry& g = a.geom();
  const std::size_t n = g.dim();
  const int degree = a.degree() + b.degree() - 1;

  BracketTerms t{Form(a.geometry(), degree, basis), Form(a.geometry(), degree, basis),
                 Form(a.geometry(), degree, basis)};
  // The gradient pairings are computed from coordinate components of the
  // scalar coefficients; they are scalars, so the basis of af/bf only labels
  // which multi-index they belong to.
  const std::vector<Form> x = gradient_pairings(bf, use_frame);
  const std::vector<Form> y = gradient_pairings(af, use_frame);
  std::vector<Form> a_strip, b_strip;
  for (std::size_t r = 0; r < n; ++r) {
    a_strip.push_back(strip_last(af, r));
    b_strip.push_back(strip_last(bf, r));
  }
  for (std::size_t r = 0; r < n; ++r) {
    t.derivative_of_right += wedge(a_strip[r], x[r]);
    t.derivative_of_left -= wedge(y[r], strip_first(bf, r));
  }
  // [[e^r, e^s]] as a 1-form in the working basis: c~^{rs}_k e^k for the
  // orthonormal frame, flat[sharp dx^r, sharp dx^s] for the coordinate frame.
  auto frame_bracket = [&](std::size_t r, std::size_t s) {
    Form ck(a.geometry(), 1, basis);
    if (use_frame) {
      for (std::size_t k = 0; k < n; ++k) ck.add(single(k), g.dressed_anholonomy(r, s, k));
      return ck;
    }
    const VectorField u = sharp1(coordinate_differential(a.geometry(), r));
    const VectorField w = sharp1(coordinate_differential(a.geometry(), s));
    return flat1(lie_bracket(u, w));
  };
  for (std::size_t r = 0; r < n; ++r) {
    if (a_strip[r].is_zero()) continue;
    for (std::size_t s = 0; s < n; ++s) {
      if (b_strip[s].is_zero()) continue;
      const Form ck = frame_bracket(r, s);
      if (!ck.is_zero()) t.anholonomy += wedge(wedge(a_strip[r], b_strip[s]), ck);
    }
  }
  Form total = t.derivative_of_right + t.derivative_of_left + t.anholonomy;
  if (terms) *terms = std::move(t);
  return to_coordinate(total);
}

Form sn_bracket_nabla(const Form& a, const Form& b) {
  const Form ac = to_coordinate(a);
  const Form bc = to_coordinate(b);
  const Geometry& g = ac.geom();
  const std::size_t n = g.dim();
  Form out(ac.geometry(), ac.degree() + bc.degree() - 1);
  for (std::size_t m = 0; m < n; ++m) {
    // i^m = insertion of sharp(dx^m) = g^{m s} d_s
    std::vector<RationalFn> up;
    for (std::size_t s = 0; s < n; ++s) up.push_back(g.inverse_metric()(m, s));
    const VectorField raised(ac.geometry(), std::move(up));
    out -= wedge(covariant_derivative(ac, m), interior(raised, bc));
    out += wedge(interior(raised, ac), covariant_derivative(bc, m)).signed_by(ac.degree() + 1);
  }
  return out;
}

Form sn_bracket_one_form_def(const Form& lambda, const Form& b) {
  if (lambda.degree() != 1) throw FormError("left argument must be a 1-form");
  return flat(lie_multivector(sharp1(lambda), sharp(b)));
}

Form gen_interior(const Form& a, const Form& b) {
  const int sign_exponent = a.degree() * (b.degree() + 1);
  return star_inv(wedge(a, star(b))).signed_by(sign_exponent);
}

Form gen_interior_components(const Form& a, const Form& b) {
  const Form ac = to_coordinate(a);
  const Form bc = to_coordinate(b);
  Form out(ac.geometry(), bc.degree() - ac.degree());
  if (ac.degree() > bc.degree() || ac.is_zero() || bc.is_zero()) return out;
  const MinorTable& ginv = ac.geom().inverse_metric_minors();
  const auto& firsts = subsets(ac.dim(), static_cast<std::size_t>(ac.degree()));
  for (const auto& [nset, beta] : bc.components())
    for (IndexSet n1 : firsts) {
      if ((n1 & nset) != n1) continue;
      const IndexSet n2 = nset & ~n1;
      const int sign = merge_sign(n1, n2);
      RationalFn acc = ac.geom().zero();
      for (const auto& [mset, alpha] : ac.components()) {
        const RationalFn& m = ginv(mset, n1);
        if (!m.is_zero()) acc += alpha * m;
      }
      if (!acc.is_zero()) out.add(n2, sign > 0 ? acc * beta : -(acc * beta));
    }
  return out;
}

Form theta(const Form& a, const Form& b) {
  return gen_interior(a, ext_d(b)) - ext_d(gen_interior(a, b)).signed_by(a.degree());
}

}  // namespace cartan
