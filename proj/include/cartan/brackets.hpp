#ifndef CARTAN_BRACKETS_HPP
#define CARTAN_BRACKETS_HPP

#include <functional>

#include "cartan/hodge.hpp"

namespace cartan {

using FormOperator = std::function<Form(const Form&)>;

/// [X, Y]_n b = X(Y b) - (-1)^n Y(X b).
Form graded_commutator(const FormOperator& x, const FormOperator& y, int parity, const Form& b);

/// Lie derivative by Cartan's formula, i_v d + d i_v.
Form lie(const VectorField& v, const Form& a);

/// Schouten-Nijenhuis bracket on forms through the codifferential:
/// [[a, b]] = (-1)^a [delta(a ^ b) - (delta a) ^ b - (-1)^a a ^ delta b].
Form sn_bracket(const Form& a, const Form& b);

/// The three sums of the explicit component formula, each already a form of
/// degree a + b - 1 in the working basis (coordinate or orthonormal frame).
struct BracketTerms {
  Form derivative_of_right;  // sum_r a^(r) ^ X^r, a^(r)_K = a_{K r}, X^r_K = (d b_K, e^r)
  Form derivative_of_left;   // -sum_r Y^r ^ b_(r), Y^r_K = (d a_K, e^r), b_(r)_K = b_{r K}
  Form anholonomy;           // sum_{r,s} a^(r) ^ b^(s) ^ [[e^r, e^s]]
};

/// Bracket from the explicit component formula.  With use_frame the sums run
/// over the orthonormal frame, where [[e^r, e^s]] = c~^{rs}_k e^k.  Otherwise
/// they run over the coordinate coframe, where [[dx^r, dx^s]] =
/// flat[sharp dx^r, sharp dx^s]; this vanishes when the metric components are
/// constant.  The result is given in the coordinate basis; the individual
/// terms are reported through terms.
Form sn_bracket_components(const Form& a, const Form& b, bool use_frame, BracketTerms* terms = nullptr);

/// [[a, b]] = -(nabla_m a) ^ i^m b + (-1)^{a+1} (i^m a) ^ nabla_m b.
Form sn_bracket_nabla(const Form& a, const Form& b);

/// [[lambda, b]] = flat(L_{sharp lambda} sharp b); lambda must be a 1-form.
Form sn_bracket_one_form_def(const Form& lambda, const Form& b);

/// i^a b = (-1)^{a(b+1)} *^-1 (a ^ *b).
Form gen_interior(const Form& a, const Form& b);
/// i^a b = sum_{M, N1, N2} a_M b_{N1 N2} det(g^-1[M, N1]) dx^{N2}.
Form gen_interior_components(const Form& a, const Form& b);
/// j^a b = a ^ b.
inline Form gen_exterior(const Form& a, const Form& b) { return wedge(a, b); }

/// Theta^a b = i^a d b - (-1)^a d i^a b.
Form theta(const Form& a, const Form& b);

}  // namespace cartan

#endif  // CARTAN_BRACKETS_HPP
