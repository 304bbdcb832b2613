#ifndef CARTAN_MANIFOLD_HPP
#define CARTAN_MANIFOLD_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartan/multi_index.hpp"
#include "cartan/ratfn.hpp"

namespace cartan {

/// Raised for inconsistent charts, frames or fixtures.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Local coordinate chart: dimension is the number of coordinate names.
class Chart {
 public:
  explicit Chart(std::vector<std::string> coords);

  std::size_t dim() const { return coords_.size(); }
  const std::vector<std::string>& coords() const { return coords_; }
  /// Index of a coordinate name, or -1.
  int index_of(std::string_view name) const;

 private:
  std::vector<std::string> coords_;
};

/// Dense n x n matrix of rational functions, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t n, std::size_t nvars);
  static Matrix identity(std::size_t n, std::size_t nvars);

  std::size_t size() const { return n_; }
  RationalFn& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const RationalFn& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<RationalFn> a_;
};

/// All minors det(M[I, J]) for |I| = |J|, indexed by row set and column set.
class MinorTable {
 public:
  MinorTable() = default;
  explicit MinorTable(const Matrix& m);

  const RationalFn& operator()(IndexSet rows, IndexSet cols) const { return minors_[(rows << n_) | cols]; }
  const RationalFn& determinant() const { return (*this)(full_set(n_), full_set(n_)); }

 private:
  std::size_t n_ = 0;
  std::vector<RationalFn> minors_;
};

/// An oriented orthonormal coframe e^a = E^a_mu dx^mu with constant signature
/// eta, together with everything derived from it: metric, inverse metric,
/// inverse coframe, anholonomy coefficients and Christoffel symbols.  All
/// derived data is computed once at construction; instances are immutable.
class Geometry {
 public:
  static std::shared_ptr<const Geometry> create(Chart chart, Matrix coframe, std::vector<int> eta);

  const Chart& chart() const { return chart_; }
  std::size_t dim() const { return chart_.dim(); }
  std::size_t nvars() const { return chart_.dim(); }
  const std::vector<std::string>& coords() const { return chart_.coords(); }

  /// Coframe E, row a = e^a, column mu.
  const Matrix& coframe() const { return coframe_; }
  /// Inverse coframe, row mu, column a: dx^mu = Einv^mu_a e^a and e_a = Einv^mu_a d_mu.
  const Matrix& inverse_coframe() const { return inverse_coframe_; }
  const RationalFn& coframe_determinant() const { return coframe_minors_.determinant(); }
  const std::vector<int>& eta() const { return eta_; }
  /// Product of the eta entries.
  int signature_sign() const { return signature_sign_; }

  const Matrix& metric() const { return metric_; }
  const Matrix& inverse_metric() const { return inverse_metric_; }

  const MinorTable& coframe_minors() const { return coframe_minors_; }
  const MinorTable& inverse_coframe_minors() const { return inverse_coframe_minors_; }
  const MinorTable& metric_minors() const { return metric_minors_; }
  const MinorTable& inverse_metric_minors() const { return inverse_metric_minors_; }

  /// c^a_{bc} with de^a = -1/2 c^a_{bc} e^b ^ e^c (frame indices).
  const RationalFn& anholonomy(std::size_t a, std::size_t b, std::size_t c) const {
    return anholonomy_[(a * dim() + b) * dim() + c];
  }
  /// c~^{rs}_k = g^{ri} g^{sj} g_{kl} c^l_{ij} with frame-index metric eta.
  const RationalFn& dressed_anholonomy(std::size_t r, std::size_t s, std::size_t k) const {
    return dressed_anholonomy_[(r * dim() + s) * dim() + k];
  }
  bool holonomic() const { return holonomic_; }

  /// Gamma^lambda_{mu nu} of the Levi-Civita connection, coordinate indices.
  const RationalFn& christoffel(std::size_t lambda, std::size_t mu, std::size_t nu) const {
    return christoffel_[(lambda * dim() + mu) * dim() + nu];
  }

  /// Coordinate components of the Hodge star on p-forms, obtained from the
  /// orthonormal-frame rule: *(dx^I) = sum_J hodge_coefficient(p, I, J) dx^J.
  const RationalFn& hodge_coefficient(IndexSet from, IndexSet to) const {
    return hodge_[(from << dim()) | to];
  }

  RationalFn zero() const { return RationalFn(nvars()); }
  RationalFn one() const { return RationalFn::constant(nvars(), Rational(1)); }
  RationalFn constant(const Rational& c) const { return RationalFn::constant(nvars(), c); }
  RationalFn coordinate(std::size_t mu) const { return RationalFn::variable(nvars(), mu); }

 private:
  Geometry(Chart chart, Matrix coframe, std::vector<int> eta);

  Chart chart_;
  Matrix coframe_;
  std::vector<int> eta_;
  int signature_sign_ = 1;
  Matrix inverse_coframe_;
  Matrix metric_;
  Matrix inverse_metric_;
  MinorTable coframe_minors_;
  MinorTable inverse_coframe_minors_;
  MinorTable metric_minors_;
  MinorTable inverse_metric_minors_;
  std::vector<RationalFn> anholonomy_;
  std::vector<RationalFn> dressed_anholonomy_;
  std::vector<RationalFn> christoffel_;
  std::vector<RationalFn> hodge_;
  bool holonomic_ = true;
};

using GeometryPtr = std::shared_ptr<const Geometry>;

/// Inverse by adjugate over determinant; throws GeometryError if singular.
Matrix inverse(const Matrix& m);

/// Killing test: (L_v g)_{mu nu} = v^s d_s g_{mu nu} + g_{s nu} d_mu v^s + g_{mu s} d_nu v^s vanishes.
bool is_killing(const Geometry& geom, std::span<const RationalFn> vector_components);

}  // namespace cartan

#endif  // CARTAN_MANIFOLD_HPP
