#include "cartan/manifold.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace cartan {

// ---------------------------------------------------------------------------
// Chart

Chart::Chart(std::vector<std::string> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw GeometryError("chart needs at least one coordinate");
  if (coords_.size() > kMaxVars) throw GeometryError("chart dimension exceeds " + std::to_string(kMaxVars));
  std::set<std::string> seen;
  for (const auto& c : coords_) {
    if (c.empty() || !(std::isalpha(static_cast<unsigned char>(c[0])) || c[0] == '_'))
      throw GeometryError("invalid coordinate name '" + c + "'");
    for (char ch : c)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw GeometryError("invalid coordinate name '" + c + "'");
    if (!seen.insert(c).second) throw GeometryError("duplicate coordinate name '" + c + "'");
  }
}

int Chart::index_of(std::string_view name) const {
  const auto it = std::find(coords_.begin(), coords_.end(), name);
  return it == coords_.end() ? -1 : static_cast<int>(it - coords_.begin());
}

// ---------------------------------------------------------------------------
// Matrix and minors

Matrix::Matrix(std::size_t n, std::size_t nvars) : n_(n), a_(n * n, RationalFn(nvars)) {}

Matrix Matrix::identity(std::size_t n, std::size_t nvars) {
  Matrix m(n, nvars);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RationalFn::constant(nvars, Rational(1));
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw GeometryError("matrix size mismatch");
  const std::size_t nvars = a.n_ == 0 ? 0 : a(0, 0).nvars();
  Matrix c(a.n_, nvars);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j) {
      RationalFn acc(nvars);
      for (std::size_t k = 0; k < a.n_; ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc += a(i, k) * b(k, j);
      c(i, j) = std::move(acc);
    }
  return c;
}

MinorTable::MinorTable(const Matrix& m) : n_(m.size()) {
  const std::size_t nvars = n_ == 0 ? 0 : m(0, 0).nvars();
  minors_.assign(std::size_t{1} << (2 * n_), RationalFn(nvars));
  minors_[0] = RationalFn::constant(nvars, Rational(1));
  for (std::size_t p = 1; p <= n_; ++p) {
    for (IndexSet rows : subsets(n_, p)) {
      const std::size_t top = static_cast<std::size_t>(std::countr_zero(rows));
      const IndexSet rest_rows = rows & ~single(top);
      for (IndexSet cols : subsets(n_, p)) {
        // Laplace expansion along the first row of the block.
        RationalFn det(nvars);
        int sign = 1;
        for (std::size_t j : members(cols)) {
          const RationalFn& entry = m(top, j);
          if (!entry.is_zero()) {
            const RationalFn& sub = (*this)(rest_rows, cols & ~single(j));
            if (!sub.is_zero()) det += sign > 0 ? entry * sub : -(entry * sub);
          }
          sign = -sign;
        }
        minors_[(rows << n_) | cols] = std::move(det);
      }
    }
  }
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.size();
  const MinorTable minors(m);
  const RationalFn& det = minors.determinant();
  if (det.is_zero()) throw GeometryError("matrix is singular (determinant is identically zero)");
  const std::size_t nvars = det.nvars();
  Matrix inv(n, nvars);
  const IndexSet all = full_set(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // inv(j, i) = (-1)^{i+j} det(M without row i, column j) / det
      RationalFn cof = minors(all & ~single(i), all & ~single(j));
      if ((i + j) & 1) cof = -cof;
      inv(j, i) = cof / det;
    }
  return inv;
}

// ---------------------------------------------------------------------------
// Geometry

std::shared_ptr<const Geometry> Geometry::create(Chart chart, Matrix coframe, std::vector<int> eta) {
  return std::shared_ptr<const Geometry>(new Geometry(std::move(chart), std::move(coframe), std::move(eta)));
}

Geometry::Geometry(Chart chart, Matrix coframe, std::vector<int> eta)
    : chart_(std::move(chart)), coframe_(std::move(coframe)), eta_(std::move(eta)) {
  const std::size_t n = chart_.dim();
  const std::size_t nv = n;
  if (coframe_.size() != n) throw GeometryError("coframe must be an n x n matrix");
  if (eta_.size() != n) throw GeometryError("signature must have n entries");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coframe_(i, j).nvars() != nv) throw GeometryError("coframe entry over the wrong variables");
  for (int e : eta_) {
    if (e != 1 && e != -1) throw GeometryError("signature entries must be +1 or -1");
    signature_sign_ *= e;
  }

  coframe_minors_ = MinorTable(coframe_);
  if (coframe_minors_.determinant().is_zero()) throw GeometryError("coframe determinant is identically zero");
  inverse_coframe_ = inverse(coframe_);
  inverse_coframe_minors_ = MinorTable(inverse_coframe_);

  metric_ = Matrix(n, nv);
  inverse_metric_ = Matrix(n, nv);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) {
      RationalFn g(nv), ginv(nv);
      for (std::size_t a = 0; a < n; ++a) {
        RationalFn t = coframe_(a, mu) * coframe_(a, nu);
        g += eta_[a] > 0 ? t : -t;
        RationalFn s = inverse_coframe_(mu, a) * inverse_coframe_(nu, a);
        ginv += eta_[a] > 0 ? s : -s;
      }
      metric_(mu, nu) = std::move(g);
      inverse_metric_(mu, nu) = std::move(ginv);
    }
  metric_minors_ = MinorTable(metric_);
  inverse_metric_minors_ = MinorTable(inverse_metric_);

  // Anholonomy: de^a = (d_mu E^a_nu - d_nu E^a_mu) dx^mu ^ dx^nu (mu < nu),
  // re-expressed in the frame; c^a_{bc} = -(de^a)_{bc}.
  anholonomy_.assign(n * n * n, RationalFn(nv));
  for (std::size_t a = 0; a < n; ++a) {
    for (IndexSet coord_pair : subsets(n, 2)) {
      const auto idx = members(coord_pair);
      const RationalFn comp = coframe_(a, idx[1]).partial(idx[0]) - coframe_(a, idx[0]).partial(idx[1]);
      if (comp.is_zero()) continue;
      holonomic_ = false;
      for (IndexSet frame_pair : subsets(n, 2)) {
        const RationalFn& m = inverse_coframe_minors_(coord_pair, frame_pair);
        if (m.is_zero()) continue;
        const auto bc = members(frame_pair);
        const RationalFn term = comp * m;
        anholonomy_[(a * n + bc[0]) * n + bc[1]] -= term;
        anholonomy_[(a * n + bc[1]) * n + bc[0]] += term;
      }
    }
  }
  dressed_anholonomy_.assign(n * n * n, RationalFn(nv));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t k = 0; k < n; ++k) {
        // Frame metric is diag(eta), its own inverse.
        const int sign = eta_[r] * eta_[s] * eta_[k];
        const RationalFn& c = anholonomy(k, r, s);
        dressed_anholonomy_[(r * n + s) * n + k] = sign > 0 ? c : -c;
      }

  // Christoffel symbols from coordinate derivatives of the metric.
  std::vector<RationalFn> dg(n * n * n, RationalFn(nv));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = 0; nu < n; ++nu) dg[(s * n + mu) * n + nu] = metric_(mu, nu).partial(s);
  auto d = [&](std::size_t s, std::size_t mu, std::size_t nu) -> const RationalFn& { return dg[(s * n + mu) * n + nu]; };
  christoffel_.assign(n * n * n, RationalFn(nv));
  const Rational half(1, 2);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = mu; nu < n; ++nu) {
        RationalFn acc(nv);
        for (std::size_t s = 0; s < n; ++s) {
          if (inverse_metric_(l, s).is_zero()) continue;
          const RationalFn bracket = d(mu, s, nu) + d(nu, s, mu) - d(s, mu, nu);
          if (!bracket.is_zero()) acc += inverse_metric_(l, s) * bracket;
        }
        acc = acc.scaled(half);
        christoffel_[(l * n + mu) * n + nu] = acc;
        christoffel_[(l * n + nu) * n + mu] = std::move(acc);
      }

  // Hodge star in coordinate components, via the frame:
  // dx^I = sum_A det(Einv[I,A]) e^A,  *e^A = eta_A sign(A, A^c) e^{A^c},
  // e^{A^c} = sum_J det(E[A^c, J]) dx^J.
  hodge_.assign(std::size_t{1} << (2 * n), RationalFn(nv));
  const IndexSet all = full_set(n);
  for (std::size_t p = 0; p <= n; ++p) {
    for (IndexSet from : subsets(n, p)) {
      for (IndexSet a : subsets(n, p)) {
        const RationalFn& to_frame = inverse_coframe_minors_(from, a);
        if (to_frame.is_zero()) continue;
        int sign = merge_sign(a, all & ~a);
        for (std::size_t k : members(a)) sign *= eta_[k];
        const IndexSet comp = all & ~a;
        for (IndexSet to : subsets(n, n - p)) {
          const RationalFn& back = coframe_minors_(comp, to);
          if (back.is_zero()) continue;
          const RationalFn term = to_frame * back;
          hodge_[(from << n) | to] += sign > 0 ? term : -term;
        }
      }
    }
  }
}

bool is_killing(const Geometry& geom, std::span<const RationalFn> v) {
  const std::size_t n = geom.dim();
  if (v.size() != n) throw GeometryError("vector field has the wrong number of components");
  const Matrix& g = geom.metric();
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = mu; nu < n; ++nu) {
      RationalFn acc = geom.zero();
      for (std::size_t s = 0; s < n; ++s) {
        acc += v[s] * g(mu, nu).partial(s);
        acc += g(s, nu) * v[s].partial(mu);
        acc += g(mu, s) * v[s].partial(nu);
      }
      if (!acc.is_zero()) return false;
    }
  return true;
}

}  // namespace cartan
