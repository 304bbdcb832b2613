#include <algorithm>
#include <limits>
#include <stdexcept>

#include "cartan/verify.hpp"

namespace cartan::verify {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace

Sampler::Sampler(const GenSpec& spec, std::uint64_t key) : spec_(spec), engine_(splitmix(spec.seed ^ splitmix(key))) {}

Sampler::Sampler(const GenSpec& spec, const std::string& check_id, const std::string& fixture, std::uint64_t trial)
    : Sampler(spec, splitmix(fnv1a(check_id) ^ splitmix(fnv1a(fixture) ^ splitmix(trial)))) {}

int Sampler::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty sampling range");
  // Rejection sampling keeps the stream identical across standard libraries.
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

Rational Sampler::coefficient() {
  int p = uniform(1, spec_.coeff_bound);
  if (coin()) p = -p;
  Rational q(p, uniform(1, spec_.coeff_bound));
  q.canonicalize();
  return q;
}

Poly Sampler::poly(std::size_t nvars) {
  const int terms = uniform(1, spec_.max_terms);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    int budget = uniform(0, spec_.max_degree);
    std::uint64_t bits = 0;
    for (int k = 0; k < budget; ++k) bits += Monomial::unit(static_cast<std::size_t>(uniform(0, static_cast<int>(nvars) - 1))).bits();
    out.push_back({Monomial(bits), coefficient()});
  }
  Poly p = Poly::from_terms(nvars, std::move(out));
  return p.is_zero() ? Poly::constant(nvars, coefficient()) : p;
}

Form gen_form(Sampler& sampler, const GeometryPtr& geometry, int degree) {
  const int n = static_cast<int>(geometry->dim());
  if (degree < 0 || degree > n)
    throw FormError("cannot draw a " + std::to_string(degree) + "-form in dimension " + std::to_string(n));
  const auto& slots = subsets(geometry->dim(), static_cast<std::size_t>(degree));
  Form f(geometry, degree);
  // Sparse: each slot is filled with probability 1/2, and at least one is.
  const std::size_t forced = static_cast<std::size_t>(sampler.uniform(0, static_cast<int>(slots.size()) - 1));
  for (std::size_t k = 0; k < slots.size(); ++k)
    if (k == forced || sampler.coin()) f.add(slots[k], RationalFn(sampler.poly(geometry->nvars())));
  return f;
}

RationalFn gen_scalar(Sampler& sampler, const GeometryPtr& geometry) {
  return RationalFn(sampler.poly(geometry->nvars()));
}

VectorField gen_vector(Sampler& sampler, const GeometryPtr& geometry) {
  std::vector<RationalFn> comps;
  for (std::size_t mu = 0; mu < geometry->dim(); ++mu)
    comps.push_back(sampler.coin() ? RationalFn(sampler.poly(geometry->nvars())) : geometry->zero());
  if (VectorField(geometry, comps).is_zero()) comps[0] = RationalFn(sampler.poly(geometry->nvars()));
  return VectorField(geometry, std::move(comps));
}

// ---------------------------------------------------------------------------

Trial::Trial(const Fixture& fixture, Sampler& sampler) : fixture_(fixture), sampler_(sampler) {}

int Trial::degree(int lo, int hi) {
  lo = std::max(lo, 0);
  hi = std::min(hi, dim());
  return sampler_.uniform(lo, hi);
}

Form Trial::form(const std::string& name, int degree) {
  Form f = gen_form(sampler_, geometry(), degree);
  inputs_.emplace_back(name, to_string(f));
  return f;
}

RationalFn Trial::scalar(const std::string& name) {
  RationalFn f = gen_scalar(sampler_, geometry());
  inputs_.emplace_back(name, f.to_string(geometry()->coords()));
  return f;
}

VectorField Trial::vector(const std::string& name) {
  VectorField v = gen_vector(sampler_, geometry());
  inputs_.emplace_back(name, to_string(v));
  return v;
}

VectorField Trial::killing(const std::string& name) {
  const auto& declared = fixture_.killing_vectors;
  if (declared.empty()) throw FormError("fixture " + fixture_.name + " declares no Killing vectors");
  VectorField v(geometry());
  std::string label;
  while (v.is_zero()) {
    label.clear();
    for (const auto& kv : declared) {
      if (!sampler_.coin()) continue;
      const Rational c = sampler_.coefficient();
      v += VectorField(geometry(), kv.components).scaled(geometry()->constant(c));
      label += (label.empty() ? "" : " + ") + to_string(c) + "*" + kv.name;
    }
  }
  inputs_.emplace_back(name, to_string(v) + "  [" + label + "]");
  return v;
}

}  // namespace cartan::verify
