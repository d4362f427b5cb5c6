#include "apolar/graded_engine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "apolar/errors.hpp"

namespace apolar {

// ---------------------------------------------------------------- slices

GradedSlice::GradedSlice(std::size_t d, int e)
    : degree(e), monomial_basis(monomials_of_degree(d, e)), reduced(monomial_basis.size()) {
  for (std::size_t c = 0; c < monomial_basis.size(); ++c) index_.emplace(monomial_basis[c], c);
  refresh_monomials();
}

std::size_t GradedSlice::column(const ExponentVector& m) const {
  auto it = index_.find(m);
  if (it == index_.end())
    throw DomainError("monomial " + format_monomial(m) + " is not of degree " +
                      std::to_string(degree));
  return it->second;
}

Vector GradedSlice::coordinates(const Polynomial& f) const {
  Vector v(monomial_basis.size());
  for (const auto& [e, c] : f.terms()) v[column(e)] = c;
  return v;
}

Polynomial GradedSlice::to_polynomial(const Vector& v) const {
  Polynomial out(monomial_basis.front().dim());
  for (std::size_t c = 0; c < v.size(); ++c) out.add_term(monomial_basis[c], v[c]);
  return out;
}

bool GradedSlice::contains(const Polynomial& f) const {
  return reduced.spans(coordinates(f));
}

Vector GradedSlice::standard_coordinates(const Polynomial& f) const {
  Vector full = reduced.reduce(coordinates(f));
  Vector out;
  out.reserve(standard_monomials.size());
  for (const auto& m : standard_monomials) out.push_back(full[column(m)]);
  return out;
}

void GradedSlice::refresh_monomials() {
  pivot_monomials.clear();
  standard_monomials.clear();
  std::vector<bool> is_pivot(monomial_basis.size(), false);
  for (std::size_t p : reduced.pivots()) is_pivot[p] = true;
  for (std::size_t c = 0; c < monomial_basis.size(); ++c)
    (is_pivot[c] ? pivot_monomials : standard_monomials).push_back(monomial_basis[c]);
}

namespace {

// Image of a degree-e vector under multiplication by x_i, in degree-(e+1) coordinates.
Vector shift(const Vector& v, const GradedSlice& from, const GradedSlice& to, std::size_t i) {
  Vector out(to.monomial_basis.size());
  const std::size_t d = from.monomial_basis.front().dim();
  const ExponentVector xi = ExponentVector::unit(d, i);
  for (std::size_t c = 0; c < v.size(); ++c)
    if (v[c] != 0) out[to.column(add(from.monomial_basis[c], xi))] = v[c];
  return out;
}

}  // namespace

// ---------------------------------------------------------------- ideals

HomogeneousIdeal::HomogeneousIdeal(std::size_t d, std::vector<Polynomial> generators)
    : dim_(d), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    check_same_ambient(d, g.dim());
    if (g.is_zero()) continue;
    if (!g.homogeneous_degree())
      throw DomainError("generator " + format_polynomial(g) + " is not homogeneous");
    generators_.push_back(std::move(g));
  }
}

HomogeneousIdeal HomogeneousIdeal::from_monomial(const MonomialIdeal& I) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(Polynomial::monomial(g));
  return HomogeneousIdeal(I.dim(), std::move(gens));
}

const GradedSlice& HomogeneousIdeal::slice(int e) const {
  if (e < 0) throw std::invalid_argument("negative degree");
  std::lock_guard lock(cache_->mu);
  return slice_locked(e);
}

const GradedSlice& HomogeneousIdeal::slice_locked(int e) const {
  auto& slices = cache_->slices;
  if (auto it = slices.find(e); it != slices.end()) return it->second;
  int start = e;
  while (start > 0 && !slices.contains(start - 1)) --start;
  for (int deg = start; deg <= e; ++deg) {
    GradedSlice s(dim_, deg);
    if (deg > 0) {
      const GradedSlice& prev = slices.at(deg - 1);
      for (const auto& row : prev.reduced.rows())
        for (std::size_t i = 0; i < dim_; ++i) s.reduced.insert(shift(row, prev, s, i));
    }
    for (const auto& g : generators_)
      if (*g.homogeneous_degree() == deg) s.reduced.insert(s.coordinates(g));
    s.refresh_monomials();
    slices.emplace(deg, std::move(s));
  }
  return slices.at(e);
}

int HomogeneousIdeal::default_cutoff() const {
  int sum = 0;
  int maxdeg = 0;
  for (const auto& g : generators_) {
    const int deg = *g.homogeneous_degree();
    sum += deg;
    maxdeg = std::max(maxdeg, deg);
  }
  const int d = static_cast<int>(dim_);
  return std::max(sum + d, d * std::max(maxdeg - 1, 0) + 1);
}

GradedSlice slice(const HomogeneousIdeal& I, int e) { return I.slice(e); }

// ---------------------------------------------------------------- invariants

std::vector<std::size_t> hilbert_function(const HomogeneousIdeal& I,
                                          std::optional<int> cutoff) {
  const int limit = cutoff.value_or(I.default_cutoff());
  std::vector<std::size_t> h;
  for (int e = 0; e <= limit; ++e) {
    const std::size_t value = I.slice(e).hilbert_value();
    // I_e = R_e forces I_{e'} = R_{e'} for all e' > e.
    if (value == 0) return h;
    h.push_back(value);
  }
  throw NotArtinian(limit);
}

std::size_t quotient_dimension(const HomogeneousIdeal& I, std::optional<int> cutoff) {
  auto h = hilbert_function(I, cutoff);
  return std::accumulate(h.begin(), h.end(), std::size_t{0});
}

int top_degree(const HomogeneousIdeal& I, std::optional<int> cutoff) {
  return static_cast<int>(hilbert_function(I, cutoff).size()) - 1;
}

std::vector<SocleComponent> socle(const HomogeneousIdeal& I, std::optional<int> cutoff) {
  const int top = top_degree(I, cutoff);
  const std::size_t d = I.dim();
  std::vector<SocleComponent> out;
  for (int e = 0; e <= top; ++e) {
    const GradedSlice& here = I.slice(e);
    const GradedSlice& next = I.slice(e + 1);
    const std::size_t h_next = next.hilbert_value();
    std::vector<Vector> images;
    for (const auto& m : here.standard_monomials) {
      Vector img;
      img.reserve(d * h_next);
      for (std::size_t i = 0; i < d; ++i) {
        Vector part = next.standard_coordinates(
            Polynomial::monomial(add(m, ExponentVector::unit(d, i))));
        img.insert(img.end(), part.begin(), part.end());
      }
      images.push_back(std::move(img));
    }
    auto ker = kernel(images, d * h_next);
    if (ker.empty()) continue;
    SocleComponent comp{e, std::move(ker), {}};
    for (const auto& v : comp.basis) {
      Polynomial rep(d);
      for (std::size_t j = 0; j < v.size(); ++j)
        rep.add_term(here.standard_monomials[j], v[j]);
      comp.representatives.push_back(std::move(rep));
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t socle_dimension(const HomogeneousIdeal& I, std::optional<int> cutoff) {
  std::size_t n = 0;
  for (const auto& c : socle(I, cutoff)) n += c.basis.size();
  return n;
}

MonomialIdeal initial_monomials(const HomogeneousIdeal& I, std::optional<int> cutoff) {
  const int top = top_degree(I, cutoff);
  std::vector<ExponentVector> pivots;
  for (int e = 0; e <= top + 1; ++e) {
    const auto& p = I.slice(e).pivot_monomials;
    pivots.insert(pivots.end(), p.begin(), p.end());
  }
  return MonomialIdeal::from_generators(I.dim(), std::move(pivots));
}

bool is_monomial_ideal(const HomogeneousIdeal& I, std::optional<int> cutoff) {
  const int top = top_degree(I, cutoff);
  for (int e = 0; e <= top + 1; ++e) {
    for (const auto& row : I.slice(e).reduced.rows()) {
      auto nonzero = std::count_if(row.begin(), row.end(),
                                   [](const Rational& c) { return c != 0; });
      if (nonzero != 1) return false;
    }
  }
  return true;
}

bool ideal_equals(const HomogeneousIdeal& I, const HomogeneousIdeal& J,
                  std::optional<int> cutoff) {
  check_same_ambient(I.dim(), J.dim());
  const int top_i = top_degree(I, cutoff);
  const int top_j = top_degree(J, cutoff);
  if (top_i != top_j) return false;
  for (int e = 0; e <= top_i + 1; ++e)
    if (!I.slice(e).reduced.same_space(J.slice(e).reduced)) return false;
  return true;
}

std::size_t rank(const std::vector<Vector>& rows, std::size_t cols) {
  RowEchelon ech(cols);
  for (const auto& r : rows) ech.insert(r);
  return ech.rank();
}

std::vector<Vector> pairing_matrix(const HomogeneousIdeal& I, int i) {
  const int top = top_degree(I);
  if (i < 0 || i > top) throw DomainError("pairing degree out of range");
  const GradedSlice& top_slice = I.slice(top);
  if (top_slice.hilbert_value() != 1)
    throw DomainError("top degree piece is not one-dimensional");
  const GradedSlice& left = I.slice(i);
  const GradedSlice& right = I.slice(top - i);
  std::vector<Vector> out;
  for (const auto& a : left.standard_monomials) {
    Vector row;
    for (const auto& b : right.standard_monomials)
      row.push_back(top_slice.standard_coordinates(Polynomial::monomial(add(a, b)))[0]);
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------- constructions

namespace {

using KernelAt = std::function<std::vector<Vector>(const GradedSlice& shape)>;

// Assembles minimal generators from the degree-wise pieces K_0..K_top of an
// ideal: a kernel vector becomes a generator iff it is not already in the
// span of R_1 * K_{e-1}.
HomogeneousIdeal ideal_from_pieces(std::size_t d, int top, const KernelAt& piece_at) {
  std::vector<Polynomial> gens;
  std::optional<GradedSlice> prev;
  for (int e = 0; e <= top; ++e) {
    GradedSlice cur(d, e);
    if (prev) {
      for (const auto& row : prev->reduced.rows())
        for (std::size_t i = 0; i < d; ++i) cur.reduced.insert(shift(row, *prev, cur, i));
    }
    for (auto& v : piece_at(cur)) {
      if (cur.reduced.insert(v)) gens.push_back(cur.to_polynomial(v));
    }
    prev = std::move(cur);
  }
  return HomogeneousIdeal(d, std::move(gens));
}

}  // namespace

HomogeneousIdeal colon_power_ideal(int k, const Polynomial& p) {
  if (k < 1) throw DomainError("power k must be >= 1");
  const std::size_t d = p.dim();
  Polynomial reduced(d);
  for (const auto& [e, c] : p.terms())
    if (std::all_of(e.begin(), e.end(), [&](int v) { return v < k; })) reduced.add_term(e, c);
  if (reduced.is_zero())
    throw DomainError("p vanishes modulo (x_1^k, ..., x_d^k)");
  const auto N = p.homogeneous_degree();
  if (!N) throw DomainError("p is not homogeneous");
  const int top_degree_corner = static_cast<int>(d) * (k - 1);
  const int M = top_degree_corner - *N;

  return ideal_from_pieces(d, M + 1, [&](const GradedSlice& shape) {
    const int target_deg = shape.degree + *N;
    std::vector<Vector> images;
    if (target_deg > top_degree_corner) {
      images.assign(shape.monomial_basis.size(), Vector{});
      return kernel(images, 0);
    }
    GradedSlice target(d, target_deg);
    for (const auto& m : shape.monomial_basis) {
      Vector img(target.monomial_basis.size());
      for (const auto& [e, c] : reduced.terms()) {
        ExponentVector prod = add(m, e);
        if (std::all_of(prod.begin(), prod.end(), [&](int v) { return v < k; }))
          img[target.column(prod)] += c;
      }
      images.push_back(std::move(img));
    }
    return kernel(images, target.monomial_basis.size());
  });
}

HomogeneousIdeal ann_partial(const Polynomial& Q) {
  if (Q.is_zero()) throw DomainError("annihilator of the zero polynomial");
  const auto M = Q.homogeneous_degree();
  if (!M) throw DomainError("Q is not homogeneous");
  const std::size_t d = Q.dim();

  return ideal_from_pieces(d, *M + 1, [&](const GradedSlice& shape) {
    const int target_deg = *M - shape.degree;
    std::vector<Vector> images;
    if (target_deg < 0) {
      images.assign(shape.monomial_basis.size(), Vector{});
      return kernel(images, 0);
    }
    GradedSlice target(d, target_deg);
    for (const auto& m : shape.monomial_basis)
      images.push_back(target.coordinates(diff_action(Polynomial::monomial(m), Q)));
    return kernel(images, target.monomial_basis.size());
  });
}

}  // namespace apolar
