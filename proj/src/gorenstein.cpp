#include "apolar/gorenstein.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

Polynomial drop_outside_box(const Polynomial& p, int k) {
  Polynomial out(p.dim());
  for (const auto& [e, c] : p.terms())
    if (std::all_of(e.begin(), e.end(), [&](int v) { return v <= k - 1; })) out.add_term(e, c);
  return out;
}

ExponentVector checked_leading(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("p vanishes modulo (x_1^k, ..., x_d^k)");
  return p.lex_leading();
}

}  // namespace

GorensteinSpec::GorensteinSpec(int k, const Polynomial& p)
    : k_(k), p_(drop_outside_box(p, k)), N_(0), M_(0), mu_(checked_leading(p_)) {
  if (k < 1) throw DomainError("power k must be >= 1");
  const auto N = p.homogeneous_degree();
  if (!N) throw DomainError("p must be a non-zero homogeneous polynomial");
  N_ = *N;
  M_ = static_cast<int>(d()) * (k - 1) - N_;
}

ExponentVector GorensteinSpec::socle_exponent() const {
  return *sub_checked(corner(), mu_);
}

SeriesSpec SeriesSpec::exponential(int M) {
  SeriesSpec f;
  for (int n = 0; n <= M; ++n) f.coeffs.emplace_back(Rational(1) / Rational(factorial(n)));
  return f;
}

SeriesSpec SeriesSpec::geometric(int M) {
  return SeriesSpec{std::vector<Rational>(static_cast<std::size_t>(M) + 1, Rational(1))};
}

Polynomial antipodal(const GorensteinSpec& spec) {
  Polynomial out(spec.d());
  const ExponentVector corner = spec.corner();
  for (const auto& [i, a] : spec.p().terms()) {
    ExponentVector reflected = *sub_checked(corner, i);
    out.add_term(reflected, a * Rational(multinomial(spec.M(), reflected.coords())));
  }
  return out;
}

Polynomial dual_socle_poly_raw(const GorensteinSpec& spec) {
  HomogeneousIdeal I = colon_power_ideal(spec.k(), spec.p());
  const GradedSlice& top = I.slice(spec.M());
  if (top.standard_monomials.size() != 1 || top.standard_monomials[0] != spec.socle_exponent())
    throw DomainError("top degree of R/I is not spanned by the socle monomial");
  Polynomial out(spec.d());
  for (const auto& j : top.monomial_basis) {
    const Rational c = top.standard_coordinates(Polynomial::monomial(j))[0];
    if (c != 0) out.add_term(j, c * Rational(multinomial(spec.M(), j.coords())));
  }
  return out;
}

Polynomial dual_socle_poly(const GorensteinSpec& spec) {
  Polynomial raw = dual_socle_poly_raw(spec);
  const ExponentVector lead = raw.lex_leading();
  const Rational scale = antipodal(spec).coefficient(lead) / raw.coefficient(lead);
  return raw * scale;
}

bool verify_gorenstein_ann(const GorensteinSpec& spec) {
  return ideal_equals(colon_power_ideal(spec.k(), spec.p()), ann_partial(antipodal(spec)));
}

MonomialIffResult monomial_iff_test(const GorensteinSpec& spec) {
  HomogeneousIdeal I = colon_power_ideal(spec.k(), spec.p());
  const ExponentVector q = spec.socle_exponent();
  return {is_monomial_ideal(I), q, ideal_equals(I, ann_partial(Polynomial::monomial(q)))};
}

namespace {

// An element of K[t] ⊗ R/I: t-exponent ↦ coordinates of the x-part on the
// standard monomials of its degree. Here the x-degree always equals the
// t-degree plus a fixed shift determined by the caller.
using Bigraded = std::map<ExponentVector, Vector, LexLess>;

// (sum_i t_i x_i)^n = sum_{|j| = n} multinomial(n; j) t^j x^j, reduced mod I.
Bigraded linear_form_power(const HomogeneousIdeal& I, int n) {
  Bigraded out;
  const GradedSlice& s = I.slice(n);
  for (const auto& j : s.monomial_basis) {
    Vector nf = s.standard_coordinates(Polynomial::monomial(j));
    if (is_zero(nf)) continue;
    const Rational w(multinomial(n, j.coords()));
    for (auto& c : nf) c *= w;
    out.emplace(j, std::move(nf));
  }
  return out;
}

struct KeyLess {
  bool operator()(const std::pair<ExponentVector, std::size_t>& a,
                  const std::pair<ExponentVector, std::size_t>& b) const {
    if (auto c = lex_cmp(a.first, b.first); c != 0) return c < 0;
    return a.second < b.second;
  }
};

}  // namespace

SeriesReport series_annihilator_report(const GorensteinSpec& spec, const SeriesSpec& f) {
  const int M = spec.M();
  if (static_cast<int>(f.coeffs.size()) < M + 1)
    throw DomainError("series needs coefficients a_0..a_" + std::to_string(M));
  for (int n = 0; n <= M; ++n)
    if (f.coeffs[static_cast<std::size_t>(n)] == 0)
      throw DomainError("series coefficient a_" + std::to_string(n) + " is zero");

  HomogeneousIdeal I = colon_power_ideal(spec.k(), spec.p());

  // F = sum_{n <= M} a_n (sum t_i x_i)^n; terms are keyed by t-exponent and
  // the x-degree of a term equals its t-degree.
  Bigraded F;
  for (int n = 0; n <= M; ++n) {
    for (auto& [j, v] : linear_form_power(I, n)) {
      for (auto& c : v) c *= f.coeffs[static_cast<std::size_t>(n)];
      F.emplace(j, std::move(v));
    }
  }

  SeriesReport report{};
  report.power_nonzero_at_top = !linear_form_power(I, M).empty();
  report.power_zero_above_top = linear_form_power(I, M + 1).empty();

  for (int e = 0; e <= M + 1; ++e) {
    const GradedSlice& shape = I.slice(e);
    // g(∂/∂t) for g = x^m sends t^j x̄^j-part to (j!/(j-m)!) t^{j-m}; index
    // the image by (j - m, standard monomial position).
    std::map<std::pair<ExponentVector, std::size_t>, std::size_t, KeyLess> column_of;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse_images;
    for (const auto& m : shape.monomial_basis) {
      std::vector<std::pair<std::size_t, Rational>> img;
      const Polynomial op = Polynomial::monomial(m);
      for (const auto& [j, v] : F) {
        Polynomial hit = diff_action(op, Polynomial::monomial(j));
        if (hit.is_zero()) continue;
        const auto& [u, w] = *hit.terms().begin();
        for (std::size_t s = 0; s < v.size(); ++s) {
          if (v[s] == 0) continue;
          auto [it, fresh] = column_of.try_emplace({u, s}, column_of.size());
          img.emplace_back(it->second, w * v[s]);
        }
      }
      sparse_images.push_back(std::move(img));
    }
    std::vector<Vector> images;
    for (const auto& img : sparse_images) {
      Vector dense(column_of.size());
      for (const auto& [c, val] : img) dense[c] += val;
      images.push_back(std::move(dense));
    }
    auto ker = kernel(images, column_of.size());
    RowEchelon ann(shape.monomial_basis.size());
    for (auto& v : ker) ann.insert(std::move(v));

    report.annihilator_dims.push_back(ann.rank());
    report.ideal_dims.push_back(shape.reduced.rank());
    if (!ann.same_space(shape.reduced)) report.mismatched_degrees.push_back(e);
  }
  return report;
}

bool series_annihilator_check(const GorensteinSpec& spec, const SeriesSpec& f) {
  return series_annihilator_report(spec, f).ok();
}

}  // namespace apolar
