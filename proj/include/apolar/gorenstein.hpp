#pragma once

// Homogeneous artinian Gorenstein ideals I = ((x_1^k, ..., x_d^k) : p) and
// their apolar description: I is the annihilator, under differentiation, of
// the antipodal polynomial of p.

#include <cstddef>
#include <vector>

#include "apolar/exponents.hpp"
#include "apolar/graded_engine.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

class GorensteinSpec {
 public:
  /// Drops the terms of p that vanish modulo the power ideal. Throws
  /// DomainError if k < 1, p is inhomogeneous or nothing survives.
  GorensteinSpec(int k, const Polynomial& p);

  std::size_t d() const noexcept { return p_.dim(); }
  int k() const noexcept { return k_; }
  const Polynomial& p() const noexcept { return p_; }
  int N() const noexcept { return N_; }
  /// Socle degree d(k-1) - N.
  int M() const noexcept { return M_; }
  /// LEX-largest exponent of p.
  const ExponentVector& mu() const noexcept { return mu_; }
  /// (k-1)1 - mu: the exponent of the monomial generating the socle.
  ExponentVector socle_exponent() const;
  ExponentVector corner() const { return ExponentVector::constant(d(), k_ - 1); }

 private:
  int k_;
  Polynomial p_;
  int N_;
  int M_;
  ExponentVector mu_;
};

/// Truncated coefficients a_0..a_M of a power series f(z).
struct SeriesSpec {
  std::vector<Rational> coeffs;

  /// a_n = 1/n!
  static SeriesSpec exponential(int M);
  /// a_n = 1
  static SeriesSpec geometric(int M);
};

/// sum over i in supp(p) of multinomial(M; (k-1)1 - i) a_i t^{(k-1)1 - i}.
Polynomial antipodal(const GorensteinSpec& spec);

/// (t_1 x_1 + ... + t_d x_d)^M read off in (R/I)_M with the socle monomial
/// mapped to 1. Equals antipodal(spec) / a_mu.
Polynomial dual_socle_poly_raw(const GorensteinSpec& spec);
/// dual_socle_poly_raw rescaled so its LEX-largest coefficient agrees with antipodal.
Polynomial dual_socle_poly(const GorensteinSpec& spec);

/// colon_power_ideal(k, p) == ann_partial(antipodal(spec)).
bool verify_gorenstein_ann(const GorensteinSpec& spec);

struct MonomialIffResult {
  bool is_monomial_ideal;
  ExponentVector socle_monomial;
  bool ann_of_socle_equals_ideal;
};

MonomialIffResult monomial_iff_test(const GorensteinSpec& spec);

struct SeriesReport {
  /// dim of {g in R_e : g(∂/∂t) f(sum t_i x_i) = 0} for e = 0..M+1.
  std::vector<std::size_t> annihilator_dims;
  std::vector<std::size_t> ideal_dims;
  /// Degrees e <= M+1 where the annihilator piece differs from I_e as a subspace.
  std::vector<int> mismatched_degrees;
  bool power_nonzero_at_top;    // (sum t_i x_i)^M != 0 in K[t] ⊗ R/I
  bool power_zero_above_top;    // (sum t_i x_i)^{M+1} == 0
  bool ok() const {
    return mismatched_degrees.empty() && power_nonzero_at_top && power_zero_above_top;
  }
};

/// Throws DomainError if f has fewer than M+1 coefficients or a zero among a_0..a_M.
SeriesReport series_annihilator_report(const GorensteinSpec& spec, const SeriesSpec& f);
bool series_annihilator_check(const GorensteinSpec& spec, const SeriesSpec& f);

}  // namespace apolar
