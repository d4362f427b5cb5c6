#pragma once

// Degree-by-degree linear algebra for homogeneous ideals of K[x_1..x_d].
//
// Every object here is artinian and graded, so the degree-e piece I_e is a
// finite-dimensional subspace of R_e and can be computed exactly as the row
// space of a Macaulay matrix. Columns are the degree-e monomials in
// LEX-descending order; the pivots of the reduced matrix are then exactly
// the LEX initial monomials of I in degree e and the non-pivot columns are
// the standard monomials spanning (R/I)_e. No S-polynomials are needed.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "apolar/exponents.hpp"
#include "apolar/linalg.hpp"
#include "apolar/monomial_ideal.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

struct GradedSlice {
  GradedSlice(std::size_t d, int degree);

  int degree;
  std::vector<ExponentVector> monomial_basis;  // column order, LEX-descending
  RowEchelon reduced;                          // I_e
  std::vector<ExponentVector> pivot_monomials;
  std::vector<ExponentVector> standard_monomials;  // LEX-descending

  std::size_t column(const ExponentVector& m) const;
  std::size_t hilbert_value() const noexcept { return standard_monomials.size(); }

  /// Coordinates of a polynomial whose terms all have degree `degree`.
  Vector coordinates(const Polynomial& f) const;
  Polynomial to_polynomial(const Vector& v) const;
  bool contains(const Polynomial& f) const;
  /// Normal form of f modulo I_e, as coefficients on standard_monomials.
  Vector standard_coordinates(const Polynomial& f) const;
  /// Called after rows change; refreshes pivot and standard monomials.
  void refresh_monomials();

 private:
  std::map<ExponentVector, std::size_t, LexLess> index_;
};

class HomogeneousIdeal {
 public:
  /// Zero generators are dropped; throws DomainError on an inhomogeneous one.
  HomogeneousIdeal(std::size_t d, std::vector<Polynomial> generators);
  static HomogeneousIdeal from_monomial(const MonomialIdeal& I);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

  /// Computed once per degree and shared between copies.
  const GradedSlice& slice(int e) const;

  /// A degree by which an artinian ideal with these generator degrees must
  /// have vanished: max(sum deg + d, d(maxdeg - 1) + 1).
  int default_cutoff() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<int, GradedSlice> slices;
  };

  const GradedSlice& slice_locked(int e) const;

  std::size_t dim_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

GradedSlice slice(const HomogeneousIdeal& I, int e);

/// h(0), ..., h(top) with h(top + 1) = 0; empty for the unit ideal.
/// Throws NotArtinian if no slice vanishes up to the cutoff.
std::vector<std::size_t> hilbert_function(const HomogeneousIdeal& I,
                                          std::optional<int> cutoff = std::nullopt);
std::size_t quotient_dimension(const HomogeneousIdeal& I,
                               std::optional<int> cutoff = std::nullopt);
/// Largest degree with (R/I)_e != 0 (the socle degree for Gorenstein quotients).
int top_degree(const HomogeneousIdeal& I, std::optional<int> cutoff = std::nullopt);

struct SocleComponent {
  int degree;
  /// Basis of ((I : m) / I)_degree, as coordinates on the slice's standard monomials.
  std::vector<Vector> basis;
  std::vector<Polynomial> representatives;
};

/// Kernel of (R/I)_e -> ⊕_i (R/I)_{e+1}, v ↦ (x_i v)_i, for each degree with a
/// non-trivial kernel.
std::vector<SocleComponent> socle(const HomogeneousIdeal& I,
                                  std::optional<int> cutoff = std::nullopt);
std::size_t socle_dimension(const HomogeneousIdeal& I,
                            std::optional<int> cutoff = std::nullopt);

/// The LEX initial ideal, as the minimized union of all slice pivots.
MonomialIdeal initial_monomials(const HomogeneousIdeal& I,
                                std::optional<int> cutoff = std::nullopt);

/// True iff every I_e is spanned by monomials.
bool is_monomial_ideal(const HomogeneousIdeal& I, std::optional<int> cutoff = std::nullopt);

bool ideal_equals(const HomogeneousIdeal& I, const HomogeneousIdeal& J,
                  std::optional<int> cutoff = std::nullopt);

/// ((x_1^k, ..., x_d^k) : p). Throws DomainError if p is not homogeneous or
/// vanishes modulo the power ideal.
HomogeneousIdeal colon_power_ideal(int k, const Polynomial& p);

/// {f : f(∂/∂t) Q = 0} for a non-zero homogeneous Q.
HomogeneousIdeal ann_partial(const Polynomial& Q);

/// Multiplication pairing (R/I)_i x (R/I)_{top - i} -> (R/I)_top for an ideal
/// whose top degree piece is one-dimensional. Rows index the standard
/// monomials of degree i, columns those of degree top - i.
std::vector<Vector> pairing_matrix(const HomogeneousIdeal& I, int i);

std::size_t rank(const std::vector<Vector>& rows, std::size_t cols);

}  // namespace apolar
