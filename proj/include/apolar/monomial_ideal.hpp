#pragma once

// Monomial ideals of K[x_1..x_d] as upsets of N_0^d, and the docle calculus
// on them: inverse ideals, the closure operator, saturation and the unique
// decomposition I = J ∩ H into a saturated and an m-primary part.

#include <cstddef>
#include <vector>

#include "apolar/exponents.hpp"

namespace apolar {

/// A finite set of pairwise incomparable exponent vectors, LEX-ascending.
class Antichain {
 public:
  explicit Antichain(std::size_t d) : dim_(d) {}
  /// Throws DomainError if two elements are comparable.
  Antichain(std::size_t d, std::vector<ExponentVector> elems);

  /// The maximal elements of an arbitrary finite set.
  static Antichain maximal_of(std::size_t d, std::vector<ExponentVector> elems);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  const std::vector<ExponentVector>& elements() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  bool contains(const ExponentVector& e) const;
  /// True iff some element dominates m, i.e. m lies in the downset D(this).
  bool below(const ExponentVector& m) const;
  bool is_subset_of(const Antichain& other) const;

  friend bool operator==(const Antichain&, const Antichain&) = default;

 private:
  std::size_t dim_;
  std::vector<ExponentVector> elems_;
};

class MonomialIdeal {
 public:
  /// The zero ideal (empty upset).
  explicit MonomialIdeal(std::size_t d) : dim_(d) {}

  /// Keeps only the minimal elements of raw.
  static MonomialIdeal from_generators(std::size_t d, std::vector<ExponentVector> raw);
  static MonomialIdeal unit(std::size_t d);
  /// (x_1^k, ..., x_d^k)
  static MonomialIdeal power(std::size_t d, int k);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const;
  /// Every variable has a pure power among the generators.
  bool is_zero_dimensional() const;

  bool contains(const ExponentVector& m) const;
  bool is_subset_of(const MonomialIdeal& other) const;

  /// Componentwise maximum of all generators; every minimal generator lies below it.
  ExponentVector generator_bound() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t dim_;
  std::vector<ExponentVector> gens_;
};

/// Maximal monomials outside I: m ∉ I with m + e_i ∈ I for every i.
/// Throws DomainError for the unit and the zero ideal.
Antichain docle(const MonomialIdeal& I);

/// The unique zero-dimensional monomial ideal whose docle is M:
/// the intersection over s ∈ M of (x_1^{s_1+1}, ..., x_d^{s_d+1}).
MonomialIdeal inverse_ideal(const Antichain& M);

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// I : x_i (0-based variable index).
MonomialIdeal colon_var(const MonomialIdeal& I, std::size_t i);
/// I : x_i^∞
MonomialIdeal colon_var_saturate(const MonomialIdeal& I, std::size_t i);
/// I : m^∞, the intersection of the I : x_i^∞.
MonomialIdeal saturate(const MonomialIdeal& I);

struct Decomposition {
  MonomialIdeal saturated;  // J = I : m^∞, empty docle
  MonomialIdeal primary;    // H = inverse_ideal(docle(I)), m-primary
};

/// I = J ∩ H; requires docle(I) non-empty.
Decomposition decompose(const MonomialIdeal& I);

struct Closure {
  MonomialIdeal ideal;
  /// Set when the docle is empty: the closure is all of N_0^d.
  bool whole_poset = false;
};

/// I ↦ N_0^d \ D(docle(I)).
Closure closure(const MonomialIdeal& I);

/// I ⊑ J  ⇔  I ⊆ J and docle(J) ⊆ docle(I).
bool sq_leq(const MonomialIdeal& I, const MonomialIdeal& J);

}  // namespace apolar
