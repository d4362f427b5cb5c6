#pragma once

// Seeded random instances shared by the property and acceptance tests.

#include <algorithm>
#include <random>
#include <vector>

#include "apolar/exponents.hpp"
#include "apolar/gorenstein.hpp"
#include "apolar/monomial_ideal.hpp"
#include "apolar/polynomial.hpp"

namespace apolar::testing {

inline int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline ExponentVector random_vector(std::mt19937& rng, std::size_t d, int max_coord) {
  std::vector<int> c(d);
  for (auto& v : c) v = uniform(rng, 0, max_coord);
  return ExponentVector(std::move(c));
}

/// Non-empty antichain: maximal elements of a few random points.
inline Antichain random_antichain(std::mt19937& rng, std::size_t d, int max_coord, int max_size) {
  std::vector<ExponentVector> pts;
  const int n = uniform(rng, 1, max_size);
  for (int i = 0; i < n; ++i) pts.push_back(random_vector(rng, d, max_coord));
  return Antichain::maximal_of(d, std::move(pts));
}

/// Proper zero-dimensional: pure powers of every variable plus random mixed generators.
inline MonomialIdeal random_zero_dim_ideal(std::mt19937& rng, std::size_t d, int max_power,
                                           int extra) {
  std::vector<ExponentVector> gens;
  auto nonzero = [&] {
    while (true) {
      auto v = random_vector(rng, d, max_power);
      if (v.degree() > 0) return v;
    }
  };
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<int> c(d, 0);
    c[i] = uniform(rng, 1, max_power);
    gens.emplace_back(std::move(c));
  }
  const int n = uniform(rng, 0, extra);
  for (int i = 0; i < n; ++i) gens.push_back(nonzero());
  return MonomialIdeal::from_generators(d, std::move(gens));
}

/// Arbitrary proper non-zero monomial ideal (possibly positive-dimensional).
inline MonomialIdeal random_ideal(std::mt19937& rng, std::size_t d, int max_coord, int max_gens) {
  while (true) {
    std::vector<ExponentVector> gens;
    const int n = uniform(rng, 1, max_gens);
    for (int i = 0; i < n; ++i) gens.push_back(random_vector(rng, d, max_coord));
    auto I = MonomialIdeal::from_generators(d, std::move(gens));
    if (!I.is_unit()) return I;
  }
}

inline Rational random_nonzero_rational(std::mt19937& rng) {
  int num = 0;
  while (num == 0) num = uniform(rng, -5, 5);
  Rational q(num, uniform(rng, 1, 3));
  q.canonicalize();
  return q;
}

/// d in {2,3}, 2 <= k <= 4, support of size <= 4 inside the box (k-1)1.
inline GorensteinSpec random_spec(std::mt19937& rng) {
  const std::size_t d = static_cast<std::size_t>(uniform(rng, 2, 3));
  const int k = uniform(rng, 2, 4);
  const int top = static_cast<int>(d) * (k - 1);
  const int N = uniform(rng, 0, top);
  std::vector<ExponentVector> candidates;
  for (const auto& e : box_points(ExponentVector::constant(d, k - 1)))
    if (e.degree() == N) candidates.push_back(e);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  const int size = uniform(rng, 1, std::min<int>(4, static_cast<int>(candidates.size())));
  Polynomial p(d);
  for (int i = 0; i < size; ++i) p.add_term(candidates[static_cast<std::size_t>(i)],
                                            random_nonzero_rational(rng));
  return GorensteinSpec(k, p);
}

}  // namespace apolar::testing
