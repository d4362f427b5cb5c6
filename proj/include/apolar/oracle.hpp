#pragma once

// Deliberately naive reference computations: full enumeration and dense
// Gauss-Jordan elimination, sharing no code path with the graded engine.
// Meant for small instances (d <= 3, degrees <= 14).

#include <cstddef>
#include <vector>

#include "apolar/monomial_ideal.hpp"
#include "apolar/polynomial.hpp"

namespace apolar::oracle {

/// Scans every m <= box. Throws DomainError if a generator is not <= box.
Antichain brute_docle(const MonomialIdeal& I, const ExponentVector& box);

struct AnnTable {
  /// kernel_dims[e] = dim {f in R_e : f(∂/∂t) Q = 0}, e = 0..max_deg.
  std::vector<std::size_t> kernel_dims;
  std::vector<std::vector<Polynomial>> kernel_bases;
};

/// Differentiates Q by every monomial of degree <= max_deg, one partial at a time.
AnnTable brute_ann(const Polynomial& Q, int max_deg);

/// Hilbert function of R/(gens) from the full Macaulay matrix in each degree.
std::vector<std::size_t> brute_hilbert(std::size_t d, const std::vector<Polynomial>& gens,
                                       int cutoff);
std::size_t brute_quotient_dim(std::size_t d, const std::vector<Polynomial>& gens, int cutoff);

/// Hilbert function of R/((x^k) : p), as ranks of multiplication by p into
/// R/(x_1^k, ..., x_d^k).
std::vector<std::size_t> brute_colon_hilbert(int k, const Polynomial& p);

/// Applies f(∂/∂t) to Q by repeated single-variable differentiation.
Polynomial apply_derivatives(const Polynomial& f, const Polynomial& Q);

}  // namespace apolar::oracle
