#pragma once

// Sparse polynomials over Q and the two actions of K[x] on K[t]:
// differentiation (x_i acts as d/dt_i) and coefficient-free contraction.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apolar/exponents.hpp"

namespace apolar {

using Rational = mpq_class;
using Integer = mpz_class;

Integer factorial(int n);
/// n! / (k_1! ... k_d!) for k_1 + ... + k_d = n; zero if any k_i < 0 or the sum is off.
Integer multinomial(int n, std::span<const int> parts);

class Polynomial {
 public:
  using Terms = std::map<ExponentVector, Rational, LexLess>;

  /// The zero polynomial in d variables.
  explicit Polynomial(std::size_t d);
  static Polynomial monomial(const ExponentVector& e, Rational c = 1);
  static Polynomial constant(std::size_t d, Rational c);
  static Polynomial variable(std::size_t d, std::size_t i);

  std::size_t dim() const noexcept { return dim_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  Rational coefficient(const ExponentVector& e) const;
  /// Adds c to the coefficient of x^e, erasing it if it cancels.
  void add_term(const ExponentVector& e, const Rational& c);

  /// Total degree; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  /// The common degree of all terms; nullopt if zero or inhomogeneous.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

  /// LEX-largest exponent in the support. Requires non-zero.
  const ExponentVector& lex_leading() const;
  std::vector<ExponentVector> support() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t dim_;
  Terms terms_;
};

Polynomial pow(const Polynomial& p, int n);

/// f ∘ g with x^p ∘ t^q = prod q_i!/(q_i - p_i)! t^{q-p} when p <= q, else 0.
Polynomial diff_action(const Polynomial& f, const Polynomial& g);
/// As diff_action but every factorial weight is replaced by 1.
Polynomial contraction_action(const Polynomial& f, const Polynomial& g);
bool annihilates(const Polynomial& f, const Polynomial& Q);

/// Terms in LEX-ascending order, e.g. "3*t1^2*t2 + 3*t1*t2^2 + t2^3".
std::string format_polynomial(const Polynomial& p, std::string_view prefix = "x");
std::string format_rational(const Rational& q);

}  // namespace apolar
