#pragma once

// Exponent vectors: points of N_0^d, indexing the monomials of K[x_1..x_d].

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace apolar {

class ExponentVector {
 public:
  /// The zero vector (the monomial 1) in d variables.
  explicit ExponentVector(std::size_t d);
  ExponentVector(std::initializer_list<int> coords);
  explicit ExponentVector(std::vector<int> coords);

  static ExponentVector unit(std::size_t d, std::size_t i);
  /// (value, ..., value); with value = k-1 this is the corner of the box (k-1)1.
  static ExponentVector constant(std::size_t d, int value);

  std::size_t dim() const noexcept { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int degree() const noexcept;
  std::span<const int> coords() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> coords_;
};

/// Componentwise order a <= b, i.e. x^a divides x^b.
bool leq(const ExponentVector& a, const ExponentVector& b);

/// LEX with x_1 < x_2 < ... < x_d: the last coordinate is compared first.
std::strong_ordering lex_cmp(const ExponentVector& a, const ExponentVector& b);

ExponentVector add(const ExponentVector& a, const ExponentVector& b);
/// a - b, or nullopt when some coordinate would go negative (b is not <= a).
std::optional<ExponentVector> sub_checked(const ExponentVector& a,
                                          const ExponentVector& b);
/// Componentwise maximum (exponent of lcm).
ExponentVector join(const ExponentVector& a, const ExponentVector& b);

struct LexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return lex_cmp(a, b) < 0;
  }
};

struct LexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return lex_cmp(a, b) > 0;
  }
};

/// All exponent vectors of total degree e in d variables, LEX-descending.
std::vector<ExponentVector> monomials_of_degree(std::size_t d, int e);

/// All exponent vectors a with 0 <= a <= box, in LEX-ascending order.
std::vector<ExponentVector> box_points(const ExponentVector& box);

/// "x1^2*x3", or "1" for the zero vector.
std::string format_monomial(const ExponentVector& e, std::string_view prefix = "x");

void check_same_ambient(std::size_t lhs, std::size_t rhs);

}  // namespace apolar
