#pragma once

// Exact row reduction over Q. Columns are ordered by the caller; the pivot of
// a row is its first non-zero column, so putting LEX-larger monomials first
// makes pivots the leading monomials.

#include <cstddef>
#include <vector>

#include "apolar/polynomial.hpp"

namespace apolar {

using Vector = std::vector<Rational>;

/// An incrementally maintained reduced row echelon form.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Reduces v against the current rows; the result has zeros on every pivot column.
  Vector reduce(Vector v) const;
  bool spans(const Vector& v) const;
  /// Adds v to the row space; returns false if it was already spanned.
  bool insert(Vector v);

  bool same_space(const RowEchelon& other) const;

 private:
  std::size_t cols_;
  std::vector<Vector> rows_;  // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

bool is_zero(const Vector& v);

/// Basis of the kernel of the linear map sending basis vector j to images[j].
/// images must all have length `codomain`.
std::vector<Vector> kernel(const std::vector<Vector>& images, std::size_t codomain);

}  // namespace apolar
