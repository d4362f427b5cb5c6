#include "apolar/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace apolar {

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

Vector RowEchelon::reduce(Vector v) const {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p] == 0) continue;
    const Rational f = v[p];
    const Vector& row = rows_[r];
    for (std::size_t c = p; c < cols_; ++c)
      if (row[c] != 0) v[c] -= f * row[c];
  }
  return v;
}

bool RowEchelon::spans(const Vector& v) const { return is_zero(reduce(v)); }

bool RowEchelon::insert(Vector v) {
  v = reduce(std::move(v));
  auto lead = std::find_if(v.begin(), v.end(), [](const Rational& c) { return c != 0; });
  if (lead == v.end()) return false;
  const std::size_t p = static_cast<std::size_t>(lead - v.begin());
  const Rational inv = 1 / v[p];
  for (std::size_t c = p; c < cols_; ++c) v[c] *= inv;
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    const Rational f = row[p];
    for (std::size_t c = p; c < cols_; ++c)
      if (v[c] != 0) row[c] -= f * v[c];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto offset = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + offset, std::move(v));
  return true;
}

bool RowEchelon::same_space(const RowEchelon& other) const {
  // Reduced row echelon form is unique, so equal spaces have equal rows.
  return cols_ == other.cols_ && pivots_ == other.pivots_ && rows_ == other.rows_;
}

std::vector<Vector> kernel(const std::vector<Vector>& images, std::size_t codomain) {
  // Row-reduce [image_j | e_j]; rows whose pivot falls in the identity block
  // have a zero image part and span the kernel.
  const std::size_t n = images.size();
  RowEchelon ech(codomain + n);
  for (std::size_t j = 0; j < n; ++j) {
    if (images[j].size() != codomain) throw std::invalid_argument("image length mismatch");
    Vector row(codomain + n);
    std::copy(images[j].begin(), images[j].end(), row.begin());
    row[codomain + j] = 1;
    ech.insert(std::move(row));
  }
  std::vector<Vector> out;
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    if (ech.pivots()[r] < codomain) continue;
    const Vector& row = ech.rows()[r];
    out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(codomain), row.end());
  }
  return out;
}

}  // namespace apolar
