#include "apolar/exponents.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "apolar/errors.hpp"

namespace apolar {

void check_same_ambient(std::size_t lhs, std::size_t rhs) {
  if (lhs != rhs) throw AmbientMismatch(lhs, rhs);
}

ExponentVector::ExponentVector(std::size_t d) : coords_(d, 0) {
  if (d == 0) throw std::invalid_argument("exponent vector needs d >= 1");
}

ExponentVector::ExponentVector(std::initializer_list<int> coords)
    : ExponentVector(std::vector<int>(coords)) {}

ExponentVector::ExponentVector(std::vector<int> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("exponent vector needs d >= 1");
  if (std::any_of(coords_.begin(), coords_.end(), [](int c) { return c < 0; }))
    throw std::invalid_argument("negative exponent");
}

ExponentVector ExponentVector::unit(std::size_t d, std::size_t i) {
  if (i >= d) throw std::out_of_range("variable index out of range");
  ExponentVector e(d);
  e.coords_[i] = 1;
  return e;
}

ExponentVector ExponentVector::constant(std::size_t d, int value) {
  return ExponentVector(std::vector<int>(d, value));
}

int ExponentVector::degree() const noexcept {
  return std::accumulate(coords_.begin(), coords_.end(), 0);
}

bool leq(const ExponentVector& a, const ExponentVector& b) {
  check_same_ambient(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::strong_ordering lex_cmp(const ExponentVector& a, const ExponentVector& b) {
  check_same_ambient(a.dim(), b.dim());
  for (std::size_t i = a.dim(); i-- > 0;) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

ExponentVector add(const ExponentVector& a, const ExponentVector& b) {
  check_same_ambient(a.dim(), b.dim());
  std::vector<int> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return ExponentVector(std::move(out));
}

std::optional<ExponentVector> sub_checked(const ExponentVector& a,
                                          const ExponentVector& b) {
  check_same_ambient(a.dim(), b.dim());
  std::vector<int> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] < b[i]) return std::nullopt;
    out[i] = a[i] - b[i];
  }
  return ExponentVector(std::move(out));
}

ExponentVector join(const ExponentVector& a, const ExponentVector& b) {
  check_same_ambient(a.dim(), b.dim());
  std::vector<int> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = std::max(a[i], b[i]);
  return ExponentVector(std::move(out));
}

namespace {

void compositions(std::size_t d, int e, std::size_t pos, std::vector<int>& cur,
                  std::vector<ExponentVector>& out) {
  if (pos + 1 == d) {
    cur[pos] = e;
    out.emplace_back(cur);
    return;
  }
  for (int v = e; v >= 0; --v) {
    cur[pos] = v;
    compositions(d, e - v, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<ExponentVector> monomials_of_degree(std::size_t d, int e) {
  if (d == 0) throw std::invalid_argument("d must be >= 1");
  std::vector<ExponentVector> out;
  if (e < 0) return out;
  std::vector<int> cur(d, 0);
  compositions(d, e, 0, cur, out);
  std::sort(out.begin(), out.end(), LexGreater{});
  return out;
}

std::vector<ExponentVector> box_points(const ExponentVector& box) {
  std::vector<ExponentVector> out;
  std::vector<int> cur(box.dim(), 0);
  // Odometer with the last coordinate most significant gives LEX-ascending order.
  while (true) {
    out.emplace_back(cur);
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == box[i]) cur[i++] = 0;
    if (i == cur.size()) break;
    ++cur[i];
  }
  return out;
}

std::string format_monomial(const ExponentVector& e, std::string_view prefix) {
  std::string out;
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += prefix;
    out += std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace apolar
