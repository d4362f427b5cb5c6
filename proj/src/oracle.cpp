#include "apolar/oracle.hpp"

#include <numeric>

#include "apolar/errors.hpp"

namespace apolar::oracle {

namespace {

using Dense = std::vector<std::vector<Rational>>;

// Plain Gauss-Jordan; returns the rank and leaves A reduced.
std::size_t gauss_jordan(Dense& A, std::vector<std::size_t>* pivot_cols = nullptr) {
  if (A.empty()) return 0;
  const std::size_t rows = A.size();
  const std::size_t cols = A[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[r], A[piv]);
    const Rational inv = 1 / A[r][c];
    for (auto& x : A[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      const Rational f = A[i][c];
      for (std::size_t j = 0; j < cols; ++j) A[i][j] -= f * A[r][j];
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

// Null space of A (rows x cols) as vectors of length cols.
Dense null_space(Dense A, std::size_t cols) {
  std::vector<std::size_t> pivots;
  if (!A.empty()) gauss_jordan(A, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Dense out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -A[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<int>> all_monomials(std::size_t d, int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(d, 0);
  while (true) {
    if (std::accumulate(cur.begin(), cur.end(), 0) == e) out.push_back(cur);
    std::size_t i = 0;
    while (i < d && cur[i] == e) cur[i++] = 0;
    if (i == d) break;
    ++cur[i];
  }
  return out;
}

std::size_t position(const std::vector<std::vector<int>>& basis, const std::vector<int>& m) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == m) return i;
  throw std::logic_error("monomial not in basis");
}

Polynomial partial(const Polynomial& Q, std::size_t var) {
  Polynomial out(Q.dim());
  for (const auto& [e, c] : Q.terms()) {
    if (e[var] == 0) continue;
    std::vector<int> lowered(e.begin(), e.end());
    --lowered[var];
    out.add_term(ExponentVector(lowered), c * e[var]);
  }
  return out;
}

bool divides(const ExponentVector& g, const ExponentVector& m) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g[i] > m[i]) return false;
  return true;
}

bool member(const MonomialIdeal& I, const ExponentVector& m) {
  for (const auto& g : I.generators())
    if (divides(g, m)) return true;
  return false;
}

}  // namespace

Antichain brute_docle(const MonomialIdeal& I, const ExponentVector& box) {
  for (const auto& g : I.generators())
    if (!divides(g, box)) throw DomainError("box does not dominate every generator");
  const std::size_t d = I.dim();
  std::vector<ExponentVector> found;
  std::vector<int> cur(d, 0);
  while (true) {
    ExponentVector m(cur);
    if (!member(I, m)) {
      bool maximal = true;
      for (std::size_t i = 0; i < d && maximal; ++i) {
        std::vector<int> up = cur;
        ++up[i];
        maximal = member(I, ExponentVector(up));
      }
      if (maximal) found.push_back(m);
    }
    std::size_t i = 0;
    while (i < d && cur[i] == box[i]) cur[i++] = 0;
    if (i == d) break;
    ++cur[i];
  }
  return Antichain(d, std::move(found));
}

Polynomial apply_derivatives(const Polynomial& f, const Polynomial& Q) {
  Polynomial out(Q.dim());
  for (const auto& [e, c] : f.terms()) {
    Polynomial cur = Q;
    for (std::size_t i = 0; i < e.dim(); ++i)
      for (int n = 0; n < e[i]; ++n) cur = partial(cur, i);
    out += cur * c;
  }
  return out;
}

AnnTable brute_ann(const Polynomial& Q, int max_deg) {
  const std::size_t d = Q.dim();
  const int qdeg = Q.degree().value_or(0);
  AnnTable table;
  for (int e = 0; e <= max_deg; ++e) {
    auto basis = all_monomials(d, e);
    std::vector<Polynomial> images;
    for (const auto& m : basis)
      images.push_back(apply_derivatives(Polynomial::monomial(ExponentVector(m)), Q));
    // Image coordinates indexed by every monomial of degree <= deg Q.
    std::vector<std::vector<int>> target;
    for (int t = 0; t <= qdeg; ++t)
      for (auto& m : all_monomials(d, t)) target.push_back(std::move(m));
    Dense A(target.size(), std::vector<Rational>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (const auto& [ex, c] : images[j].terms())
        A[position(target, std::vector<int>(ex.begin(), ex.end()))][j] = c;
    Dense ker = null_space(std::move(A), basis.size());
    std::vector<Polynomial> polys;
    for (const auto& v : ker) {
      Polynomial p(d);
      for (std::size_t j = 0; j < v.size(); ++j) p.add_term(ExponentVector(basis[j]), v[j]);
      polys.push_back(std::move(p));
    }
    table.kernel_dims.push_back(ker.size());
    table.kernel_bases.push_back(std::move(polys));
  }
  return table;
}

std::vector<std::size_t> brute_hilbert(std::size_t d, const std::vector<Polynomial>& gens,
                                       int cutoff) {
  std::vector<std::size_t> h;
  for (int e = 0; e <= cutoff; ++e) {
    auto basis = all_monomials(d, e);
    Dense A;
    for (const auto& g : gens) {
      const int gd = g.degree().value_or(-1);
      if (g.is_zero() || gd > e) continue;
      for (const auto& m : all_monomials(d, e - gd)) {
        std::vector<Rational> row(basis.size());
        for (const auto& [ex, c] : g.terms()) {
          std::vector<int> prod(ex.begin(), ex.end());
          for (std::size_t i = 0; i < d; ++i) prod[i] += m[i];
          row[position(basis, prod)] += c;
        }
        A.push_back(std::move(row));
      }
    }
    const std::size_t r = gauss_jordan(A);
    const std::size_t value = basis.size() - r;
    if (value == 0) return h;
    h.push_back(value);
  }
  throw NotArtinian(cutoff);
}

std::size_t brute_quotient_dim(std::size_t d, const std::vector<Polynomial>& gens, int cutoff) {
  auto h = brute_hilbert(d, gens, cutoff);
  return std::accumulate(h.begin(), h.end(), std::size_t{0});
}

std::vector<std::size_t> brute_colon_hilbert(int k, const Polynomial& p) {
  const std::size_t d = p.dim();
  const int N = p.degree().value_or(0);
  const int top = static_cast<int>(d) * (k - 1);
  std::vector<std::size_t> h;
  for (int e = 0; e + N <= top; ++e) {
    auto basis = all_monomials(d, e);
    auto target = all_monomials(d, e + N);
    Dense A(target.size(), std::vector<Rational>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (const auto& [ex, c] : p.terms()) {
        std::vector<int> prod(ex.begin(), ex.end());
        bool survives = true;
        for (std::size_t i = 0; i < d; ++i) {
          prod[i] += basis[j][i];
          survives = survives && prod[i] < k;
        }
        if (survives) A[position(target, prod)][j] += c;
      }
    }
    // dim (R/I)_e = dim R_e - dim ker = rank.
    const std::size_t r = gauss_jordan(A);
    if (r == 0) break;
    h.push_back(r);
  }
  return h;
}

}  // namespace apolar::oracle
