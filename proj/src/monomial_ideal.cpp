#include "apolar/monomial_ideal.hpp"

#include <algorithm>
#include <set>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

void check_dims(std::size_t d, const std::vector<ExponentVector>& elems) {
  for (const auto& e : elems) check_same_ambient(d, e.dim());
}

// Minimal elements, LEX-ascending, duplicates removed.
std::vector<ExponentVector> minimize(std::vector<ExponentVector> raw) {
  // Sorting by degree first means any divisor of an element precedes it.
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_cmp(a, b) < 0;
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<ExponentVector> kept;
  for (auto& m : raw) {
    bool divisible = std::any_of(kept.begin(), kept.end(),
                                 [&](const auto& g) { return leq(g, m); });
    if (!divisible) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end(), LexLess{});
  return kept;
}

// Docle without the domain checks: empty for the unit and the zero ideal.
Antichain docle_of(const MonomialIdeal& I) {
  const std::size_t d = I.dim();
  Antichain empty(d);
  if (I.is_zero() || I.is_unit()) return empty;

  // If m+e_i ∈ I but m ∉ I then some generator g has g_i = m_i + 1, so each
  // coordinate of a docle element is drawn from {g_i - 1 : g_i >= 1}.
  std::vector<std::vector<int>> grid(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::set<int> values;
    for (const auto& g : I.generators())
      if (g[i] >= 1) values.insert(g[i] - 1);
    if (values.empty()) return empty;
    grid[i].assign(values.begin(), values.end());
  }

  std::vector<ExponentVector> found;
  std::vector<std::size_t> idx(d, 0);
  std::vector<int> cur(d);
  while (true) {
    for (std::size_t i = 0; i < d; ++i) cur[i] = grid[i][idx[i]];
    ExponentVector m(cur);
    if (!I.contains(m)) {
      bool maximal = true;
      for (std::size_t i = 0; i < d && maximal; ++i)
        maximal = I.contains(add(m, ExponentVector::unit(d, i)));
      if (maximal) found.push_back(std::move(m));
    }
    std::size_t i = 0;
    while (i < d && ++idx[i] == grid[i].size()) idx[i++] = 0;
    if (i == d) break;
  }
  return Antichain(d, std::move(found));
}

}  // namespace

Antichain::Antichain(std::size_t d, std::vector<ExponentVector> elems) : dim_(d) {
  check_dims(d, elems);
  std::sort(elems.begin(), elems.end(), LexLess{});
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = a + 1; b < elems.size(); ++b)
      if (leq(elems[a], elems[b]) || leq(elems[b], elems[a]))
        throw DomainError("antichain elements " + format_monomial(elems[a]) +
                          " and " + format_monomial(elems[b]) + " are comparable");
  elems_ = std::move(elems);
}

Antichain Antichain::maximal_of(std::size_t d, std::vector<ExponentVector> elems) {
  check_dims(d, elems);
  std::vector<ExponentVector> out;
  for (const auto& m : elems) {
    bool dominated = std::any_of(elems.begin(), elems.end(), [&](const auto& o) {
      return o != m && leq(m, o);
    });
    if (!dominated) out.push_back(m);
  }
  return Antichain(d, std::move(out));
}

bool Antichain::contains(const ExponentVector& e) const {
  check_same_ambient(dim_, e.dim());
  return std::binary_search(elems_.begin(), elems_.end(), e, LexLess{});
}

bool Antichain::below(const ExponentVector& m) const {
  check_same_ambient(dim_, m.dim());
  return std::any_of(elems_.begin(), elems_.end(),
                     [&](const auto& s) { return leq(m, s); });
}

bool Antichain::is_subset_of(const Antichain& other) const {
  check_same_ambient(dim_, other.dim_);
  return std::all_of(elems_.begin(), elems_.end(),
                     [&](const auto& e) { return other.contains(e); });
}

MonomialIdeal MonomialIdeal::from_generators(std::size_t d,
                                             std::vector<ExponentVector> raw) {
  check_dims(d, raw);
  MonomialIdeal I(d);
  I.gens_ = minimize(std::move(raw));
  return I;
}

MonomialIdeal MonomialIdeal::unit(std::size_t d) {
  return from_generators(d, {ExponentVector(d)});
}

MonomialIdeal MonomialIdeal::power(std::size_t d, int k) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<int> c(d, 0);
    c[i] = k;
    gens.emplace_back(std::move(c));
  }
  return from_generators(d, std::move(gens));
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_.front().degree() == 0;
}

bool MonomialIdeal::is_zero_dimensional() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    bool has_power = std::any_of(gens_.begin(), gens_.end(), [&](const auto& g) {
      return g.degree() == g[i];
    });
    if (!has_power) return false;
  }
  return true;
}

bool MonomialIdeal::contains(const ExponentVector& m) const {
  check_same_ambient(dim_, m.dim());
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const auto& g) { return leq(g, m); });
}

bool MonomialIdeal::is_subset_of(const MonomialIdeal& other) const {
  check_same_ambient(dim_, other.dim_);
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const auto& g) { return other.contains(g); });
}

ExponentVector MonomialIdeal::generator_bound() const {
  ExponentVector bound(dim_);
  for (const auto& g : gens_) bound = join(bound, g);
  return bound;
}

Antichain docle(const MonomialIdeal& I) {
  if (I.is_unit()) throw DomainError("docle of the unit ideal is undefined");
  if (I.is_zero()) throw DomainError("docle of the zero ideal is undefined");
  return docle_of(I);
}

MonomialIdeal inverse_ideal(const Antichain& M) {
  if (M.empty()) throw DomainError("inverse ideal of an empty antichain");
  const std::size_t d = M.dim();
  MonomialIdeal acc = MonomialIdeal::unit(d);
  for (const auto& s : M) {
    std::vector<ExponentVector> box;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<int> c(d, 0);
      c[i] = s[i] + 1;
      box.emplace_back(std::move(c));
    }
    acc = intersect(acc, MonomialIdeal::from_generators(d, std::move(box)));
  }
  return acc;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ambient(I.dim(), J.dim());
  std::vector<ExponentVector> lcms;
  lcms.reserve(I.generators().size() * J.generators().size());
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) lcms.push_back(join(a, b));
  return MonomialIdeal::from_generators(I.dim(), std::move(lcms));
}

MonomialIdeal colon_var(const MonomialIdeal& I, std::size_t i) {
  if (i >= I.dim()) throw std::out_of_range("variable index out of range");
  std::vector<ExponentVector> out;
  for (const auto& g : I.generators()) {
    std::vector<int> c(g.begin(), g.end());
    if (c[i] > 0) --c[i];
    out.emplace_back(std::move(c));
  }
  return MonomialIdeal::from_generators(I.dim(), std::move(out));
}

MonomialIdeal colon_var_saturate(const MonomialIdeal& I, std::size_t i) {
  if (i >= I.dim()) throw std::out_of_range("variable index out of range");
  std::vector<ExponentVector> out;
  for (const auto& g : I.generators()) {
    std::vector<int> c(g.begin(), g.end());
    c[i] = 0;
    out.emplace_back(std::move(c));
  }
  return MonomialIdeal::from_generators(I.dim(), std::move(out));
}

MonomialIdeal saturate(const MonomialIdeal& I) {
  if (I.is_unit()) throw DomainError("saturation of the unit ideal");
  if (I.is_zero()) throw DomainError("saturation of the zero ideal");
  MonomialIdeal acc = MonomialIdeal::unit(I.dim());
  for (std::size_t i = 0; i < I.dim(); ++i)
    acc = intersect(acc, colon_var_saturate(I, i));
  return acc;
}

Decomposition decompose(const MonomialIdeal& I) {
  Antichain doc = docle(I);
  if (doc.empty())
    throw DomainError("decompose requires a nonempty docle (I : m) != I");
  return {saturate(I), inverse_ideal(doc)};
}

Closure closure(const MonomialIdeal& I) {
  Antichain doc = docle_of(I);
  if (doc.empty()) return {MonomialIdeal::unit(I.dim()), true};
  return {inverse_ideal(doc), false};
}

bool sq_leq(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ambient(I.dim(), J.dim());
  return I.is_subset_of(J) && docle_of(J).is_subset_of(docle_of(I));
}

}  // namespace apolar
