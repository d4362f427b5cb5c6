#include <gtest/gtest.h>

#include <random>

#include "apolar/errors.hpp"
#include "apolar/monomial_ideal.hpp"
#include "apolar/oracle.hpp"
#include "support/generators.hpp"

namespace apolar {
namespace {

MonomialIdeal ideal2(std::vector<ExponentVector> gens) {
  return MonomialIdeal::from_generators(2, std::move(gens));
}

Antichain chain2(std::vector<ExponentVector> elems) { return Antichain(2, std::move(elems)); }

// Brute-force reference for colon ideals: m ∈ (I : x^n) iff x^n m ∈ I.
bool colon_member(const MonomialIdeal& I, const ExponentVector& m, std::size_t var, int n) {
  std::vector<int> c(m.begin(), m.end());
  c[var] += n;
  return I.contains(ExponentVector(c));
}

TEST(MonomialIdeal, FromGeneratorsMinimizes) {
  auto I = ideal2({{3, 0}, {0, 2}, {3, 1}});
  EXPECT_EQ(I.generators(), (std::vector<ExponentVector>{{3, 0}, {0, 2}}));
  EXPECT_TRUE(ideal2({{0, 0}}).is_unit());
  EXPECT_TRUE(ideal2({}).is_zero());
}

TEST(MonomialIdeal, Contains) {
  auto I = ideal2({{3, 0}, {0, 2}});
  EXPECT_TRUE(I.contains({3, 1}));
  EXPECT_FALSE(I.contains({2, 1}));
  EXPECT_FALSE(MonomialIdeal(2).contains({5, 5}));
  EXPECT_THROW(I.contains({1, 1, 1}), AmbientMismatch);
}

TEST(Docle, KnownValues) {
  EXPECT_EQ(docle(ideal2({{3, 0}, {0, 2}})), chain2({{2, 1}}));
  EXPECT_TRUE(docle(ideal2({{1, 1}})).empty());
}

TEST(Docle, XSquaredXYAgainstBruteForce) {
  auto I = ideal2({{2, 0}, {1, 1}});
  auto expected = oracle::brute_docle(I, {2, 2});
  EXPECT_EQ(expected, chain2({{1, 0}}));
  EXPECT_EQ(docle(I), expected);
}

TEST(Docle, RejectsUnitAndZero) {
  EXPECT_THROW(docle(MonomialIdeal::unit(2)), DomainError);
  EXPECT_THROW(docle(MonomialIdeal(2)), DomainError);
}

TEST(InverseIdeal, KnownValues) {
  EXPECT_EQ(inverse_ideal(chain2({{2, 1}})), ideal2({{3, 0}, {0, 2}}));
  EXPECT_EQ(inverse_ideal(chain2({{1, 0}})), ideal2({{2, 0}, {0, 1}}));
  EXPECT_EQ(inverse_ideal(Antichain(3, {ExponentVector::constant(3, 3)})),
            MonomialIdeal::power(3, 4));
  EXPECT_THROW(inverse_ideal(Antichain(2)), DomainError);
}

TEST(Intersect, Examples) {
  auto x = ideal2({{1, 0}});
  auto H = ideal2({{2, 0}, {0, 1}});
  EXPECT_EQ(intersect(x, H), ideal2({{2, 0}, {1, 1}}));
  EXPECT_EQ(intersect(H, H), H);
  EXPECT_EQ(intersect(H, MonomialIdeal::unit(2)), H);
}

TEST(Colon, AgainstBruteForceMembership) {
  auto I = ideal2({{2, 0}, {1, 1}});
  auto by_x = colon_var(I, 0);
  EXPECT_EQ(by_x, ideal2({{1, 0}, {0, 1}}));
  for (const auto& m : box_points({3, 3})) EXPECT_EQ(by_x.contains(m), colon_member(I, m, 0, 1));

  auto sat = colon_var_saturate(I, 0);
  EXPECT_TRUE(sat.is_unit());
  for (const auto& m : box_points({3, 3})) EXPECT_EQ(sat.contains(m), colon_member(I, m, 0, 8));

  EXPECT_EQ(colon_var_saturate(ideal2({{0, 1}}), 0), ideal2({{0, 1}}));
  EXPECT_THROW(colon_var(I, 2), std::out_of_range);
}

TEST(Saturate, Examples) {
  EXPECT_EQ(saturate(ideal2({{2, 0}, {1, 1}})), ideal2({{1, 0}}));
  EXPECT_TRUE(saturate(ideal2({{3, 0}, {0, 2}})).is_unit());
  // (xy) has empty docle, so (I : m) = I and I is already saturated.
  auto xy = ideal2({{1, 1}});
  EXPECT_TRUE(oracle::brute_docle(xy, {3, 3}).empty());
  EXPECT_EQ(saturate(xy), xy);
  EXPECT_THROW(saturate(MonomialIdeal::unit(2)), DomainError);
}

TEST(Decompose, XSquaredXY) {
  auto parts = decompose(ideal2({{2, 0}, {1, 1}}));
  EXPECT_EQ(parts.saturated, ideal2({{1, 0}}));
  EXPECT_EQ(parts.primary, ideal2({{2, 0}, {0, 1}}));
}

TEST(Decompose, ZeroDimensionalIsItsOwnPrimaryPart) {
  auto I = ideal2({{3, 0}, {1, 1}, {0, 4}});
  auto parts = decompose(I);
  EXPECT_TRUE(parts.saturated.is_unit());
  EXPECT_EQ(parts.primary, I);
}

TEST(Decompose, PostconditionsOnMixedIdeal) {
  auto I = ideal2({{3, 1}, {1, 3}, {2, 2}});
  auto parts = decompose(I);
  EXPECT_EQ(intersect(parts.saturated, parts.primary), I);
  EXPECT_TRUE(parts.primary.is_zero_dimensional());
  EXPECT_EQ(oracle::brute_docle(parts.primary, {5, 5}), oracle::brute_docle(I, {5, 5}));
  EXPECT_TRUE(oracle::brute_docle(parts.saturated, {5, 5}).empty());
  // Grid check of the intersection itself.
  for (const auto& m : box_points({5, 5}))
    EXPECT_EQ(I.contains(m), parts.saturated.contains(m) && parts.primary.contains(m));
}

TEST(Decompose, EmptyDocleIsAnError) {
  EXPECT_THROW(decompose(ideal2({{1, 1}})), DomainError);
}

TEST(Closure, Examples) {
  auto U = closure(ideal2({{1, 1}}));
  EXPECT_TRUE(U.whole_poset);
  EXPECT_TRUE(U.ideal.is_unit());

  auto J = ideal2({{3, 0}, {0, 2}});
  EXPECT_EQ(closure(J).ideal, J);
  EXPECT_FALSE(closure(J).whole_poset);

  auto emmy = ideal2({{2, 0}, {1, 1}});
  auto c = closure(emmy).ideal;
  EXPECT_EQ(c, ideal2({{2, 0}, {0, 1}}));
  // Brute force: the closure is everything outside the downset of the docle.
  auto doc = oracle::brute_docle(emmy, {3, 3});
  for (const auto& m : box_points({4, 4})) EXPECT_EQ(c.contains(m), !doc.below(m));
}

TEST(SqLeq, Examples) {
  auto emmy = ideal2({{2, 0}, {1, 1}});
  EXPECT_TRUE(sq_leq(emmy, closure(emmy).ideal));
  EXPECT_TRUE(sq_leq(emmy, emmy));
  auto U = ideal2({{1, 1}});
  auto V = ideal2({{1, 0}, {0, 1}});
  EXPECT_TRUE(U.is_subset_of(V));
  EXPECT_FALSE(sq_leq(U, V));
}

TEST(Closure, NotMonotoneUnderInclusion) {
  auto U = ideal2({{1, 1}});
  auto V = ideal2({{1, 0}, {0, 1}});
  EXPECT_EQ(docle(V), chain2({{0, 0}}));
  auto cu = closure(U);
  auto cv = closure(V);
  EXPECT_TRUE(cu.whole_poset);
  EXPECT_EQ(cv.ideal, V);
  EXPECT_FALSE(cu.ideal.is_subset_of(cv.ideal));
}

TEST(MonomialIdealProperty, DocleMatchesBruteForce) {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    auto I = testing::random_ideal(rng, d, 4, 6);
    auto doc = docle(I);
    ASSERT_EQ(doc, oracle::brute_docle(I, add(I.generator_bound(), ExponentVector::constant(d, 1))));
    for (const auto& m : doc) EXPECT_FALSE(I.contains(m));
  }
}

TEST(MonomialIdealProperty, ZeroDimensionalPartition) {
  std::mt19937 rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    auto I = testing::random_zero_dim_ideal(rng, d, 5, 5);
    auto doc = docle(I);
    for (const auto& m : box_points(I.generator_bound()))
      EXPECT_NE(I.contains(m), doc.below(m)) << format_monomial(m);
  }
}

TEST(MonomialIdealProperty, DocleSizeBound) {
  std::mt19937 rng(103);
  auto choose = [](std::size_t n, std::size_t k) {
    if (k > n) return std::size_t{0};
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
    auto I = testing::random_ideal(rng, d, 5, 8);
    EXPECT_LE(docle(I).size(), choose(I.generators().size(), d));
  }
}

TEST(MonomialIdealProperty, DecomposeSaturatedFactorIsUnique) {
  std::mt19937 rng(104);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 100; ++trial) {
    const std::size_t d = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
    auto I = testing::random_ideal(rng, d, 4, 5);
    auto doc = docle(I);
    if (doc.empty()) continue;
    ++checked;
    auto parts = decompose(I);
    ASSERT_EQ(intersect(parts.saturated, parts.primary), I);
    // Deepen H by a power of m: still m-primary with the same docle inside J's complement.
    auto deeper = intersect(parts.primary, MonomialIdeal::power(d, 1 + I.generator_bound().degree()));
    auto alt = intersect(parts.saturated, deeper);
    if (docle(alt).empty()) continue;
    EXPECT_EQ(decompose(alt).saturated, parts.saturated);
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace apolar
