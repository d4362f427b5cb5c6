#include <gtest/gtest.h>

#include <random>

#include "apolar/errors.hpp"
#include "apolar/oracle.hpp"
#include "apolar/polynomial.hpp"
#include "apolar/text.hpp"
#include "support/generators.hpp"

namespace apolar {
namespace {

Polynomial P(std::string_view s, std::size_t d = 2) {
  return parse_polynomial(s, VariableNames{d, {"x", "y", "z"}});
}

Polynomial random_poly(std::mt19937& rng, std::size_t d, int max_coord, int terms) {
  Polynomial p(d);
  for (int i = 0; i < terms; ++i)
    p.add_term(testing::random_vector(rng, d, max_coord), testing::random_nonzero_rational(rng));
  return p;
}

TEST(Polynomial, Arithmetic) {
  EXPECT_EQ(P("x + y") * P("x - y"), P("x^2 - y^2"));
  EXPECT_EQ(P("x + y") + P("-x"), P("y"));
  EXPECT_EQ(P("2*x") * Rational(1, 2), P("x"));
  EXPECT_THROW(P("x") + P("x", 3), AmbientMismatch);
}

TEST(Polynomial, DegreeAndHomogeneity) {
  auto p = P("x*y^2 + x^2*y + x^3");
  EXPECT_EQ(p.homogeneous_degree(), 3);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_FALSE(P("x + y^2").homogeneous_degree().has_value());
  EXPECT_EQ(P("x + y^2").degree(), 2);
  EXPECT_FALSE(Polynomial(2).degree().has_value());
}

TEST(Polynomial, LexLeadingAndFormat) {
  auto p = P("y^6 + x^3*y^3 + x^5*y");
  EXPECT_EQ(p.lex_leading(), (ExponentVector{0, 6}));
  EXPECT_EQ(format_polynomial(p), "x1^5*x2 + x1^3*x2^3 + x2^6");
  EXPECT_EQ(format_polynomial(P("-x + 3/2")), "3/2 - x1");
  EXPECT_EQ(format_polynomial(Polynomial(2)), "0");
}

TEST(Polynomial, Multinomial) {
  EXPECT_EQ(multinomial(12, std::vector<int>{9, 3}), 220);
  EXPECT_EQ(multinomial(12, std::vector<int>{6, 6}), 924);
  EXPECT_EQ(multinomial(12, std::vector<int>{4, 8}), 495);
  EXPECT_EQ(multinomial(3, std::vector<int>{2, 2}), 0);
  EXPECT_EQ(factorial(20), Integer("2432902008176640000"));
}

TEST(DiffAction, Examples) {
  EXPECT_EQ(diff_action(P("x", 1), P("x", 1)), P("1", 1));
  EXPECT_TRUE(diff_action(P("x^2", 1), P("x", 1)).is_zero());
  // (y^2 - xy) ∘ (t1^2 t2) = -2 t1
  EXPECT_EQ(diff_action(P("y^2 - x*y"), P("x^2*y")), P("-2*x"));
  EXPECT_THROW(diff_action(P("x"), P("x", 3)), AmbientMismatch);
}

TEST(ContractionAction, Examples) {
  EXPECT_EQ(contraction_action(P("x^2", 1), P("x^3", 1)), P("x", 1));
  EXPECT_TRUE(contraction_action(P("x^2"), P("y^3")).is_zero());
  EXPECT_EQ(contraction_action(P("x^2*y"), P("x^2*y")), P("1"));
  EXPECT_EQ(contraction_action(P("y^2 - x*y"), P("x^2*y")), P("-x"));
}

TEST(Annihilates, Examples) {
  EXPECT_TRUE(annihilates(P("x^3"), P("x^2*y")));
  EXPECT_TRUE(annihilates(P("y^2"), P("x^2*y")));
  EXPECT_FALSE(annihilates(P("y^2 - x*y"), P("x^2*y")));
  EXPECT_TRUE(annihilates(Polynomial(2), P("x^2*y")));
}

TEST(DiffAction, AgreesWithRepeatedPartials) {
  std::mt19937 rng(201);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    auto f = random_poly(rng, d, 2, 3);
    auto Q = random_poly(rng, d, 4, 4);
    EXPECT_EQ(diff_action(f, Q), oracle::apply_derivatives(f, Q));
  }
}

TEST(PolynomialProperty, ActionIsAModuleAction) {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    auto f = random_poly(rng, d, 2, 3);
    auto g = random_poly(rng, d, 2, 3);
    auto Q = random_poly(rng, d, 5, 4);
    EXPECT_EQ(diff_action(f * g, Q), diff_action(f, diff_action(g, Q)));
    EXPECT_EQ(contraction_action(f * g, Q), contraction_action(f, contraction_action(g, Q)));
  }
}

TEST(PolynomialProperty, AnnihilatorOfMonomialIsMonomial) {
  // Over Q, f kills a monomial target iff each of its terms does.
  std::mt19937 rng(203);
  int annihilating = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t d = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    auto q = testing::random_vector(rng, d, 3);
    auto Q = Polynomial::monomial(q, testing::random_nonzero_rational(rng));
    // Mix annihilating terms (not dividing q) with occasional non-annihilating ones.
    Polynomial f(d);
    for (int i = 0; i < 3; ++i) {
      auto e = testing::random_vector(rng, d, 4);
      if (trial % 3 != 0 && leq(e, q)) continue;
      f.add_term(e, testing::random_nonzero_rational(rng));
    }
    bool each = true;
    for (const auto& [e, c] : f.terms()) each = each && annihilates(Polynomial::monomial(e, c), Q);
    EXPECT_EQ(annihilates(f, Q), each);
    EXPECT_EQ(annihilates(f, Q), contraction_action(f, Q).is_zero());
    annihilating += annihilates(f, Q) ? 1 : 0;
  }
  EXPECT_GT(annihilating, 50);
}

TEST(PolynomialProperty, DiffAndContractionDifferByPositiveScalarPerTerm) {
  std::mt19937 rng(204);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    auto p = testing::random_vector(rng, d, 2);
    auto q = testing::random_vector(rng, d, 4);
    auto a = diff_action(Polynomial::monomial(p), Polynomial::monomial(q));
    auto b = contraction_action(Polynomial::monomial(p), Polynomial::monomial(q));
    ASSERT_EQ(a.is_zero(), b.is_zero());
    if (a.is_zero()) continue;
    ASSERT_EQ(a.support(), b.support());
    EXPECT_GT(a.terms().begin()->second / b.terms().begin()->second, 0);
  }
}

}  // namespace
}  // namespace apolar
