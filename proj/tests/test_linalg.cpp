#include <gtest/gtest.h>

#include "apolar/linalg.hpp"

namespace apolar {
namespace {

Vector V(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

TEST(RowEchelon, InsertKeepsReducedForm) {
  RowEchelon e(3);
  EXPECT_TRUE(e.insert(V({2, 4, 6})));
  EXPECT_TRUE(e.insert(V({0, 1, 1})));
  EXPECT_FALSE(e.insert(V({1, 3, 4})));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_EQ(e.pivots(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(e.rows()[0], V({1, 0, 1}));
  EXPECT_EQ(e.rows()[1], V({0, 1, 1}));
  EXPECT_TRUE(e.spans(V({3, 1, 4})));
  EXPECT_FALSE(e.spans(V({0, 0, 1})));
}

TEST(RowEchelon, SameSpaceIgnoresInsertionOrder) {
  RowEchelon a(3), b(3);
  a.insert(V({1, 1, 0}));
  a.insert(V({0, 1, 1}));
  b.insert(V({1, 2, 1}));
  b.insert(V({1, 0, -1}));
  EXPECT_TRUE(a.same_space(b));
}

TEST(Kernel, OfProjection) {
  // (a, b, c) -> a + b; kernel spanned by (1, -1, 0) and (0, 0, 1).
  std::vector<Vector> images = {V({1}), V({1}), V({0})};
  auto ker = kernel(images, 1);
  ASSERT_EQ(ker.size(), 2u);
  for (const auto& v : ker) EXPECT_EQ(v[0] + v[1], 0);
}

TEST(Kernel, ZeroCodomainIsEverything) {
  std::vector<Vector> images(3, Vector{});
  EXPECT_EQ(kernel(images, 0).size(), 3u);
}

}  // namespace
}  // namespace apolar
