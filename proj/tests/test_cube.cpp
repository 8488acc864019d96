#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "pcube/cube.hpp"

using namespace pcube;

namespace {

// Direct count of the (x, y) projection, independent of the library.
std::vector<std::vector<int>> count_projection(const Cube& c, int x, int y) {
  std::vector<std::vector<int>> m(c.v(), std::vector<int>(c.v(), 0));
  for (const Row& r : c.rows()) ++m[r[x - 1]][r[y - 1]];
  return m;
}

bool oracle_is_design(const std::vector<std::vector<int>>& m, int k, int lambda) {
  const int v = static_cast<int>(m.size());
  for (int i = 0; i < v; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < v; ++j) {
      if (m[i][j] > 1) return false;
      row += m[i][j];
      col += m[j][i];
    }
    if (row != k || col != k) return false;
    for (int i2 = i + 1; i2 < v; ++i2) {
      int meet = 0;
      for (int j = 0; j < v; ++j) meet += m[i][j] * m[i2][j];
      if (meet != lambda) return false;
    }
  }
  return true;
}

bool oracle_is_cube(const std::vector<Row>& rows, int v, int k, int lambda, int n) {
  if (static_cast<int>(rows.size()) != v * k) return false;
  Cube c({v, k, lambda, n}, rows);
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      if (!oracle_is_design(count_projection(c, x, y), k, lambda)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Cube, WorkedExamplesVerify) {
  for (const Cube& c : corpus::all_cubes()) {
    const VerifyReport r = verify_cube(c);
    EXPECT_TRUE(r.ok) << r.message;
    EXPECT_TRUE(oracle_is_cube(c.rows(), c.v(), c.k(), c.lambda(), c.n()));
  }
  EXPECT_EQ(corpus::C1().params(), (CubeParams{7, 3, 1, 3}));
  EXPECT_EQ(corpus::C5().params(), (CubeParams{3, 2, 1, 5}));
}

TEST(Cube, ConstructorRejectsMalformedRows) {
  EXPECT_THROW(Cube({3, 2, 1, 2}, {{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(Cube({3, 2, 1, 2}, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Cube({3, 2, 1, 2}, {{0, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(Cube({3, 2, 1, 1}, {{0}}), std::invalid_argument);
}

TEST(Cube, ProjectionMatchesDirectCount) {
  const Cube c = corpus::C1();
  for (int x = 1; x <= 3; ++x) {
    for (int y = x + 1; y <= 3; ++y) {
      const DesignMatrix m = projection(c, x, y);
      const auto expect = count_projection(c, x, y);
      for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) EXPECT_EQ(m.at(i, j), expect[i][j]);
      }
      EXPECT_TRUE(is_symmetric_design(m, 7, 3, 1));
    }
  }
  EXPECT_THROW(projection(c, 2, 2), std::invalid_argument);
  EXPECT_THROW(projection(c, 1, 4), std::invalid_argument);
}

TEST(Cube, MissingRowReportsCardinality) {
  std::vector<Row> rows = corpus::C1().rows();
  rows.pop_back();
  const VerifyReport r = verify_cube(rows, 7, 3, 1);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.condition, CubeCondition::kCardinality);
}

TEST(Cube, RandomMutationsAgreeWithOracle) {
  std::mt19937 rng(2024);
  for (const Cube& c : corpus::all_cubes()) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Row> rows = c.rows();
      const int changes = 1 + static_cast<int>(rng() % 3);
      for (int t = 0; t < changes; ++t) {
        rows[rng() % rows.size()][rng() % c.n()] = static_cast<int>(rng() % c.v());
      }
      std::sort(rows.begin(), rows.end());
      if (std::adjacent_find(rows.begin(), rows.end()) != rows.end()) continue;
      const VerifyReport r = verify_cube(rows, c.v(), c.k(), c.lambda());
      EXPECT_EQ(r.ok, oracle_is_cube(rows, c.v(), c.k(), c.lambda(), c.n()));
      if (!r.ok) {
        EXPECT_NE(r.condition, CubeCondition::kNone);
        EXPECT_FALSE(r.message.empty());
      }
    }
  }
}

TEST(Cube, OrthogonalArrayAndAgreement) {
  for (const Cube& c : corpus::all_cubes()) {
    EXPECT_TRUE(is_orthogonal_array(c));
    EXPECT_FALSE(find_agreeing_pair(c).has_value());
  }
}

TEST(Cube, DistanceDistributionClosedForm) {
  EXPECT_EQ(distance_distribution(corpus::C1()), (std::vector<int>{1, 0, 6, 14}));
  EXPECT_EQ(distance_distribution(corpus::C5()), (std::vector<int>{1, 0, 0, 0, 5, 0}));
  for (const Cube& c : corpus::all_cubes()) {
    const auto a = distance_distribution(c);
    const int n = c.n();
    ASSERT_EQ(static_cast<int>(a.size()), n + 1);
    EXPECT_EQ(a[0], 1);
    for (int d = 1; d < n - 1; ++d) EXPECT_EQ(a[d], 0);
    EXPECT_EQ(a[n - 1], n * (c.k() - 1));
    EXPECT_EQ(a[n], c.v() * c.k() - 1 - n * (c.k() - 1));
  }
}

TEST(Cube, DimensionBounds) {
  const DimensionBounds b = dimension_bounds(7, 3);
  EXPECT_TRUE(b.bounded);
  EXPECT_EQ(b.triangular, 28);
  EXPECT_EQ(b.distance, 10);
  EXPECT_EQ(dimension_bounds(3, 2).distance, 5);
  EXPECT_EQ(dimension_bounds(3, 2).triangular, 6);
  EXPECT_FALSE(dimension_bounds(5, 1).bounded);
}

TEST(Cube, RestrictionsOfValidCubesVerify) {
  const Cube c5 = corpus::C5();
  for (int a = 1; a <= 5; ++a) {
    for (int b = a + 1; b <= 5; ++b) {
      for (int d = b + 1; d <= 5; ++d) {
        const std::vector<int> coords{a, b, d};
        const Cube r = restrict_cube(c5, coords);
        EXPECT_EQ(r.n(), 3);
        EXPECT_TRUE(verify_cube(r).ok);
      }
    }
  }
  const std::vector<int> one{1};
  EXPECT_THROW(restrict_cube(c5, one), std::invalid_argument);
}
