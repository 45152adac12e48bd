#include <gtest/gtest.h>

#include <random>

#include "evenlat/linalg.hpp"

using namespace evenlat;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<int> idx(0, static_cast<int>(n) - 1), f(-2, 2);
  for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    u.add_col(i, j, Int(f(rng)));
  }
  return u;
}

// Independent oracle: gcd of all k x k minors (determinantal divisors).
Int minor_gcd(const IntMatrix& m, std::size_t k) {
  Int g = 0;
  std::vector<std::size_t> rs(k), cs(k);
  std::function<void(std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      pick_cols(0, 0);
      return;
    }
    for (std::size_t i = start; i < m.rows(); ++i) {
      rs[pos] = i;
      pick_rows(pos + 1, i + 1);
    }
  };
  pick_cols = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      g = gcd(g, determinant(m.select(rs, cs)));
      return;
    }
    for (std::size_t j = start; j < m.cols(); ++j) {
      cs[pos] = j;
      pick_cols(pos + 1, j + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

} // namespace

TEST(Snf, DiagonalTwoThree) {
  auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(s.D, (IntMatrix{{1, 0}, {0, 6}}));
}

TEST(Snf, Identity) {
  auto s = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(s.D, IntMatrix::identity(3));
}

TEST(Snf, A2MatchesMinorOracle) {
  IntMatrix a2{{2, -1}, {-1, 2}};
  auto s = smith_normal_form(a2);
  EXPECT_EQ(s.D, (IntMatrix{{1, 0}, {0, 3}}));
  EXPECT_EQ(s.D(0, 0), minor_gcd(a2, 1));
  EXPECT_EQ(s.D(0, 0) * s.D(1, 1), minor_gcd(a2, 2));
}

TEST(Snf, RandomContracts) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m = random_matrix(rng, r, c, -9, 9);
    auto s = smith_normal_form(m);
    ASSERT_EQ(s.U * m * s.V, s.D);
    ASSERT_EQ(abs(determinant(s.U)), 1);
    ASSERT_EQ(abs(determinant(s.V)), 1);
    ASSERT_EQ(s.U * s.U_inv, IntMatrix::identity(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) ASSERT_EQ(s.D(i, j), 0);
    Int prod = 1;
    for (std::size_t i = 0; i < std::min(r, c); ++i) {
      ASSERT_GE(s.D(i, i), 0);
      if (i + 1 < std::min(r, c) && s.D(i, i) != 0) ASSERT_EQ(mod(s.D(i + 1, i + 1), s.D(i, i)), 0);
      if (i + 1 < std::min(r, c) && s.D(i, i) == 0) ASSERT_EQ(s.D(i + 1, i + 1), 0);
      if (r <= 4 && c <= 4) {
        prod *= s.D(i, i);
        ASSERT_EQ(prod, minor_gcd(m, i + 1));
      }
    }
  }
}

TEST(Inertia, Examples) {
  EXPECT_EQ(inertia(IntMatrix{{0, 1}, {1, 0}}), (Inertia{1, 1, 0}));
  IntMatrix e8{{2, -1, 0, 0, 0, 0, 0, 0},  {-1, 2, -1, 0, 0, 0, 0, 0}, {0, -1, 2, -1, 0, 0, 0, -1},
               {0, 0, -1, 2, -1, 0, 0, 0},  {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
               {0, 0, 0, 0, 0, -1, 2, 0},   {0, 0, -1, 0, 0, 0, 0, 2}};
  EXPECT_EQ(inertia(e8), (Inertia{8, 0, 0}));
  EXPECT_EQ(inertia(IntMatrix{{2, 0, 0}, {0, 4, 0}, {0, 0, 16}}), (Inertia{3, 0, 0}));
  EXPECT_EQ(inertia(IntMatrix{{0, 0}, {0, 0}}), (Inertia{0, 0, 2}));
  EXPECT_THROW(inertia(IntMatrix{{0, 1}, {2, 0}}), InvalidInput);
}

TEST(Inertia, CongruenceInvariant) {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = dim(rng);
    IntMatrix a = random_matrix(rng, n, n, -5, 5);
    IntMatrix g = a + a.transpose();
    Inertia base = inertia(g);
    IntMatrix b = random_matrix(rng, n, n, -3, 3);
    if (determinant(b) == 0) continue;
    EXPECT_EQ(inertia(b.transpose() * g * b), base);
  }
}

TEST(Kernel, Examples) {
  IntMatrix k = integer_kernel(IntMatrix{{1, 1}});
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k(0, 0), -k(1, 0));
  EXPECT_EQ(abs(k(0, 0)), 1);
  EXPECT_EQ(integer_kernel(IntMatrix::identity(2)).cols(), 0u);
  IntMatrix k2 = integer_kernel(IntMatrix{{2, 4}});
  ASSERT_EQ(k2.cols(), 1u);
  EXPECT_EQ(abs(k2(0, 0)), 2);
  EXPECT_EQ(k2(0, 0), -2 * k2(1, 0));
}

TEST(Kernel, RandomSaturated) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m = random_matrix(rng, r, c, -4, 4);
    IntMatrix k = integer_kernel(m);
    ASSERT_EQ(k.cols(), c - rank(m));
    if (k.cols() == 0) continue;
    ASSERT_TRUE((m * k).is_zero());
    auto s = smith_normal_form(k);
    for (std::size_t i = 0; i < k.cols(); ++i) ASSERT_EQ(s.D(i, i), 1);
  }
}

TEST(Linalg, DeterminantAndInverse) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 4, -9, 9);
    Int d = determinant(m);
    EXPECT_EQ(Rat(d), determinant(to_rational(m)));
    if (d != 0) EXPECT_EQ(to_rational(m) * inverse(m), RatMatrix::identity(4));
  }
}

TEST(Linalg, LllPreservesLatticeAndShortens) {
  std::mt19937 rng(31);
  IntMatrix g{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix u = random_unimodular(rng, 3);
    IntMatrix bad = u.transpose() * g * u;
    IntMatrix t = lll_transform(bad);
    ASSERT_EQ(abs(determinant(t)), 1);
    IntMatrix red = t.transpose() * bad * t;
    EXPECT_EQ(red(0, 0), 2);
  }
}

TEST(Linalg, SpanAndSaturation) {
  IntMatrix m{{2, 4}, {0, 6}};
  IntMatrix b = column_span_basis(m);
  EXPECT_EQ(abs(determinant(b)), 12);
  IntMatrix sat = saturation_basis(IntMatrix{{2}, {4}});
  ASSERT_EQ(sat.cols(), 1u);
  EXPECT_EQ(abs(sat(0, 0)), 1);
  EXPECT_EQ(abs(sat(1, 0)), 2);
}
