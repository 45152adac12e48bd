#include <gtest/gtest.h>

#include <random>

#include "evenlat/rootsys.hpp"
#include "oracles.hpp"

using namespace evenlat;

namespace {

IntMatrix e8_gram(long s = 1) {
  IntMatrix g{{2, -1, 0, 0, 0, 0, 0, 0},  {-1, 2, -1, 0, 0, 0, 0, 0}, {0, -1, 2, -1, 0, 0, 0, -1},
              {0, 0, -1, 2, -1, 0, 0, 0},  {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
              {0, 0, 0, 0, 0, -1, 2, 0},   {0, 0, -1, 0, 0, 0, 0, 2}};
  return g.scaled(Int(s));
}

IntMatrix cartan(char type, int n) {
  IntMatrix g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = 2;
  auto link = [&](int i, int j) { g(i, j) = g(j, i) = -1; };
  if (type == 'A') {
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
  } else if (type == 'D') {
    for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
    link(n - 3, n - 1);
  } else {
    for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
    link(2, n - 1);
  }
  return g;
}

// Naive oracle: box |x_i| <= sqrt(|n| (G^-1)_ii), which contains every vector of norm n.
std::vector<IntVector> naive_vectors(const IntMatrix& g, long n) {
  const std::size_t r = g.rows();
  RatMatrix gi = inverse(to_rational(g));
  std::vector<long> box(r);
  for (std::size_t i = 0; i < r; ++i) {
    double v = std::abs(static_cast<double>(n) * gi(i, i).get_d());
    box[i] = static_cast<long>(std::floor(std::sqrt(v) + 1e-9));
  }
  std::vector<IntVector> out;
  std::vector<long> x(r);
  for (std::size_t i = 0; i < r; ++i) x[i] = -box[i];
  for (;;) {
    IntVector v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = x[i];
    if (dot(v, g, v) == n) out.push_back(v);
    std::size_t k = 0;
    while (k < r && ++x[k] > box[k]) x[k] = -box[k], ++k;
    if (k == r) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Naive box count in the coordinate model of E_8: x in Z^8 or (Z+1/2)^8 with even coordinate sum.
std::size_t e8_coordinate_count(long norm) {
  std::size_t count = 0;
  for (int half = 0; half < 2; ++half) {
    std::vector<int> x(8, -4);  // doubled coordinates in [-4, 4]
    for (;;) {
      bool ok = true;
      long sq = 0, sum = 0;
      for (int v : x) {
        if ((v % 2 != 0) != (half == 1)) ok = false;
        sq += v * v;
        sum += v;
      }
      if (ok && sq == 4 * norm && sum % 4 == 0) ++count;
      int k = 0;
      while (k < 8 && ++x[k] > 4) x[k++] = -4;
      if (k == 8) break;
    }
  }
  return count;
}

// Random positive definite Gram with entries bounded by 20.
IntMatrix random_definite(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> off(-4, 4), diag(6, 20);
  for (;;) {
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      g(i, i) = diag(rng);
      for (std::size_t j = i + 1; j < n; ++j) g(i, j) = g(j, i) = off(rng);
    }
    auto in = inertia(g);
    if (in.plus == n) return g;
  }
}

} // namespace

TEST(Vectors, SmallExamples) {
  EXPECT_EQ(vectors_of_norm(Lattice(IntMatrix{{-2}}), -2).size(), 2u);
  EXPECT_TRUE(vectors_of_norm(Lattice(IntMatrix{{-2}}), 2).empty());
  EXPECT_THROW(vectors_of_norm(Lattice(IntMatrix{{0, 1}, {1, 0}}), 2), NotDefinite);
}

TEST(Vectors, E8Counts) {
  Lattice e8n(e8_gram(-1));
  auto r2 = vectors_of_norm(e8n, -2);
  auto r4 = vectors_of_norm(e8n, -4);
  EXPECT_EQ(r2.size(), 240u);
  EXPECT_EQ(r4.size(), 2160u);
  EXPECT_TRUE(std::is_sorted(r2.begin(), r2.end()));
  EXPECT_EQ(r2.size(), e8_coordinate_count(2));
  EXPECT_EQ(r4.size(), e8_coordinate_count(4));
}

TEST(Vectors, MatchNaiveOracle) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 4;
    IntMatrix g = random_definite(rng, n);
    int sg = trial % 2 ? -1 : 1;
    Lattice l(g.scaled(Int(sg)));
    for (long norm : {6L, 8L, 10L, 14L, 20L, 26L}) {
      auto got = vectors_of_norm(l, sg * norm);
      EXPECT_EQ(got, naive_vectors(l.gram(), sg * norm)) << l.gram() << " norm " << norm;
      for (const auto& v : got) {
        IntVector w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
        EXPECT_TRUE(std::binary_search(got.begin(), got.end(), w));
      }
    }
  }
}

TEST(RootSystems, Examples) {
  auto a = root_system(Lattice(IntMatrix{{-2, 0}, {0, -2}}));
  EXPECT_EQ(a.type.to_string(), "2A1");
  auto b = root_system(Lattice(cartan('A', 2).scaled(Int(-1))));
  EXPECT_EQ(b.type.to_string(), "A2");
  EXPECT_EQ(b.roots.size(), 6u);
  auto t = root_system(Lattice(IntMatrix{{2, 0, 0}, {0, 4, 0}, {0, 0, 16}}));
  EXPECT_EQ(t.type.to_string(), "A1");
  EXPECT_EQ(weyl_order(t.type), 2);
  EXPECT_EQ(root_system(Lattice(IntMatrix{{-4}})).type.to_string(), "0");
}

TEST(RootSystems, ClassifiesCartanMatrices) {
  std::vector<std::pair<char, int>> cases = {{'A', 1}, {'A', 4}, {'D', 4}, {'D', 6}, {'E', 6}, {'E', 7}, {'E', 8}};
  std::mt19937 rng(7);
  for (auto [ty, n] : cases) {
    IntMatrix g = cartan(ty, n).scaled(Int(-1));
    auto rs = root_system(Lattice(g));
    ASSERT_EQ(rs.type.components.size(), 1u);
    EXPECT_EQ(rs.type.components[0].type, ty);
    EXPECT_EQ(rs.type.components[0].rank, n);
    EXPECT_EQ(static_cast<int>(rs.simple.cols()), n);
    EXPECT_EQ(rs.roots.size(), rs.type.root_count());
    for (int k = 0; k < 3; ++k) {
      IntMatrix u = oracle::random_unimodular(rng, n);
      EXPECT_EQ(root_system(Lattice(u.transpose() * g * u)).type, rs.type);
    }
  }
}

TEST(RootSystems, MixedTypeAndBasisIndependence) {
  Lattice l = direct_sum(direct_sum(Lattice(cartan('D', 4).scaled(Int(-1))), Lattice(IntMatrix{{-2}})),
                         direct_sum(Lattice(cartan('A', 2).scaled(Int(-1))), Lattice(IntMatrix{{-2}})));
  auto rs = root_system(l);
  EXPECT_EQ(rs.type.to_string(), "2A1+A2+D4");
  EXPECT_EQ(rs.type.rank(), 8);
  std::mt19937 rng(9);
  for (int k = 0; k < 5; ++k) {
    IntMatrix u = oracle::random_unimodular(rng, 8);
    EXPECT_EQ(root_system(Lattice(u.transpose() * l.gram() * u)).type, rs.type);
  }
}

TEST(RootSystems, ParseAndWeyl) {
  EXPECT_EQ(parse_root_type("9A_1\\oplus D_6").to_string(), "9A1+D6");
  EXPECT_EQ(parse_root_type("$A_1\\oplus A_3\\oplus D_5$").to_string(), "A1+A3+D5");
  EXPECT_EQ(parse_root_type("0").to_string(), "0");
  EXPECT_THROW(parse_root_type("D3"), InvalidInput);
  EXPECT_EQ(weyl_order(RootSystemType{}), 1);
  EXPECT_EQ(weyl_order(parse_root_type("2A1")), 4);
  EXPECT_EQ(weyl_order(parse_root_type("E8")), 696729600);
  EXPECT_EQ(weyl_order(parse_root_type("D4")), 192);
  EXPECT_EQ(weyl_order(parse_root_type("A3")), 24);
}
