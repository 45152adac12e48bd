#include <gtest/gtest.h>

#include <set>

#include "evenlat/evenlat.hpp"
#include "oracles.hpp"

using namespace evenlat;

namespace {

IntMatrix diag(std::initializer_list<long> d) {
  IntMatrix g(d.size(), d.size());
  std::size_t i = 0;
  for (long x : d) g(i, i) = x, ++i;
  return g;
}

const IntMatrix a2{{2, -1}, {-1, 2}};

TEST(Isometry, OrdersAgreeWithNaiveCount) {
  const std::vector<IntMatrix> grams{a2, diag({2, 2}), diag({2, 6, 6}), diag({2, 2, 2}), diag({2, 4, 16}),
                                     IntMatrix{{8, 2, -4}, {2, 8, 2}, {-4, 2, 8}}, IntMatrix{{2, 1, 0}, {1, 2, 1}, {0, 1, 4}}};
  for (const auto& g : grams) {
    auto grp = isometry_group(Lattice(g));
    EXPECT_EQ(grp.order, Int(static_cast<long>(oracle::naive_isometry_count(g))));
    EXPECT_EQ(static_cast<long>(grp.elements.size()), grp.order.get_si());
    std::size_t proper = 0;
    for (const auto& e : grp.elements) {
      EXPECT_EQ(e.transpose() * g * e, g);
      proper += determinant(e) == 1;
    }
    EXPECT_EQ(grp.proper_order, Int(static_cast<long>(proper)));
  }
}

TEST(Isometry, SwappingEqualSummandsDoublesTheGroup) {
  auto grp = isometry_group(Lattice(diag({2, 6, 6})));
  EXPECT_EQ(grp.order, 16);
  EXPECT_EQ(grp.proper_order, 8);
  EXPECT_EQ(grp.weyl_order, 2);
}

// Reflections in roots act trivially on the discriminant group; for root
// lattices the kernel of O(L) -> O(q_L) is exactly the Weyl group.
TEST(Isometry, KernelOfPiIsWeylGroupForRootLattices) {
  for (const auto& g : {a2, diag({2, 2}), IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}}) {
    Lattice l(g);
    auto grp = isometry_group(l);
    auto ker = kernel_of_pi(l, grp);
    auto w = weyl_group_elements(l);
    std::set<IntMatrix> a(ker.begin(), ker.end()), b(w.begin(), w.end());
    EXPECT_EQ(a, b);
  }
}

TEST(Isometry, WeylGroupActsTriviallyOnDiscriminant) {
  Lattice l(diag({2, 6, 6}));
  auto grp = isometry_group(l);
  auto ker = kernel_of_pi(l, grp);
  std::set<IntMatrix> k(ker.begin(), ker.end());
  for (const auto& w : weyl_group_elements(l)) EXPECT_TRUE(k.count(w));
}

TEST(Isometry, ImageOrderTimesKernelIsGroupOrder) {
  for (const auto& g : {diag({2, 6, 6}), diag({2, 4, 16}), IntMatrix{{8, 2, -4}, {2, 8, 2}, {-4, 2, 8}}}) {
    Lattice l(g);
    auto grp = isometry_group(l);
    auto img = image_elements(l, IsometrySubgroup::Full, grp);
    EXPECT_EQ(Int(static_cast<long>(img.size() * kernel_of_pi(l, grp).size())), grp.order);
  }
}

TEST(DoubleCosets, ExtremeSubgroups) {
  auto f = discriminant_form(Lattice(diag({2, 6, 6})));
  auto oq = oq_group(f);
  std::vector<FormMap> all(oq.elements.begin(), oq.elements.end());
  EXPECT_EQ(double_coset_count(f, all, all), 1);
  EXPECT_EQ(double_coset_count(f, {}, {}), oq.order);
  EXPECT_EQ(double_coset_count(f, all, {}), 1);
}

TEST(DoubleCosets, ImageOfIsometriesOnBothSides) {
  Lattice l(diag({2, 4, 16}));
  auto f = discriminant_form(l);
  auto grp = isometry_group(l);
  auto img = image_elements(l, IsometrySubgroup::Full, grp);
  auto oq = oq_group(f);
  // one-sided: |O(q)| / |image|
  EXPECT_EQ(double_coset_count(f, img, {}), oq.order / Int(static_cast<long>(img.size())));
}

TEST(DoubleCosets, ForeignMapRejected) {
  auto f = discriminant_form(Lattice(diag({2, 6, 6})));
  FormMap bad(f.ngens(), std::vector<long>(f.ngens(), 0));
  EXPECT_THROW(double_coset_count(f, {bad}, {}), InvalidInput);
}

TEST(StrongCount, FormulaHolds) {
  for (const auto& g : {diag({2, 6, 6}), diag({2, 4, 16}), IntMatrix{{8, 2, -4}, {2, 8, 2}, {-4, 2, 8}}}) {
    auto s = strong_component_count(Lattice(g));
    EXPECT_EQ(s.ms * s.proper_order, s.oq_order * s.weyl_plus);
    EXPECT_EQ(s.oq_order, oq_group(discriminant_form(Lattice(g))).order);
  }
}

TEST(StrongCount, KnownValues) {
  auto a = strong_component_count(Lattice(diag({2, 6, 6})));
  EXPECT_EQ(a.o_order, 16);
  EXPECT_EQ(a.ms, 2);
  auto b = strong_component_count(Lattice(IntMatrix{{8, 2, -4}, {2, 8, 2}, {-4, 2, 8}}));
  EXPECT_EQ(b.oq_order, 128);
  EXPECT_EQ(b.ms, 16);
}

TEST(StrongCount, IndefiniteRejected) {
  EXPECT_THROW(strong_component_count(Lattice(IntMatrix{{0, 1}, {1, 0}})), NotDefinite);
  EXPECT_THROW(strong_component_count(Lattice(diag({-2, -2, -2}))), InvalidInput);
}

TEST(StrongCount, BudgetEnforced) {
  EXPECT_THROW(strong_component_count(Lattice(diag({2, 4, 16})), 4), BudgetExceeded);
}

} // namespace
