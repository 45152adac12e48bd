#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "evenlat/genus.hpp"
#include "evenlat/rootsys.hpp"

namespace evenlat {

struct IsometryGroup {
  Int order;
  Int proper_order;
  Int weyl_order;
  std::vector<IntMatrix> generators;  ///< sorted
  std::vector<IntMatrix> elements;    ///< all of O(L), sorted (identity among them)
};

namespace detail {

inline IntMatrix reflection(const IntMatrix& g, const IntVector& r) {
  const std::size_t n = g.rows();
  Int rr = dot(r, g, r);
  IntMatrix s = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    Int rx = 0;
    for (std::size_t k = 0; k < n; ++k) rx += r[k] * g(k, j);  // r . e_j
    Int c = 2 * rx;
    if (c % rr != 0) throw InternalInconsistency("reflection is not integral");
    c /= rr;
    for (std::size_t i = 0; i < n; ++i) s(i, j) -= c * r[i];
  }
  return s;
}

/// Closure of a set of integer matrices under multiplication.
inline std::vector<IntMatrix> generate_matrix_group(const std::vector<IntMatrix>& gens, std::size_t n, std::size_t limit) {
  std::set<IntMatrix> seen{IntMatrix::identity(n)};
  std::vector<IntMatrix> out{IntMatrix::identity(n)};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      IntMatrix h = g * out[i];
      if (seen.insert(h).second) {
        out.push_back(h);
        if (out.size() > limit) throw BudgetExceeded("generated matrix group exceeds the budget");
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

/// Full isometry group of a definite lattice by backtracking on the images of
/// basis vectors among vectors of the same norm.
inline IsometryGroup isometry_group(const Lattice& l, std::size_t max_rank = 8, std::size_t max_elements = 1'000'000) {
  const std::size_t n = l.rank();
  if (n > max_rank) throw BudgetExceeded("rank exceeds the isometry-group bound");
  int sg = detail::definite_sign(l.gram());
  const IntMatrix& g = l.gram();
  std::map<Int, std::vector<IntVector>> by_norm;
  for (std::size_t i = 0; i < n; ++i)
    if (!by_norm.count(g(i, i))) by_norm[g(i, i)] = vectors_of_norm(l, g(i, i));
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return by_norm[g(a, a)].size() < by_norm[g(b, b)].size(); });
  IsometryGroup out;
  IntMatrix m(n, n);
  std::vector<IntVector> img(n);
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == n) {
      for (std::size_t i = 0; i < n; ++i) m.set_column(i, img[i]);
      out.elements.push_back(m);
      if (out.elements.size() > max_elements) throw BudgetExceeded("isometry group exceeds the element budget");
      return;
    }
    std::size_t i = order[depth];
    for (const auto& v : by_norm[g(i, i)]) {
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        std::size_t k = order[d];
        if (dot(v, g, img[k]) != g(i, k)) ok = false;
      }
      if (!ok) continue;
      img[i] = v;
      rec(depth + 1);
    }
  };
  rec(0);
  std::sort(out.elements.begin(), out.elements.end());
  for (const auto& e : out.elements)
    if (!(e.transpose() * g * e == g)) throw InternalInconsistency("enumerated map is not an isometry");
  out.order = static_cast<long>(out.elements.size());
  long proper = 0;
  for (const auto& e : out.elements) proper += determinant(e) == 1;
  out.proper_order = proper;
  // generators: greedy, adding elements not yet in the generated subgroup
  std::set<IntMatrix> generated{IntMatrix::identity(n)};
  for (const auto& e : out.elements) {
    if (generated.count(e)) continue;
    out.generators.push_back(e);
    auto grp = detail::generate_matrix_group(out.generators, n, max_elements);
    generated = std::set<IntMatrix>(grp.begin(), grp.end());
  }
  if (static_cast<long>(generated.size()) != out.order) throw InternalInconsistency("generators do not span O(L)");
  auto rs = root_system(l);
  out.weyl_order = weyl_order(rs.type);
  // cross-check against the group generated by reflections in roots
  std::vector<IntMatrix> refl;
  for (const auto& r : rs.roots) refl.push_back(detail::reflection(g, r));
  auto w = detail::generate_matrix_group(refl, n, max_elements);
  if (Int(static_cast<long>(w.size())) != out.weyl_order) throw InternalInconsistency("Weyl group order mismatch");
  (void)sg;
  return out;
}

/// Weyl group W(L) as explicit matrices.
inline std::vector<IntMatrix> weyl_group_elements(const Lattice& l, std::size_t limit = 1'000'000) {
  auto rs = root_system(l);
  std::vector<IntMatrix> refl;
  for (const auto& r : rs.roots) refl.push_back(detail::reflection(l.gram(), r));
  return detail::generate_matrix_group(refl, l.rank(), limit);
}

/// Action of an isometry of L on A_L, as images of the discriminant-form generators.
inline FormMap discriminant_action(const Lattice& l, const DiscriminantData& data, const IntMatrix& iso) {
  FormMap m;
  RatMatrix r = to_rational(iso);
  for (std::size_t i = 0; i < data.form.ngens(); ++i) {
    RatVector y = r * data.generators.column(i);
    IntVector c = data.coordinates(l, y);
    std::vector<long> row;
    for (const auto& x : c) row.push_back(x.get_si());
    m.push_back(row);
  }
  return m;
}

enum class IsometrySubgroup { Full, Proper };

/// Images pi(O(L)) or pi(O^+(L)) in O(q_L) (distinct maps, sorted).
inline std::vector<FormMap> image_elements(const Lattice& l, IsometrySubgroup which, const IsometryGroup& grp) {
  if (!l.is_even()) throw OddLattice("O(q_L) needs an even lattice");
  auto data = discriminant_data(l);
  std::set<FormMap> images;
  for (const auto& e : grp.elements) {
    if (which == IsometrySubgroup::Proper && determinant(e) != 1) continue;
    images.insert(discriminant_action(l, data, e));
  }
  return {images.begin(), images.end()};
}

inline Int image_in_oq(const Lattice& l, IsometrySubgroup which = IsometrySubgroup::Full) {
  auto grp = isometry_group(l);
  return static_cast<long>(image_elements(l, which, grp).size());
}

/// Elements of O(L) acting trivially on A_L.
inline std::vector<IntMatrix> kernel_of_pi(const Lattice& l, const IsometryGroup& grp) {
  auto data = discriminant_data(l);
  FormMap id;
  for (std::size_t i = 0; i < data.form.ngens(); ++i) {
    std::vector<long> row(data.form.ngens(), 0);
    row[i] = 1;
    id.push_back(row);
  }
  std::vector<IntMatrix> out;
  for (const auto& e : grp.elements)
    if (discriminant_action(l, data, e) == id) out.push_back(e);
  return out;
}

struct StrongCount {
  Int oq_order;
  Int o_order;
  Int proper_order;
  Int weyl_order;
  Int weyl_plus;
  Int ms;
};

/// M_s = |O(q_T)| |W^+(T)| / |O^+(T)| for a positive definite even T.
inline StrongCount strong_component_count(const Lattice& t, const Int& budget = 10000) {
  if (detail::definite_sign(t.gram()) != 1) throw InvalidInput("T must be positive definite");
  auto grp = isometry_group(t);
  StrongCount s;
  s.oq_order = oq_group(discriminant_form(t), budget).order;
  s.o_order = grp.order;
  s.proper_order = grp.proper_order;
  s.weyl_order = grp.weyl_order;
  s.weyl_plus = grp.weyl_order > 1 ? Int(grp.weyl_order / 2) : Int(1);
  Int num = s.oq_order * s.weyl_plus;
  if (num % s.proper_order != 0) throw InternalInconsistency("M_s is not an integer");
  s.ms = num / s.proper_order;
  return s;
}

} // namespace evenlat
