#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "evenlat/genus.hpp"
#include "evenlat/rootsys.hpp"

namespace evenlat {

/// Positive definite Cartan matrix.  Node numbering: A_n a path; D_n a path
/// 0..n-2 with node n-1 attached to n-3; E_n a path 0..n-2 with node n-1
/// attached to node 2.
inline IntMatrix cartan_matrix(const RootComponent& c) {
  const auto n = static_cast<std::size_t>(c.rank);
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) { g(i, j) = g(j, i) = -1; };
  if (c.type == 'A') {
    for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
  } else if (c.type == 'D') {
    for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
    link(n - 3, n - 1);
  } else {
    for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
    link(2, n - 1);
  }
  return g;
}

struct NiemeierSpec {
  int j = 0;
  std::vector<RootComponent> components;        ///< in the listed order
  std::vector<std::vector<int>> glue;           ///< glue words (class labels per component)
};

namespace detail {

inline std::vector<int> with_cyclic_tail(int head_len, const std::vector<int>& word, std::size_t shift) {
  std::vector<int> w(word.begin(), word.begin() + head_len);
  std::size_t m = word.size() - static_cast<std::size_t>(head_len);
  for (std::size_t i = 0; i < m; ++i) w.push_back(word[static_cast<std::size_t>(head_len) + (i + m - shift) % m]);
  return w;
}

/// Word plus all cyclic shifts of its tail after `head_len` fixed entries.
inline std::vector<std::vector<int>> cyclic_words(int head_len, const std::vector<int>& word) {
  std::vector<std::vector<int>> out;
  std::size_t m = word.size() - static_cast<std::size_t>(head_len);
  for (std::size_t s = 0; s < m; ++s) out.push_back(with_cyclic_tail(head_len, word, s));
  return out;
}

inline std::vector<int> digits(const std::string& s) {
  std::vector<int> v;
  for (char ch : s) v.push_back(ch - '0');
  return v;
}

} // namespace detail

/// Root systems and glue codes of the 23 Niemeier lattices with roots, in the
/// standard classification.  D_n labels: [1], [3] spinor classes, [2] the
/// vector class.  Correctness is established by verify_niemeier, not assumed.
inline NiemeierSpec niemeier_spec(int j) {
  using detail::cyclic_words;
  using detail::digits;
  auto rep = [](char t, int r, int k) { return std::vector<RootComponent>(static_cast<std::size_t>(k), RootComponent{t, r}); };
  auto cat = [](std::vector<RootComponent> a, const std::vector<RootComponent>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  NiemeierSpec s;
  s.j = j;
  switch (j) {
    case 1: s.components = rep('D', 24, 1); s.glue = {{1}}; break;
    case 2: s.components = cat(rep('D', 16, 1), rep('E', 8, 1)); s.glue = {{1, 0}}; break;
    case 3: s.components = rep('E', 8, 3); break;
    case 4: s.components = rep('A', 24, 1); s.glue = {{5}}; break;
    case 5: s.components = rep('D', 12, 2); s.glue = {{1, 2}, {2, 1}}; break;
    case 6: s.components = cat(rep('A', 17, 1), rep('E', 7, 1)); s.glue = {{3, 1}}; break;
    case 7: s.components = cat(rep('D', 10, 1), rep('E', 7, 2)); s.glue = {{1, 1, 0}, {3, 0, 1}}; break;
    case 8: s.components = cat(rep('A', 15, 1), rep('D', 9, 1)); s.glue = {{2, 1}}; break;
    case 9: s.components = rep('D', 8, 3); s.glue = cyclic_words(0, {1, 2, 2}); break;
    case 10: s.components = rep('A', 12, 2); s.glue = {{1, 5}}; break;
    case 11: s.components = cat(cat(rep('A', 11, 1), rep('D', 7, 1)), rep('E', 6, 1)); s.glue = {{1, 1, 1}}; break;
    case 12: s.components = rep('E', 6, 4); s.glue = cyclic_words(1, {1, 0, 1, 2}); break;
    case 13:
      s.components = cat(rep('A', 9, 2), rep('D', 6, 1));
      s.glue = {{2, 4, 0}, {5, 0, 1}, {0, 5, 3}};
      break;
    case 14: {
      s.components = rep('D', 6, 4);
      std::vector<int> p{0, 1, 2, 3};
      do {
        int inv = 0;
        for (std::size_t a = 0; a < 4; ++a)
          for (std::size_t b = a + 1; b < 4; ++b) inv += p[a] > p[b];
        if (inv % 2 == 0) s.glue.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      break;
    }
    case 15: s.components = rep('A', 8, 3); s.glue = cyclic_words(0, {1, 1, 4}); break;
    case 16: s.components = cat(rep('A', 7, 2), rep('D', 5, 2)); s.glue = {{1, 1, 1, 2}, {1, 7, 2, 1}}; break;
    case 17: s.components = rep('A', 6, 4); s.glue = cyclic_words(1, {1, 2, 1, 6}); break;
    case 18: {
      s.components = cat(rep('A', 5, 4), rep('D', 4, 1));
      for (auto& w : cyclic_words(1, {2, 0, 2, 4})) {
        w.push_back(0);
        s.glue.push_back(w);
      }
      s.glue.push_back({3, 3, 0, 0, 1});
      s.glue.push_back({3, 0, 3, 0, 2});
      s.glue.push_back({3, 0, 0, 3, 3});
      break;
    }
    case 19:
      s.components = rep('D', 4, 6);
      // hexacode: F_4-linear, so the label cycle 1 -> 2 -> 3 is applied as well
      s.glue = cyclic_words(1, {0, 0, 2, 3, 3, 2});
      s.glue.push_back({1, 1, 1, 1, 1, 1});
      for (std::size_t k = 0, m = s.glue.size(); k < m; ++k) {
        auto w = s.glue[k];
        for (auto& x : w) x = x == 0 ? 0 : x % 3 + 1;
        s.glue.push_back(w);
      }
      break;
    case 20: s.components = rep('A', 4, 6); s.glue = cyclic_words(1, {1, 0, 1, 4, 4, 1}); break;
    case 21: s.components = rep('A', 3, 8); s.glue = cyclic_words(1, {3, 2, 0, 0, 1, 0, 1, 1}); break;
    case 22: s.components = rep('A', 2, 12); s.glue = cyclic_words(1, digits("211211122212")); break;
    case 23: s.components = rep('A', 1, 24); s.glue = cyclic_words(1, digits("100000101001100110101111")); break;
    default: throw InvalidInput("Niemeier index must be in 1..23 (the Leech lattice is not supported)");
  }
  return s;
}

struct NiemeierLattice {
  int j = 0;
  RootSystemType type;
  std::vector<RootComponent> components;  ///< component of each block, listed order
  std::vector<std::size_t> offsets;       ///< first simple-root index of each component
  Lattice root_lattice;                   ///< negative definite, basis = simple roots
  RatMatrix basis;                        ///< columns: basis of N in simple-root coordinates
  Lattice lattice;                        ///< N in that basis
  IntMatrix simple_roots;                 ///< column i: simple root i in N coordinates

  std::size_t component_of(std::size_t root) const {
    std::size_t c = 0;
    while (c + 1 < offsets.size() && offsets[c + 1] <= root) ++c;
    return c;
  }
};

namespace detail {

/// Representative (simple-root coordinates, positive Cartan matrix) of glue class `label`.
inline RatVector glue_representative(const RootComponent& c, int label) {
  const auto n = static_cast<std::size_t>(c.rank);
  RatVector v(n);
  if (label == 0) return v;
  RatMatrix ci = inverse(to_rational(cartan_matrix(c)));
  std::size_t node = 0;
  switch (c.type) {
    case 'A':
      if (label < 0 || label > c.rank) throw InvalidInput("bad A_n glue label");
      node = static_cast<std::size_t>(label - 1);
      break;
    case 'D':
      if (label == 1) node = n - 2;
      else if (label == 2) node = 0;
      else if (label == 3) node = n - 1;
      else throw InvalidInput("bad D_n glue label");
      break;
    default:
      if (c.rank == 8) throw InvalidInput("E_8 has no glue");
      if (c.rank == 7 && label != 1) throw InvalidInput("bad E_7 glue label");
      if (c.rank == 6 && label != 1 && label != 2) throw InvalidInput("bad E_6 glue label");
      node = n - 2;  // end of the long arm: minuscule weight
      if (c.rank == 6 && label == 2) node = 0;
      break;
  }
  for (std::size_t i = 0; i < n; ++i) v[i] = ci(i, node);
  return v;
}

} // namespace detail

struct NiemeierReport {
  bool even = false;
  bool unimodular = false;
  bool rank24 = false;
  std::size_t root_count = 0;
  RootSystemType type;
  bool ok() const { return even && unimodular && rank24; }
};

inline NiemeierReport verify_niemeier(const Lattice& l) {
  NiemeierReport r;
  r.even = l.is_even();
  r.unimodular = l.is_unimodular();
  r.rank24 = l.rank() == 24;
  auto rs = root_system(l);
  r.root_count = rs.roots.size();
  r.type = rs.type;
  return r;
}

inline NiemeierLattice build_niemeier(int j) {
  NiemeierSpec spec = niemeier_spec(j);
  NiemeierLattice nl;
  nl.j = j;
  nl.components = spec.components;
  nl.type = make_root_type(spec.components);
  std::size_t n = 0;
  for (const auto& c : spec.components) {
    nl.offsets.push_back(n);
    n += static_cast<std::size_t>(c.rank);
  }
  IntMatrix g(n, n);
  for (std::size_t k = 0; k < spec.components.size(); ++k) {
    IntMatrix ck = cartan_matrix(spec.components[k]);
    for (std::size_t a = 0; a < ck.rows(); ++a)
      for (std::size_t b = 0; b < ck.rows(); ++b) g(nl.offsets[k] + a, nl.offsets[k] + b) = -ck(a, b);
  }
  nl.root_lattice = Lattice(g);
  std::vector<RatVector> glue;
  for (const auto& word : spec.glue) {
    if (word.size() != spec.components.size()) throw InternalInconsistency("glue word length mismatch");
    RatVector v(n);
    for (std::size_t k = 0; k < word.size(); ++k) {
      RatVector part = detail::glue_representative(spec.components[k], word[k]);
      for (std::size_t a = 0; a < part.size(); ++a) v[nl.offsets[k] + a] = part[a];
    }
    glue.push_back(v);
  }
  nl.basis = glue.empty() ? to_rational(IntMatrix::identity(n)) : overlattice_basis(nl.root_lattice, glue);
  nl.lattice = glue.empty() ? nl.root_lattice : overlattice(nl.root_lattice, glue);
  RatMatrix inv = inverse(nl.basis);
  nl.simple_roots = to_integer(inv);
  if (!nl.lattice.is_unimodular() || !nl.lattice.is_even() || nl.lattice.rank() != 24)
    throw InternalInconsistency("glue data does not give an even unimodular lattice for j=" + std::to_string(j));
  return nl;
}

// ---------------------------------------------------------------------------
// markings

/// Orbit partition of the 24 simple roots (1-based); indices not listed form
/// singleton orbits.
using Orbits = std::vector<std::vector<int>>;

inline Orbits complete_orbits(const Orbits& orbits, std::size_t n = 24) {
  std::vector<int> seen(n + 1, 0);
  Orbits out;
  for (const auto& o : orbits) {
    if (o.empty()) throw InvalidInput("empty orbit");
    for (int i : o) {
      if (i < 1 || static_cast<std::size_t>(i) > n) throw InvalidInput("orbit index out of range: " + std::to_string(i));
      if (seen[static_cast<std::size_t>(i)]++) throw InvalidInput("orbits are not disjoint: " + std::to_string(i));
    }
    out.push_back(o);
  }
  for (std::size_t i = 1; i <= n; ++i)
    if (!seen[i]) out.push_back({static_cast<int>(i)});
  return out;
}

/// Necessary condition for orbits of a diagram-preserving group: all members
/// of an orbit sit at equivalent nodes of components of the same type.
inline void check_realizable(const NiemeierLattice& nl, const Orbits& orbits) {
  auto context = [&](int idx) {
    auto i = static_cast<std::size_t>(idx - 1);
    std::size_t c = nl.component_of(i);
    const RootComponent& comp = nl.components[c];
    std::size_t local = i - nl.offsets[c];
    RatMatrix ci = inverse(to_rational(cartan_matrix(comp)));
    IntMatrix cm = cartan_matrix(comp);
    int degree = 0;
    for (std::size_t k = 0; k < cm.rows(); ++k)
      if (k != local && cm(local, k) != 0) ++degree;
    return std::make_tuple(comp.type, comp.rank, degree, ci(local, local));
  };
  for (const auto& o : orbits)
    for (int i : o)
      if (context(i) != context(o.front()))
        throw InvalidInput("orbit {" + std::to_string(o.front()) + ", " + std::to_string(i) +
                           "} mixes inequivalent simple roots");
}

/// N_H = N intersected with the orthogonal complement of the orbit sums of
/// simple roots (primitive by construction), in N coordinates.
inline Sublattice coinvariant_lattice(const NiemeierLattice& nl, const Orbits& orbits) {
  Orbits full = complete_orbits(orbits);
  check_realizable(nl, full);
  const IntMatrix& g = nl.lattice.gram();
  IntMatrix cond(full.size(), 24);
  for (std::size_t k = 0; k < full.size(); ++k) {
    IntVector s(24);
    for (int i : full[k])
      for (std::size_t t = 0; t < 24; ++t) s[t] += nl.simple_roots(t, static_cast<std::size_t>(i - 1));
    for (std::size_t t = 0; t < 24; ++t) {
      Int acc = 0;
      for (std::size_t u = 0; u < 24; ++u) acc += s[u] * g(u, t);
      cond(k, t) = acc;
    }
  }
  return Sublattice{nl.lattice, integer_kernel(cond)};
}

/// Golay code of the 24A_1 lattice as bitmasks over the 24 simple roots.
inline std::vector<std::uint32_t> golay_code() {
  NiemeierSpec s = niemeier_spec(23);
  std::vector<std::uint32_t> gens;
  for (const auto& w : s.glue) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < 24; ++i)
      if (w[i]) m |= 1u << i;
    gens.push_back(m);
  }
  std::vector<std::uint32_t> code{0};
  for (auto gmask : gens) {
    if (std::find(code.begin(), code.end(), gmask) != code.end()) continue;
    std::size_t sz = code.size();
    for (std::size_t i = 0; i < sz; ++i) code.push_back(code[i] ^ gmask);
  }
  std::sort(code.begin(), code.end());
  return code;
}

using Permutation = std::array<int, 24>;  ///< 0-based images

/// All permutations of the 24 coordinates preserving the Golay code that fix
/// the first octad pointwise and are fixed-point-free involutions on the other
/// 16 points (cycle type 1^8 2^8), found by backtracking over pairings.
inline std::vector<Permutation> golay_octad_involutions() {
  auto code = golay_code();
  if (code.size() != 4096) throw InternalInconsistency("Golay code does not have 4096 words");
  std::unordered_set<std::uint32_t> words(code.begin(), code.end());
  std::uint32_t octad = 0;
  for (auto w : code)
    if (std::popcount(w) == 8) {
      octad = w;
      break;
    }
  std::vector<int> rest;
  for (int i = 0; i < 24; ++i)
    if (!(octad >> i & 1u)) rest.push_back(i);
  std::vector<std::uint32_t> basis;  // 12 independent codewords
  std::vector<std::uint32_t> echelon;
  for (auto w : code) {
    std::uint32_t x = w;
    for (auto e : echelon) x = std::min(x, x ^ e);
    if (x) {
      echelon.push_back(x);
      std::sort(echelon.rbegin(), echelon.rend());
      basis.push_back(w);
    }
    if (basis.size() == 12) break;
  }
  Permutation perm{};
  for (int i = 0; i < 24; ++i) perm[static_cast<std::size_t>(i)] = i;
  auto apply = [&](std::uint32_t w) {
    std::uint32_t out = 0;
    for (int i = 0; i < 24; ++i)
      if (w >> i & 1u) out |= 1u << perm[static_cast<std::size_t>(i)];
    return out;
  };
  std::vector<bool> used(24, false);
  std::vector<Permutation> found;
  std::function<void()> rec = [&]() {
    int first = -1;
    for (int p : rest)
      if (!used[static_cast<std::size_t>(p)]) {
        first = p;
        break;
      }
    if (first < 0) {
      for (auto b : basis)
        if (!words.count(apply(b))) return;
      found.push_back(perm);
      return;
    }
    used[static_cast<std::size_t>(first)] = true;
    for (int q : rest) {
      if (used[static_cast<std::size_t>(q)]) continue;
      used[static_cast<std::size_t>(q)] = true;
      perm[static_cast<std::size_t>(first)] = q;
      perm[static_cast<std::size_t>(q)] = first;
      rec();
      perm[static_cast<std::size_t>(first)] = first;
      perm[static_cast<std::size_t>(q)] = q;
      used[static_cast<std::size_t>(q)] = false;
    }
    used[static_cast<std::size_t>(first)] = false;
  };
  rec();
  return found;
}

/// Orbits (1-based, each sorted, ordered by least element) of the group
/// generated by the given permutations.
inline Orbits orbits_of(const std::vector<Permutation>& gens) {
  std::vector<int> comp(24, -1);
  Orbits out;
  for (int s = 0; s < 24; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> orbit{s}, stack{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& g : gens) {
        int w = g[static_cast<std::size_t>(v)];
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = comp[static_cast<std::size_t>(s)];
          orbit.push_back(w);
          stack.push_back(w);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    for (auto& x : orbit) ++x;
    out.push_back(orbit);
  }
  return out;
}

/// The first Golay involution of type 1^8 2^8, as orbits (transpositions and
/// fixed points, ordered by least element).
inline Orbits golay_involution() {
  auto all = golay_octad_involutions();
  if (all.empty()) throw InternalInconsistency("no Golay involution of type 1^8 2^8 found");
  return orbits_of({all.front()});
}

struct MarkingInput {
  int j = 23;
  Orbits orbits;
  int alpha = 1;  ///< 1-based simple root index
};

struct MarkingResult {
  Sublattice s_g;
  Sublattice s;
  GenusSymbol s_genus;
  GenusSymbol s_g_genus;
  Sublattice complement;
  RootSystemType complement_roots;
  std::size_t minus4_count = 0;
  bool s_g_root_free = false;        ///< S_G has no vectors of norm -2
  bool rank_relation = false;        ///< rk S = rk S_G + 1
  bool complement_form_matches = false;  ///< q of the complement is -q_S
  std::vector<std::string> warnings;
};

inline MarkingResult marking_pipeline(const NiemeierLattice& nl, const MarkingInput& in) {
  if (nl.j != in.j) throw InvalidInput("marking input refers to a different Niemeier lattice");
  if (in.alpha < 1 || in.alpha > 24) throw InvalidInput("alpha must be a simple root index in 1..24");
  MarkingResult r;
  r.s_g = coinvariant_lattice(nl, in.orbits);
  const std::size_t rg = r.s_g.rank();
  IntMatrix gens(24, rg + 1);
  for (std::size_t c = 0; c < rg; ++c) gens.set_column(c, r.s_g.basis.column(c));
  gens.set_column(rg, nl.simple_roots.column(static_cast<std::size_t>(in.alpha - 1)));
  r.s = Sublattice{nl.lattice, saturation_basis(gens)};
  r.rank_relation = r.s.rank() == rg + 1;
  if (rg > 0) {
    Lattice sg = r.s_g.lattice();
    r.s_g_root_free = vectors_of_norm(sg, -2).empty();
    r.s_g_genus = genus_symbol(sg);
  } else {
    r.s_g_root_free = true;
  }
  if (!r.s_g_root_free) r.warnings.push_back("S_G contains roots: the orbit data is not Leech-type");
  if (!r.rank_relation) r.warnings.push_back("rk S != rk S_G + 1");
  Lattice sl = r.s.lattice();
  r.s_genus = genus_symbol(sl);
  r.complement = orthogonal_complement(r.s);
  if (r.complement.rank() > 0) {
    Lattice cl = r.complement.lattice();
    auto rs = root_system(cl);
    r.complement_roots = rs.type;
    r.minus4_count = vectors_of_norm(cl, -4).size();
    auto gc = genus_symbol(cl);
    r.complement_form_matches = fqf_equivalent(gc.discriminant(), fqf_negate(r.s_genus.discriminant()));
  } else {
    r.complement_form_matches = r.s_genus.discriminant().trivial();
  }
  if (!r.complement_form_matches) throw InternalInconsistency("complement discriminant form is not -q_S");
  return r;
}

inline MarkingResult marking_pipeline(const MarkingInput& in) { return marking_pipeline(build_niemeier(in.j), in); }

} // namespace evenlat
