#pragma once

#include <bit>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "evenlat/niemeier.hpp"

namespace evenlat {

// Automorphisms of the embedded Golay code (the Mathieu group M_24) and small
// subgroups of it, as coordinate permutations of the 24 simple roots of 24A_1.

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

inline Permutation identity_permutation() {
  Permutation p{};
  for (int i = 0; i < 24; ++i) p[static_cast<std::size_t>(i)] = i;
  return p;
}

/// (p * q)(x) = p(q(x))
inline Permutation operator*(const Permutation& p, const Permutation& q) {
  Permutation r{};
  for (std::size_t i = 0; i < 24; ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

inline Permutation inverse(const Permutation& p) {
  Permutation r{};
  for (std::size_t i = 0; i < 24; ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

inline int permutation_order(const Permutation& p) {
  int o = 1;
  std::array<bool, 24> seen{};
  for (std::size_t i = 0; i < 24; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = true, ++len;
    o = std::lcm(o, len);
  }
  return o;
}

inline Permutation power(Permutation p, int e) {
  Permutation r = identity_permutation();
  for (; e > 0; e >>= 1, p = p * p)
    if (e & 1) r = r * p;
  return r;
}

/// Cycle lengths, ascending.
inline std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> out;
  std::array<bool, 24> seen{};
  for (std::size_t i = 0; i < 24; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = true, ++len;
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

class GolayGroup {
public:
  GolayGroup() {
    code_ = golay_code();
    if (code_.size() != 4096) throw InternalInconsistency("Golay code does not have 4096 words");
    words_.insert(code_.begin(), code_.end());
    for (auto w : code_)
      if (std::popcount(w) == 8) octads_.push_back(w);
    if (octads_.size() != 759) throw InternalInconsistency("Golay code does not have 759 octads");
    for (auto o : octads_) {
      std::vector<int> pts;
      for (int i = 0; i < 24; ++i)
        if (o >> i & 1u) pts.push_back(i);
      for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b) {  // drop three points: all 5-subsets
          for (int c = b + 1; c < 8; ++c) {
            std::uint32_t five = o & ~(1u << pts[static_cast<std::size_t>(a)]) & ~(1u << pts[static_cast<std::size_t>(b)]) &
                                 ~(1u << pts[static_cast<std::size_t>(c)]);
            five_[five] = o;
          }
        }
    }
    if (five_.size() != 42504) throw InternalInconsistency("octads do not form a Steiner system S(5,8,24)");
    for (int i = 0; i < 24; ++i)
      for (std::size_t k = 0; k < octads_.size(); ++k)
        if (octads_[k] >> i & 1u) through_[static_cast<std::size_t>(i)].push_back(k);
    std::vector<std::uint32_t> ech;
    for (auto w : code_) {
      std::uint32_t x = w;
      for (auto e : ech) x = std::min(x, x ^ e);
      if (x) {
        ech.push_back(x);
        std::sort(ech.rbegin(), ech.rend());
        basis_.push_back(w);
      }
    }
  }

  bool preserves_code(const Permutation& p) const {
    for (auto b : basis_)
      if (!words_.count(apply(p, b))) return false;
    return true;
  }

  static std::uint32_t apply(const Permutation& p, std::uint32_t w) {
    std::uint32_t out = 0;
    for (int i = 0; i < 24; ++i)
      if (w >> i & 1u) out |= 1u << p[static_cast<std::size_t>(i)];
    return out;
  }

  /// Enumerates code automorphisms g with g(i) in domains[i]; the visitor
  /// returns false to stop.  Octad constraints are propagated as soon as five
  /// points of an octad have images.
  void search(const std::array<std::uint32_t, 24>& domains, const std::function<bool(const Permutation&)>& visit) const {
    Permutation img{};
    img.fill(-1);
    bool stop = false;
    std::function<void(std::array<std::uint32_t, 24>, std::uint32_t)> rec = [&](std::array<std::uint32_t, 24> dom,
                                                                                 std::uint32_t used) {
      if (stop) return;
      int best = -1;
      int best_size = 99;
      for (int i = 0; i < 24; ++i) {
        if (img[static_cast<std::size_t>(i)] >= 0) continue;
        int sz = std::popcount(dom[static_cast<std::size_t>(i)] & ~used);
        if (sz == 0) return;
        if (sz < best_size) best = i, best_size = sz;
      }
      if (best < 0) {
        if (preserves_code(img) && !visit(img)) stop = true;
        return;
      }
      std::uint32_t cand = dom[static_cast<std::size_t>(best)] & ~used;
      while (cand && !stop) {
        int y = std::countr_zero(cand);
        cand &= cand - 1;
        img[static_cast<std::size_t>(best)] = y;
        auto nd = dom;
        if (propagate(img, nd, best)) rec(nd, used | (1u << y));
        img[static_cast<std::size_t>(best)] = -1;
      }
    };
    rec(domains, 0);
  }

  /// Some code automorphism sending the points 0..k-1 to `images`, if any.
  std::optional<Permutation> extend(const std::vector<int>& images) const {
    std::array<std::uint32_t, 24> dom;
    dom.fill((1u << 24) - 1);
    for (std::size_t i = 0; i < images.size(); ++i) dom[i] = 1u << images[i];
    std::optional<Permutation> out;
    search(dom, [&](const Permutation& p) {
      out = p;
      return false;
    });
    return out;
  }

  /// Three automorphisms with random images of five points (the group is
  /// 5-transitive).  That they generate the whole group is checked through the
  /// involution count in involutions().
  const std::vector<Permutation>& generators() const {
    if (!gens_.empty()) return gens_;
    std::mt19937 rng(24);
    std::vector<int> pts(24);
    for (int i = 0; i < 24; ++i) pts[static_cast<std::size_t>(i)] = i;
    while (gens_.size() < 3) {
      std::shuffle(pts.begin(), pts.end(), rng);
      auto g = extend(std::vector<int>(pts.begin(), pts.begin() + 5));
      if (!g) throw InternalInconsistency("5 points have no extension to a Golay automorphism");
      gens_.push_back(*g);
    }
    return gens_;
  }

  /// Conjugacy class of x under the generated group.
  std::vector<Permutation> conjugacy_class(const Permutation& x, std::size_t limit = 200000) const {
    const auto& gens = generators();
    std::vector<Permutation> inv;
    for (const auto& g : gens) inv.push_back(inverse(g));
    std::unordered_set<Permutation, PermutationHash> seen{x};
    std::vector<Permutation> out{x};
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Permutation y = gens[k] * out[i] * inv[k];
        if (seen.insert(y).second) {
          out.push_back(y);
          if (out.size() > limit) throw BudgetExceeded("conjugacy class exceeds the limit");
        }
      }
    return out;
  }

  /// All involutions of the group, ordered by class.
  const std::vector<Permutation>& involutions() const {
    if (!involutions_.empty()) return involutions_;
    std::map<std::vector<int>, Permutation> reps;
    for (const auto& p : sample_elements(400)) {
      int o = permutation_order(p);
      if (o % 2 == 0) {
        Permutation t = power(p, o / 2);
        reps.emplace(cycle_type(t), t);
      }
    }
    for (const auto& [ct, t] : reps) {
      auto cls = conjugacy_class(t);
      involutions_.insert(involutions_.end(), cls.begin(), cls.end());
    }
    // classes 1^8 2^8 and 2^12 have 11385 and 31878 elements
    if (involutions_.size() != 11385 + 31878) {
      involutions_.clear();
      throw InternalInconsistency("involution classes of the Golay automorphism group have the wrong sizes");
    }
    return involutions_;
  }

  /// One representative per cycle type among elements of order 4.
  std::vector<Permutation> order4_representatives() const {
    std::map<std::vector<int>, Permutation> reps;
    for (const auto& p : sample_elements(400)) {
      int o = permutation_order(p);
      if (o % 4 == 0) {
        Permutation t = power(p, o / 4);
        reps.emplace(cycle_type(t), t);
      }
    }
    std::vector<Permutation> out;
    for (const auto& [ct, t] : reps) out.push_back(t);
    return out;
  }

  const std::vector<std::uint32_t>& octads() const { return octads_; }

private:
  bool propagate(const Permutation& img, std::array<std::uint32_t, 24>& dom, int changed) const {
    for (std::size_t k : through_[static_cast<std::size_t>(changed)]) {
      std::uint32_t o = octads_[k];
      std::uint32_t dst = 0;
      int n = 0;
      for (std::uint32_t m = o; m; m &= m - 1) {
        int i = std::countr_zero(m);
        if (img[static_cast<std::size_t>(i)] >= 0) {
          if (n < 5) dst |= 1u << img[static_cast<std::size_t>(i)];
          ++n;
        }
      }
      if (n < 5) continue;
      std::uint32_t target = five_.at(dst);
      for (std::uint32_t m = o; m; m &= m - 1) {
        int i = std::countr_zero(m);
        int y = img[static_cast<std::size_t>(i)];
        if (y >= 0) {
          if (!(target >> y & 1u)) return false;
        } else {
          dom[static_cast<std::size_t>(i)] &= target;
          if (!dom[static_cast<std::size_t>(i)]) return false;
        }
      }
      // points outside the octad map outside the target octad
      for (int i = 0; i < 24; ++i)
        if (!(o >> i & 1u) && img[static_cast<std::size_t>(i)] < 0) {
          dom[static_cast<std::size_t>(i)] &= ~target;
          if (!dom[static_cast<std::size_t>(i)]) return false;
        }
    }
    return true;
  }

  std::vector<Permutation> sample_elements(int count) const {
    const auto& gens = generators();
    std::mt19937 rng(4);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::vector<Permutation> out;
    Permutation x = identity_permutation();
    for (int i = 0; i < count; ++i) {
      for (int s = 0; s < 7; ++s) x = x * gens[pick(rng)];
      out.push_back(x);
    }
    return out;
  }

  std::vector<std::uint32_t> code_;
  std::unordered_set<std::uint32_t> words_;
  std::vector<std::uint32_t> octads_;
  std::unordered_map<std::uint32_t, std::uint32_t> five_;
  std::array<std::vector<std::size_t>, 24> through_;
  std::vector<std::uint32_t> basis_;
  mutable std::vector<Permutation> gens_;
  mutable std::vector<Permutation> involutions_;
};

/// Closure of a set of permutations under composition.
inline std::vector<Permutation> generate_group(const std::vector<Permutation>& gens, std::size_t limit = 100000) {
  std::unordered_set<Permutation, PermutationHash> seen{identity_permutation()};
  std::vector<Permutation> out{identity_permutation()};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      Permutation h = g * out[i];
      if (seen.insert(h).second) {
        out.push_back(h);
        if (out.size() > limit) throw BudgetExceeded("permutation group exceeds the limit");
      }
    }
  return out;
}

enum class SmallGroup { D8, S4, C2xS4 };

/// Subgroups of the Golay automorphism group isomorphic to D_8, S_4 or C_2 x S_4,
/// one generating set per distinct orbit partition.  Every such subgroup is
/// conjugate to one containing a fixed order-4 representative a as
///   D_8 = <a, t | t^2, (at)^2>,  S_4 = <a, t | t^2, (at)^3>,  C_2 x S_4 = S_4 x <z>.
inline std::map<Orbits, std::vector<Permutation>> small_subgroups(const GolayGroup& m, SmallGroup kind) {
  std::map<Orbits, std::vector<Permutation>> out;
  const auto& invs = m.involutions();
  const Permutation id = identity_permutation();
  for (const auto& a : m.order4_representatives()) {
    Permutation a2 = a * a;
    for (const auto& t : invs) {
      if (t == a2) continue;
      Permutation at = a * t;
      bool ok = kind == SmallGroup::D8 ? at * at == id : (at * at * at == id);
      if (!ok) continue;
      if (kind != SmallGroup::C2xS4) {
        out.emplace(orbits_of({a, t}), std::vector<Permutation>{a, t});
        continue;
      }
      for (const auto& z : invs)
        if (z * a == a * z && z * t == t * z && generate_group({a, t, z}).size() == 48)
          out.emplace(orbits_of({a, t, z}), std::vector<Permutation>{a, t, z});
    }
  }
  return out;
}

/// Code automorphisms preserving every orbit setwise, up to `limit` of them.
inline std::vector<Permutation> orbit_stabilizer(const GolayGroup& m, const Orbits& orbits, std::size_t limit) {
  std::array<std::uint32_t, 24> dom{};
  for (const auto& o : orbits) {
    std::uint32_t mask = 0;
    for (int i : o) mask |= 1u << (i - 1);
    for (int i : o) dom[static_cast<std::size_t>(i - 1)] = mask;
  }
  std::vector<Permutation> out;
  m.search(dom, [&](const Permutation& p) {
    out.push_back(p);
    return out.size() <= limit;
  });
  return out;
}

} // namespace evenlat
