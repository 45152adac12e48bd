#pragma once

// Finite quadratic forms: a finite abelian group presented as a product of
// cyclic groups Z/d_i with a quadratic form valued in Q/2Z.

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "evenlat/linalg.hpp"

namespace evenlat {

struct FiniteQuadraticForm {
  std::vector<Int> orders;  ///< d_i; for library-produced forms d_1 | d_2 | ...
  std::vector<Rat> q;       ///< q(g_i) in [0, 2)
  RatMatrix b;              ///< b(g_i, g_j) in [0, 1), symmetric

  std::size_t ngens() const { return orders.size(); }

  Int group_order() const {
    Int n = 1;
    for (const auto& d : orders) n *= d;
    return n;
  }

  Int exponent() const {
    Int e = 1;
    for (const auto& d : orders) e = lcm(e, d);
    return e;
  }

  bool trivial() const { return orders.empty(); }

  IntVector reduce(IntVector x) const {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod(x[i], orders[i]);
    return x;
  }

  Rat value(const IntVector& x) const {
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      s += Rat(x[i] * x[i]) * q[i];
      for (std::size_t j = i + 1; j < x.size(); ++j)
        if (x[j] != 0) s += 2 * Rat(x[i] * x[j]) * b(i, j);
    }
    return mod_rat(s, Rat(2));
  }

  Rat bilinear(const IntVector& x, const IntVector& y) const {
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j)
        if (y[j] != 0) s += Rat(x[i] * y[j]) * b(i, j);
    }
    return mod_rat(s, Rat(1));
  }

  IntVector unit(std::size_t i) const {
    IntVector e(ngens());
    e[i] = 1;
    return e;
  }

  /// Checks the well-definedness conditions; throws InvalidInput otherwise.
  void validate() const {
    const std::size_t n = orders.size();
    if (q.size() != n || b.rows() != n || b.cols() != n) throw InvalidInput("form data has inconsistent sizes");
    for (std::size_t i = 0; i < n; ++i) {
      if (orders[i] < 2) throw InvalidInput("generator orders must exceed 1");
      if (mod_rat(Rat(orders[i] * orders[i]) * q[i], Rat(2)) != 0)
        throw InvalidInput("q is not well defined on Z/" + orders[i].get_str());
      if (mod_rat(q[i], Rat(1)) != mod_rat(b(i, i), Rat(1)))
        throw InvalidInput("b(g,g) must agree with q(g) mod 1");
      for (std::size_t j = 0; j < n; ++j) {
        if (mod_rat(b(i, j) - b(j, i), Rat(1)) != 0) throw InvalidInput("b is not symmetric");
        if (mod_rat(Rat(orders[i]) * b(i, j), Rat(1)) != 0) throw InvalidInput("b is not well defined");
      }
    }
  }

  /// Canonical representatives q in [0,2), b in [0,1).
  FiniteQuadraticForm canonical_values() const {
    FiniteQuadraticForm f = *this;
    for (auto& v : f.q) v = mod_rat(v, Rat(2));
    for (std::size_t i = 0; i < f.b.rows(); ++i)
      for (std::size_t j = 0; j < f.b.cols(); ++j) f.b(i, j) = mod_rat(f.b(i, j), Rat(1));
    return f;
  }

  friend bool operator==(const FiniteQuadraticForm& a, const FiniteQuadraticForm& c) {
    return a.orders == c.orders && a.q == c.q && a.b == c.b;
  }
};

inline FiniteQuadraticForm trivial_form() { return FiniteQuadraticForm{{}, {}, RatMatrix(0, 0)}; }

/// Cyclic form Z/d with q(g) = v.
inline FiniteQuadraticForm cyclic_form(const Int& d, const Rat& v) {
  FiniteQuadraticForm f{{d}, {mod_rat(v, Rat(2))}, RatMatrix(1, 1)};
  f.b(0, 0) = mod_rat(v, Rat(1));
  f.validate();
  return f;
}

/// Orthogonal sum without regrouping generators.
inline FiniteQuadraticForm direct_sum_raw(const FiniteQuadraticForm& a, const FiniteQuadraticForm& c) {
  const std::size_t n = a.ngens(), m = c.ngens();
  FiniteQuadraticForm f;
  f.orders = a.orders;
  f.orders.insert(f.orders.end(), c.orders.begin(), c.orders.end());
  f.q = a.q;
  f.q.insert(f.q.end(), c.q.begin(), c.q.end());
  f.b = RatMatrix(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f.b(i, j) = a.b(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) f.b(n + i, n + j) = c.b(i, j);
  return f;
}

/// A subgroup of a finite quadratic form: the restricted form on invariant-factor
/// generators, plus those generators in the coordinates of the parent.
struct SubgroupForm {
  FiniteQuadraticForm form;
  std::vector<IntVector> generators;
};

/// Subgroup generated by the given elements, presented by invariant factors
/// (ascending, orders > 1).
inline SubgroupForm subgroup(const FiniteQuadraticForm& f, const std::vector<IntVector>& elems) {
  const std::size_t n = f.ngens(), m = elems.size();
  SubgroupForm out{trivial_form(), {}};
  if (m == 0) return out;
  IntMatrix M(n, m + n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) M(i, j) = elems[j][i];
  for (std::size_t i = 0; i < n; ++i) M(i, m + i) = f.orders[i];
  IntMatrix K = integer_kernel(M);
  IntMatrix R(m, K.cols());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < K.cols(); ++j) R(i, j) = K(i, j);
  SnfResult s = smith_normal_form(R);
  if (s.rank != m) throw InternalInconsistency("relation lattice of a finite group is not of full rank");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m; ++i)
    if (s.D(i, i) > 1) keep.push_back(i);
  for (std::size_t i : keep) {
    IntVector g(n);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t t = 0; t < n; ++t) g[t] += s.U_inv(k, i) * elems[k][t];
    out.generators.push_back(f.reduce(g));
    out.form.orders.push_back(s.D(i, i));
  }
  const std::size_t r = keep.size();
  out.form.q.resize(r);
  out.form.b = RatMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    out.form.q[i] = f.value(out.generators[i]);
    for (std::size_t j = 0; j < r; ++j) out.form.b(i, j) = f.bilinear(out.generators[i], out.generators[j]);
  }
  return out;
}

/// The same form presented on invariant-factor generators.
inline FiniteQuadraticForm normalize_generators(const FiniteQuadraticForm& f) {
  std::vector<IntVector> units;
  for (std::size_t i = 0; i < f.ngens(); ++i) units.push_back(f.unit(i));
  return subgroup(f, units).form;
}

inline FiniteQuadraticForm fqf_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& c) {
  return normalize_generators(direct_sum_raw(a, c));
}

inline FiniteQuadraticForm fqf_negate(const FiniteQuadraticForm& a) {
  FiniteQuadraticForm f = a;
  for (auto& v : f.q) v = mod_rat(-v, Rat(2));
  for (std::size_t i = 0; i < f.b.rows(); ++i)
    for (std::size_t j = 0; j < f.b.cols(); ++j) f.b(i, j) = mod_rat(-f.b(i, j), Rat(1));
  return f;
}

/// p-primary component.
inline SubgroupForm p_part(const FiniteQuadraticForm& f, const Int& p) {
  std::vector<IntVector> elems;
  for (std::size_t i = 0; i < f.ngens(); ++i) {
    Int d = f.orders[i];
    Int cof = d;
    while (mod(cof, p) == 0) cof /= p;
    if (cof == d) continue;
    IntVector e = f.unit(i);
    e[i] = cof;
    elems.push_back(e);
  }
  return subgroup(f, elems);
}

// ---------------------------------------------------------------------------
// machine-word tables for enumeration-heavy routines

/// All values scaled by a common integer E so that q lives in Z/2E and b in Z/E.
class FormTables {
public:
  FormTables(const FiniteQuadraticForm& f, const Int& scale, const Int& budget = Int(1) << 22) {
    if (f.group_order() > budget)
      throw BudgetExceeded("finite form of order " + f.group_order().get_str() + " exceeds the enumeration budget");
    if (mod(scale, f.exponent()) != 0) throw InvalidInput("table scale must be a multiple of the exponent");
    E_ = to_long(scale);
    n_ = f.ngens();
    ord_.resize(n_);
    qs_.resize(n_);
    bs_.assign(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      ord_[i] = to_long(f.orders[i]);
      Rat v = f.q[i] * Rat(scale);
      if (v.get_den() != 1) throw InvalidInput("q value not compatible with scale");
      qs_[i] = to_long(mod(Int(v.get_num()), Int(2 * E_)));
      for (std::size_t j = 0; j < n_; ++j) {
        Rat w = f.b(i, j) * Rat(scale);
        if (w.get_den() != 1) throw InvalidInput("b value not compatible with scale");
        bs_[i * n_ + j] = to_long(mod(Int(w.get_num()), Int(E_)));
      }
    }
    size_ = 1;
    stride_.resize(n_);
    for (std::size_t i = n_; i-- > 0;) {
      stride_[i] = size_;
      size_ *= ord_[i];
    }
  }

  std::size_t ngens() const { return n_; }
  long size() const { return size_; }
  long scale() const { return E_; }
  long order(std::size_t i) const { return ord_[i]; }

  /// Mixed-radix decoding, first coordinate most significant.
  std::vector<long> element(long idx) const {
    std::vector<long> x(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      x[i] = (idx / stride_[i]) % ord_[i];
    }
    return x;
  }

  long index(const std::vector<long>& x) const {
    long idx = 0;
    for (std::size_t i = 0; i < n_; ++i) idx += pmod(x[i], ord_[i]) * stride_[i];
    return idx;
  }

  long q(const std::vector<long>& x) const {
    __int128 s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!x[i]) continue;
      s += static_cast<__int128>(x[i]) * x[i] * qs_[i];
      for (std::size_t j = i + 1; j < n_; ++j)
        if (x[j]) s += static_cast<__int128>(2) * x[i] * x[j] * bs_[i * n_ + j];
    }
    return static_cast<long>(pmod128(s, 2 * E_));
  }

  long b(const std::vector<long>& x, const std::vector<long>& y) const {
    __int128 s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (y[j]) s += static_cast<__int128>(x[i]) * y[j] * bs_[i * n_ + j];
    }
    return static_cast<long>(pmod128(s, E_));
  }

  long qgen(std::size_t i) const { return qs_[i]; }
  long bgen(std::size_t i, std::size_t j) const { return bs_[i * n_ + j]; }

  /// Order of the element x.
  long element_order(const std::vector<long>& x) const {
    long o = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      long g = std::gcd(x[i], ord_[i]);
      o = std::lcm(o, ord_[i] / g);
    }
    return o;
  }

  std::vector<long> add(const std::vector<long>& x, const std::vector<long>& y, long k = 1) const {
    std::vector<long> z(n_);
    for (std::size_t i = 0; i < n_; ++i) z[i] = pmod(x[i] + k * y[i], ord_[i]);
    return z;
  }

  static long pmod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
  }

private:
  static __int128 pmod128(__int128 a, long m) {
    __int128 r = a % m;
    return r < 0 ? r + m : r;
  }

  std::size_t n_ = 0;
  long E_ = 1;
  long size_ = 1;
  std::vector<long> ord_, qs_, bs_, stride_;
};

/// An automorphism (or homomorphism) of finite forms recorded by the images
/// of the source generators, as coefficient vectors in the target.
using FormMap = std::vector<std::vector<long>>;

namespace detail {

/// Backtracking search for maps g_i -> h_i preserving orders, q and b.
/// Calls `visit` for each solution; stops when it returns false.
inline void search_isometries(const FormTables& src, const FormTables& dst,
                              const std::function<bool(const FormMap&)>& visit,
                              bool bilinear_only = false, long max_nodes = 50'000'000) {
  const std::size_t n = src.ngens();
  if (src.size() != dst.size()) return;
  // candidate images per generator, in index order (gives lexicographically least first)
  std::vector<std::vector<long>> cand(n);
  std::vector<std::vector<long>> elems(dst.size());
  for (long idx = 0; idx < dst.size(); ++idx) elems[idx] = dst.element(idx);
  for (std::size_t i = 0; i < n; ++i) {
    long qi = src.qgen(i);
    long oi = src.order(i);
    for (long idx = 0; idx < dst.size(); ++idx) {
      const auto& h = elems[idx];
      if (dst.element_order(h) != oi) continue;
      if (bilinear_only ? (dst.q(h) % dst.scale() != qi % src.scale()) : (dst.q(h) != qi)) continue;
      cand[i].push_back(idx);
    }
    if (cand[i].empty()) return;
  }
  FormMap current(n);
  long nodes = 0;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == n) {
      if (!visit(current)) stop = true;
      return;
    }
    for (long idx : cand[i]) {
      if (++nodes > max_nodes) throw BudgetExceeded("isometry search exceeded its node budget");
      const auto& h = elems[idx];
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (dst.b(current[j], h) != src.bgen(j, i)) ok = false;
      if (!ok) continue;
      current[i] = h;
      rec(i + 1);
      if (stop) return;
    }
  };
  rec(0);
}

} // namespace detail

/// An explicit isometry a -> c (images of a's generators), if one exists.
/// Both forms must be nondegenerate.
/// With `bilinear_only`, only b (and hence q mod 1) must be preserved.
inline std::optional<FormMap> find_isometry(const FiniteQuadraticForm& a, const FiniteQuadraticForm& c,
                                            const Int& budget = 4096, bool bilinear_only = false) {
  if (a.group_order() != c.group_order()) return std::nullopt;
  if (a.group_order() > budget) throw BudgetExceeded("group too large for the explicit isometry search");
  Int E = lcm(a.exponent(), c.exponent());
  FormTables ta(a, E, budget), tc(c, E, budget);
  std::optional<FormMap> found;
  detail::search_isometries(ta, tc, [&](const FormMap& m) {
    found = m;
    return false;
  }, bilinear_only);
  return found;
}

/// Is the bilinear form nondegenerate (no nonzero x with b(x, A) = 0)?
inline bool is_nondegenerate(const FiniteQuadraticForm& f, const Int& budget = Int(1) << 20) {
  if (f.trivial()) return true;
  FormTables t(f, f.exponent(), budget);
  const std::size_t n = f.ngens();
  for (long idx = 1; idx < t.size(); ++idx) {
    auto x = t.element(idx);
    bool radical = true;
    for (std::size_t j = 0; j < n && radical; ++j) {
      long s = 0;
      for (std::size_t i = 0; i < n; ++i) s = FormTables::pmod(s + x[i] * t.bgen(i, j), t.scale());
      if (s != 0) radical = false;
    }
    if (radical) return false;
  }
  return true;
}

/// Apply a map given by generator images to a coefficient vector.
inline std::vector<long> apply_map(const FormTables& dst, const FormMap& m, const std::vector<long>& x) {
  std::vector<long> y(dst.ngens(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!x[i]) continue;
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += x[i] * m[i][k];
  }
  for (std::size_t k = 0; k < y.size(); ++k) y[k] = FormTables::pmod(y[k], dst.order(k));
  return y;
}

/// (f o g): first g, then f.
inline FormMap compose(const FormTables& t, const FormMap& f, const FormMap& g) {
  FormMap h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = apply_map(t, f, g[i]);
  return h;
}

inline FormMap identity_map(const FormTables& t) {
  FormMap id(t.ngens(), std::vector<long>(t.ngens(), 0));
  for (std::size_t i = 0; i < t.ngens(); ++i) id[i][i] = 1;
  return id;
}

struct FqfGroupReport {
  Int order;
  std::vector<FormMap> elements;  ///< all of O(q), identity first, then in search order
};

/// The full orthogonal group O(q) by backtracking over generator images.
inline FqfGroupReport oq_group(const FiniteQuadraticForm& f, const Int& budget = 10000) {
  if (f.trivial()) return FqfGroupReport{1, {FormMap{}}};
  if (f.group_order() > budget) throw BudgetExceeded("group order exceeds the O(q) budget");
  FormTables t(f, f.exponent(), budget);
  FqfGroupReport rep{0, {}};
  const long max_elems = 2'000'000;
  detail::search_isometries(t, t, [&](const FormMap& m) {
    rep.elements.push_back(m);
    if (static_cast<long>(rep.elements.size()) > max_elems) throw BudgetExceeded("O(q) has too many elements");
    return true;
  });
  rep.order = static_cast<long>(rep.elements.size());
  FormMap id = identity_map(t);
  auto it = std::find(rep.elements.begin(), rep.elements.end(), id);
  if (it == rep.elements.end()) throw InternalInconsistency("identity missing from O(q)");
  std::rotate(rep.elements.begin(), it, it + 1);
  return rep;
}

/// Subgroup of O(q) generated by the given maps, enumerated by closure.
inline std::vector<FormMap> generate_subgroup(const FormTables& t, const std::vector<FormMap>& gens,
                                              std::size_t limit = 2'000'000) {
  std::map<FormMap, bool> seen;
  std::vector<FormMap> out{identity_map(t)};
  seen[out[0]] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      FormMap h = compose(t, g, out[i]);
      if (seen.emplace(h, true).second) {
        out.push_back(h);
        if (out.size() > limit) throw BudgetExceeded("generated subgroup too large");
      }
    }
  return out;
}

/// Number of double cosets A \ O(q) / B for subgroups A, B of O(q) given by generators.
inline Int double_coset_count(const FiniteQuadraticForm& f, const std::vector<FormMap>& gens_a,
                              const std::vector<FormMap>& gens_b, const Int& budget = 10000) {
  if (f.trivial()) return 1;
  FqfGroupReport oq = oq_group(f, budget);
  FormTables t(f, f.exponent(), budget);
  std::map<FormMap, std::size_t> index;
  for (std::size_t i = 0; i < oq.elements.size(); ++i) index[oq.elements[i]] = i;
  auto check = [&](const std::vector<FormMap>& gens) {
    for (const auto& g : gens)
      if (!index.count(g)) throw InvalidInput("supplied generator is not an isometry of the form");
  };
  check(gens_a);
  check(gens_b);
  // inverses of the right-hand generators (g^{-1} = g^{ord-1})
  std::vector<FormMap> binv;
  for (const auto& g : gens_b) {
    FormMap prev = g, cur = g;
    FormMap id = identity_map(t);
    while (cur != id) {
      prev = cur;
      cur = compose(t, g, cur);
    }
    binv.push_back(prev);
  }
  std::vector<bool> visited(oq.elements.size(), false);
  Int count = 0;
  for (std::size_t s = 0; s < oq.elements.size(); ++s) {
    if (visited[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    visited[s] = true;
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      const FormMap& x = oq.elements[cur];
      auto push = [&](const FormMap& y) {
        std::size_t j = index.at(y);
        if (!visited[j]) {
          visited[j] = true;
          stack.push_back(j);
        }
      };
      for (const auto& a : gens_a) push(compose(t, a, x));
      for (const auto& bi : binv) push(compose(t, x, bi));
    }
  }
  return count;
}

} // namespace evenlat
