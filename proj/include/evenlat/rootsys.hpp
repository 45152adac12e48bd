#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "evenlat/lattice.hpp"

namespace evenlat {

namespace detail {

/// Sign of a definite form: +1 positive, -1 negative; throws NotDefinite.
inline int definite_sign(const IntMatrix& g) {
  Inertia in = inertia(g);
  if (in.zero == 0 && in.minus == 0) return 1;
  if (in.zero == 0 && in.plus == 0) return -1;
  throw NotDefinite("lattice is not definite");
}

/// All nonzero x with x^T g x <= bound for positive definite g (one of each
/// pair +-x is not singled out; both are visited).  Exact rational
/// Fincke-Pohst on the Gram-Schmidt decomposition of g.
inline void enumerate_short(const IntMatrix& g, const Int& bound, const std::function<void(const IntVector&, const Int&)>& visit) {
  const std::size_t n = g.rows();
  if (n == 0 || bound <= 0) return;
  // g = R^T D R with R unit upper triangular: q(x) = sum_i d_i (x_i + sum_{j>i} r_ij x_j)^2
  RatMatrix a = to_rational(g);
  RatMatrix r(n, n);
  std::vector<Rat> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = a(i, i);
    if (d[i] <= 0) throw NotDefinite("form is not positive definite");
    r(i, i) = 1;
    for (std::size_t j = i + 1; j < n; ++j) r(i, j) = a(i, j) / d[i];
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        a(j, k) -= r(i, j) * d[i] * r(i, k);
        a(k, j) = a(j, k);
      }
  }
  IntVector x(n);
  std::vector<Rat> rem(n + 1);
  rem[n] = Rat(bound);
  // integer x with d (x + c)^2 <= t: bracket around -c and shrink exactly
  auto range = [](const Rat& di, const Rat& c, const Rat& t, Int& lo, Int& hi) {
    Rat rr = t / di;
    Int s = isqrt(floor_rat(rr));
    Int base = floor_rat(-c);
    auto ok = [&](const Int& v) {
      Rat z = Rat(v) + c;
      return z * z <= rr;
    };
    hi = base + s + 1;
    while (!ok(hi) && hi >= base - s - 1) --hi;
    lo = base - s - 1;
    while (!ok(lo) && lo <= base + s + 1) ++lo;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    std::size_t i = level - 1;
    Rat c = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[j] != 0) c += r(i, j) * Rat(x[j]);
    Int lo, hi;
    range(d[i], c, rem[level], lo, hi);
    for (Int v = lo; v <= hi; ++v) {
      x[i] = v;
      Rat z = Rat(v) + c;
      rem[i] = rem[level] - d[i] * z * z;
      if (i == 0) {
        bool nz = false;
        for (const auto& e : x)
          if (e != 0) nz = true;
        if (nz) visit(x, Int(bound - floor_rat(rem[0])));
      } else {
        rec(i);
      }
    }
    x[i] = 0;
  };
  rec(n);
}

} // namespace detail

/// All v with v^2 = n in a definite lattice, sorted lexicographically; empty if
/// n does not have the sign of the form (or n = 0).
inline std::vector<IntVector> vectors_of_norm(const Lattice& l, const Int& n) {
  int sg = detail::definite_sign(l.gram());
  if (n == 0 || (n > 0) != (sg > 0)) return {};
  IntMatrix g = sg > 0 ? l.gram() : IntMatrix(-l.gram());
  Int target = sg > 0 ? n : Int(-n);
  IntMatrix t = lll_transform(g);
  IntMatrix gr = t.transpose() * g * t;
  std::vector<IntVector> out;
  detail::enumerate_short(gr, target, [&](const IntVector& y, const Int&) {
    if (dot(y, gr, y) == target) out.push_back(t * y);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t count_vectors_of_norm(const Lattice& l, const Int& n) { return vectors_of_norm(l, n).size(); }

struct RootComponent {
  char type = 'A';  ///< 'A', 'D' or 'E'
  int rank = 1;

  std::size_t root_count() const {
    auto r = static_cast<std::size_t>(rank);
    switch (type) {
      case 'A': return r * (r + 1);
      case 'D': return 2 * r * (r - 1);
      default: return r == 6 ? 72 : r == 7 ? 126 : 240;
    }
  }
  Int weyl_order() const {
    Int f = 1;
    switch (type) {
      case 'A':
        for (int i = 2; i <= rank + 1; ++i) f *= i;
        return f;
      case 'D':
        for (int i = 2; i <= rank; ++i) f *= i;
        for (int i = 1; i < rank; ++i) f *= 2;
        return f;
      default: return rank == 6 ? Int(51840) : rank == 7 ? Int(2903040) : Int(696729600);
    }
  }
  auto key() const { return std::make_pair(type, rank); }
  friend bool operator==(const RootComponent& a, const RootComponent& b) { return a.key() == b.key(); }
  friend bool operator<(const RootComponent& a, const RootComponent& b) { return a.key() < b.key(); }
};

struct RootSystemType {
  std::vector<RootComponent> components;  ///< sorted: A by rank, then D, then E

  int rank() const {
    int r = 0;
    for (const auto& c : components) r += c.rank;
    return r;
  }
  std::size_t root_count() const {
    std::size_t r = 0;
    for (const auto& c : components) r += c.root_count();
    return r;
  }
  bool empty() const { return components.empty(); }
  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;

  /// e.g. "9A1+D6", "3E8"; the empty system prints "0".
  std::string to_string() const {
    if (components.empty()) return "0";
    std::string s;
    std::size_t i = 0;
    while (i < components.size()) {
      std::size_t j = i;
      while (j < components.size() && components[j] == components[i]) ++j;
      if (!s.empty()) s += "+";
      if (j - i > 1) s += std::to_string(j - i);
      s += components[i].type;
      s += std::to_string(components[i].rank);
      i = j;
    }
    return s;
  }
};

inline RootSystemType make_root_type(std::vector<RootComponent> c) {
  std::sort(c.begin(), c.end());
  return RootSystemType{std::move(c)};
}

/// Accepts "9A1+D6", "9A_1\oplus D_6", "9A_1 + D_6", "0".
inline RootSystemType parse_root_type(const std::string& text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 6, "\\oplus") == 0) {
      s += '+';
      i += 5;
    } else if (text[i] == '$' || text[i] == '_' || text[i] == ' ' || text[i] == '{' || text[i] == '}') {
      continue;
    } else {
      s += text[i];
    }
  }
  if (s == "0" || s.empty()) return {};
  static const std::regex term(R"((\d*)([ADE])(\d+))");
  std::vector<RootComponent> comps;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('+', start);
    if (end == std::string::npos) end = s.size();
    std::smatch m;
    std::string part = s.substr(start, end - start);
    if (!std::regex_match(part, m, term)) throw InvalidInput("bad root system term: " + part);
    int mult = m[1].str().empty() ? 1 : std::stoi(m[1].str());
    RootComponent c{m[2].str()[0], std::stoi(m[3].str())};
    if ((c.type == 'D' && c.rank < 4) || (c.type == 'E' && (c.rank < 6 || c.rank > 8)) || c.rank < 1)
      throw InvalidInput("no root system " + part);
    for (int k = 0; k < mult; ++k) comps.push_back(c);
    start = end + 1;
  }
  return make_root_type(comps);
}

inline Int weyl_order(const RootSystemType& t) {
  Int w = 1;
  for (const auto& c : t.components) w *= c.weyl_order();
  return w;
}

struct RootSystem {
  RootSystemType type;
  std::vector<IntVector> roots;  ///< all roots, lexicographic order
  IntMatrix simple;              ///< simple roots as columns, grouped by component
  std::vector<RootComponent> component_of_simple;  ///< component type for each simple root
};

namespace detail {

inline bool lex_positive(const IntVector& v) {
  for (const auto& e : v)
    if (e != 0) return e > 0;
  return false;
}

/// ADE type of a connected simply laced Dynkin graph.
inline RootComponent classify_component(const std::vector<std::vector<std::size_t>>& adj, const std::vector<std::size_t>& nodes) {
  const int n = static_cast<int>(nodes.size());
  std::size_t branch = SIZE_MAX;
  std::size_t edges = 0;
  for (auto v : nodes) {
    edges += adj[v].size();
    if (adj[v].size() > 3) throw InternalInconsistency("Dynkin node of degree > 3");
    if (adj[v].size() == 3) {
      if (branch != SIZE_MAX) throw InternalInconsistency("Dynkin graph with two branch nodes");
      branch = v;
    }
  }
  if (edges / 2 != nodes.size() - 1) throw InternalInconsistency("Dynkin graph is not a tree");
  if (branch == SIZE_MAX) return {'A', n};
  std::vector<int> arms;
  for (auto start : adj[branch]) {
    int len = 1;
    std::size_t prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      std::size_t nx = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nx;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', n};
  throw InternalInconsistency("Dynkin graph is not of ADE type");
}

} // namespace detail

/// Roots (norm -2 for negative definite, +2 for positive definite), a simple
/// system for the lexicographic positive cone, and the ADE type.
inline RootSystem root_system(const Lattice& l) {
  int sg = detail::definite_sign(l.gram());
  RootSystem rs;
  rs.roots = vectors_of_norm(l, Int(2 * sg));
  std::set<IntVector> pos;
  for (const auto& r : rs.roots)
    if (detail::lex_positive(r)) pos.insert(r);
  std::vector<IntVector> simple;
  for (const auto& r : pos) {
    bool decomposable = false;
    for (const auto& s : pos) {
      IntVector diff(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) diff[i] = r[i] - s[i];
      if (pos.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }
  const std::size_t m = simple.size();
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Int ip = l.inner(simple[i], simple[j]) * sg;
      if (ip == -1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      } else if (ip != 0) {
        throw InternalInconsistency("simple roots with inner product other than 0, -1");
      }
    }
  std::vector<int> comp(m, -1);
  std::vector<std::pair<RootComponent, std::vector<std::size_t>>> comps;
  for (std::size_t s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> nodes{s}, stack{s};
    comp[s] = static_cast<int>(comps.size());
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v])
        if (comp[w] < 0) {
          comp[w] = comp[s];
          nodes.push_back(w);
          stack.push_back(w);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    comps.push_back({detail::classify_component(adj, nodes), nodes});
  }
  std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<RootComponent> types;
  rs.simple = IntMatrix(l.rank(), m);
  std::size_t col = 0;
  for (const auto& [t, nodes] : comps) {
    types.push_back(t);
    for (auto v : nodes) {
      rs.simple.set_column(col++, simple[v]);
      rs.component_of_simple.push_back(t);
    }
  }
  rs.type = make_root_type(types);
  if (rs.type.root_count() != rs.roots.size())
    throw InternalInconsistency("root count does not match the classified root system");
  return rs;
}

} // namespace evenlat
