#pragma once

// Conway-Sloane style symbols of finite quadratic forms and p-adic lattices.

#include <algorithm>
#include <cctype>
#include <string>
#include <tuple>
#include <vector>

#include "evenlat/fqf.hpp"

namespace evenlat {

/// One Jordan constituent (p^k)^{eps*rank}, with type and oddity for p = 2.
struct JordanConstituent {
  Int p = 2;
  int k = 0;        ///< scale exponent
  int rank = 0;
  int eps = 1;      ///< +1 / -1
  bool odd = false; ///< type I (p = 2 only)
  int oddity = 0;   ///< mod 8, type I only

  Int scale() const {
    Int s;
    mpz_pow_ui(s.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
    return s;
  }

  auto key() const { return std::make_tuple(p, k, rank, eps, odd, oddity); }
  friend bool operator==(const JordanConstituent& a, const JordanConstituent& b) { return a.key() == b.key(); }
  friend bool operator<(const JordanConstituent& a, const JordanConstituent& b) { return a.key() < b.key(); }
};

/// Symbol of a finite quadratic form: constituents of scale p^k with k >= 1,
/// sorted by (p, k), at most one per scale.
struct FqfSymbol {
  std::vector<JordanConstituent> parts;
  bool nonstandard = false;  ///< parsed from a "_I" subscript

  bool trivial() const { return parts.empty(); }
  friend bool operator==(const FqfSymbol& a, const FqfSymbol& b) { return a.parts == b.parts; }
};

inline int mod8(long v) { return static_cast<int>(((v % 8) + 8) % 8); }

/// x mod 2^e for a rational with odd denominator.
inline long rat_mod_pow2(const Rat& x, unsigned e) {
  Int m = Int(1) << e;
  Int den = x.get_den();
  if (mod(den, Int(2)) == 0) throw InternalInconsistency("2-adic value with even denominator");
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) throw InternalInconsistency("no inverse mod 2^e");
  return mod(Int(x.get_num()) * inv, m).get_si();
}

inline bool eps_valid(int rank, int eps, bool odd, int oddity) {
  if (rank <= 0) return false;
  if (!odd) return rank % 2 == 0 && oddity == 0;
  int t = mod8(oddity);
  if (rank == 1) return eps == 1 ? (t == 1 || t == 7) : (t == 3 || t == 5);
  if (rank == 2) return eps == 1 ? (t == 0 || t == 2 || t == 6) : (t == 2 || t == 4 || t == 6);
  return t % 2 == rank % 2;
}

/// Combine constituents of equal (p, k) and sort.
inline std::vector<JordanConstituent> merge_constituents(std::vector<JordanConstituent> v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return std::tie(a.p, a.k) < std::tie(b.p, b.k); });
  std::vector<JordanConstituent> out;
  for (auto& c : v) {
    if (c.rank == 0) continue;
    if (!out.empty() && out.back().p == c.p && out.back().k == c.k) {
      auto& o = out.back();
      o.rank += c.rank;
      o.eps *= c.eps;
      o.odd = o.odd || c.odd;
      o.oddity = mod8(o.oddity + c.oddity);
    } else {
      out.push_back(c);
    }
  }
  return out;
}

inline FqfSymbol make_symbol(std::vector<JordanConstituent> parts) {
  FqfSymbol s;
  for (auto& c : parts)
    if (c.k > 0) s.parts.push_back(c);
  s.parts = merge_constituents(std::move(s.parts));
  return s;
}

// ---------------------------------------------------------------------------
// text

namespace detail {

inline std::string subscript_text(int oddity, bool signed_alias) {
  int t = mod8(oddity);
  if (signed_alias && t >= 5) t -= 8;
  std::string s = std::to_string(t);
  return s.size() == 1 ? "_" + s : "_{" + s + "}";
}

} // namespace detail

inline std::string to_string(const JordanConstituent& c, bool signed_alias = false) {
  std::string s = c.scale().get_str();
  if (c.p == 2) s += c.odd ? detail::subscript_text(c.oddity, signed_alias) : "_{II}";
  s += "^{";
  s += (c.eps > 0 ? "+" : "-");
  s += std::to_string(c.rank) + "}";
  return s;
}

/// Comma-separated constituents, primes ascending then scales ascending; "1"
/// for the trivial form.
inline std::string to_string(const FqfSymbol& s, bool signed_alias = false) {
  if (s.parts.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    if (i) out += ",";
    out += to_string(s.parts[i], signed_alias);
  }
  return out;
}

namespace detail {

inline bool prime_power(const Int& q, Int& p, int& k) {
  if (q < 2) return false;
  auto ps = prime_divisors(q);
  if (ps.size() != 1) return false;
  p = ps[0];
  k = valuation(q, p);
  return true;
}

} // namespace detail

/// Parses text such as "2_{II}^{-6},4_3^{-1}", "2_{-1}^{+1}", "3^{+6}", "3^1" or "1".
inline FqfSymbol parse_symbol(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  FqfSymbol out;
  if (t.empty() || t == "1") return out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> void {
    throw InvalidInput("bad symbol '" + text + "' at position " + std::to_string(pos) + ": " + why);
  };
  auto read_group = [&]() {
    std::string g;
    if (pos < t.size() && t[pos] == '{') {
      std::size_t close = t.find('}', pos);
      if (close == std::string::npos) fail("unclosed brace");
      g = t.substr(pos + 1, close - pos - 1);
      pos = close + 1;
    } else {
      while (pos < t.size() && t[pos] != ',' && t[pos] != '^' && t[pos] != '_') g += t[pos++];
    }
    return g;
  };
  std::vector<JordanConstituent> parts;
  while (pos < t.size()) {
    std::string num;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) num += t[pos++];
    if (num.empty()) fail("expected a prime power");
    JordanConstituent c;
    if (!detail::prime_power(Int(num), c.p, c.k)) fail("scale is not a prime power");
    std::string sub;
    bool has_sub = false;
    if (pos < t.size() && t[pos] == '_') {
      ++pos;
      sub = read_group();
      has_sub = true;
    }
    if (pos >= t.size() || t[pos] != '^') fail("expected '^'");
    ++pos;
    std::string ex = read_group();
    if (ex.empty()) fail("empty exponent");
    c.eps = 1;
    if (ex[0] == '+' || ex[0] == '-') {
      c.eps = ex[0] == '-' ? -1 : 1;
      ex = ex.substr(1);
    }
    if (ex.empty() || !std::all_of(ex.begin(), ex.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      fail("exponent must be a signed rank");
    c.rank = std::stoi(ex);
    if (c.p == 2) {
      if (!has_sub) fail("2-adic constituent needs a subscript");
      if (sub == "II") {
        c.odd = false;
      } else if (sub == "I") {
        c.odd = true;
        c.oddity = 1;
        out.nonstandard = true;
      } else {
        try {
          std::size_t used = 0;
          int v = std::stoi(sub, &used);
          if (used != sub.size()) fail("bad oddity");
          c.odd = true;
          c.oddity = mod8(v);
        } catch (const std::logic_error&) {
          fail("bad oddity");
        }
      }
    } else if (has_sub) {
      fail("odd primes take no subscript");
    }
    if (c.p == 2 && !eps_valid(c.rank, c.eps, c.odd, c.oddity)) fail("no 2-adic form has these invariants");
    if (c.rank <= 0) fail("rank must be positive");
    parts.push_back(c);
    if (pos < t.size()) {
      if (t[pos] != ',') fail("expected ','");
      ++pos;
    }
  }
  bool flag = out.nonstandard;
  out = make_symbol(parts);
  out.nonstandard = flag;
  return out;
}

// ---------------------------------------------------------------------------
// invariants

inline int signature_mod8(const JordanConstituent& c) {
  if (c.k == 0) return 0;
  long k = c.k;
  if (c.p == 2) return mod8((c.odd ? c.oddity : 0) + (c.eps < 0 ? 4 * k : 0));
  long p8 = mod(c.p, Int(8)).get_si();
  return mod8(c.rank * k * k * (1 - p8) + (c.eps < 0 ? 4 * k : 0));
}

inline int signature_mod8(const FqfSymbol& s) {
  int t = 0;
  for (const auto& c : s.parts) t = mod8(t + signature_mod8(c));
  return t;
}

inline FqfSymbol fqf_negate(const FqfSymbol& s) {
  FqfSymbol out = s;
  for (auto& c : out.parts) {
    if (c.p == 2) {
      c.oddity = mod8(-c.oddity);
    } else if (c.rank % 2 == 1) {
      c.eps *= kronecker(Int(-1), c.p);
    }
  }
  return out;
}

inline FqfSymbol fqf_sum(const FqfSymbol& a, const FqfSymbol& b) {
  std::vector<JordanConstituent> v = a.parts;
  v.insert(v.end(), b.parts.begin(), b.parts.end());
  FqfSymbol s = make_symbol(v);
  s.nonstandard = a.nonstandard || b.nonstandard;
  return s;
}

/// Elementary divisors p^k (with multiplicity), ascending.
inline std::vector<Int> elementary_divisors(const FqfSymbol& s) {
  std::vector<Int> out;
  for (const auto& c : s.parts)
    for (int i = 0; i < c.rank; ++i) out.push_back(c.scale());
  std::sort(out.begin(), out.end());
  return out;
}

inline Int group_order(const FqfSymbol& s) {
  Int n = 1;
  for (const auto& c : s.parts) {
    Int sc = c.scale();
    for (int i = 0; i < c.rank; ++i) n *= sc;
  }
  return n;
}

/// Number of cyclic factors of the p-part.
inline int length_at(const FqfSymbol& s, const Int& p) {
  int l = 0;
  for (const auto& c : s.parts)
    if (c.p == p) l += c.rank;
  return l;
}

// ---------------------------------------------------------------------------
// 2-adic canonical form

namespace detail {

inline std::vector<std::vector<std::size_t>> compartments(const std::vector<JordanConstituent>& s) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!s[i].odd) {
      ++i;
      continue;
    }
    std::vector<std::size_t> c{i};
    ++i;
    while (i < s.size() && s[i].odd && s[i].k == s[i - 1].k + 1) c.push_back(i++);
    out.push_back(c);
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> trains(const std::vector<JordanConstituent>& s) {
  std::vector<std::vector<std::size_t>> out;
  if (s.empty()) return out;
  std::vector<std::size_t> cur{0};
  for (std::size_t i = 1; i < s.size(); ++i) {
    const auto& prev = s[i - 1];
    const auto& c = s[i];
    int gap = c.k - prev.k;
    bool brk = gap > 2 || (gap == 2 && !(prev.odd && c.odd)) || (!prev.odd && !c.odd);
    if (brk) {
      out.push_back(cur);
      cur = {i};
    } else {
      cur.push_back(i);
    }
  }
  out.push_back(cur);
  return out;
}

} // namespace detail

/// Canonical 2-adic symbol (oddity fusion on compartments, sign walking within
/// trains).  Input: all 2-adic constituents including scale 1, sorted by scale.
/// Output keeps per-compartment total oddity on the first member.
inline std::vector<JordanConstituent> canonical_2adic(std::vector<JordanConstituent> s) {
  auto comps = detail::compartments(s);
  for (const auto& comp : comps) {
    int tot = 0;
    for (auto i : comp) {
      tot += s[i].oddity;
      s[i].oddity = 0;
    }
    s[comp[0]].oddity = mod8(tot);
  }
  auto trs = detail::trains(s);
  for (const auto& tr : trs) {
    for (std::size_t j = tr.size(); j-- > 1;) {
      std::size_t t1 = tr[j];
      if (s[t1].eps == -1) {
        s[t1].eps = 1;
        s[t1 - 1].eps = -s[t1 - 1].eps;
        for (const auto& comp : comps) {
          bool hit = std::find(comp.begin(), comp.end(), t1 - 1) != comp.end() ||
                     std::find(comp.begin(), comp.end(), t1) != comp.end();
          if (hit) s[comp[0]].oddity = mod8(s[comp[0]].oddity + 4);
        }
      }
    }
  }
  return s;
}

namespace detail {

/// Spread each compartment's total oddity over its members: lexicographically
/// least valid per-constituent assignment.  Returns false if there is none.
inline bool redistribute_oddities(std::vector<JordanConstituent>& s) {
  for (const auto& comp : compartments(s)) {
    int total = s[comp[0]].oddity;
    std::vector<int> assign(comp.size(), 0);
    std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int sum) -> bool {
      if (i == comp.size()) return mod8(sum) == total;
      const auto& c = s[comp[i]];
      for (int t = 0; t < 8; ++t) {
        if (!eps_valid(c.rank, c.eps, true, t)) continue;
        assign[i] = t;
        if (rec(i + 1, sum + t)) return true;
      }
      return false;
    };
    if (!rec(0, 0)) return false;
    for (std::size_t i = 0; i < comp.size(); ++i) s[comp[i]].oddity = assign[i];
  }
  return true;
}

inline bool lex_less(const std::vector<JordanConstituent>& a, const std::vector<JordanConstituent>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
    return std::make_tuple(x.k, x.rank, x.eps, x.odd, x.oddity) < std::make_tuple(y.k, y.rank, y.eps, y.odd, y.oddity);
  });
}

/// Class invariant of a 2-primary form: canonical 2-adic symbol of the form
/// plus a scale-1 plane, minimized over the two choices of plane.
inline std::vector<JordanConstituent> two_adic_key(const std::vector<JordanConstituent>& two) {
  std::vector<JordanConstituent> best;
  for (int e0 : {-1, 1}) {
    std::vector<JordanConstituent> full;
    full.push_back(JordanConstituent{2, 0, 2, e0, false, 0});
    full.insert(full.end(), two.begin(), two.end());
    auto canon = canonical_2adic(full);
    if (best.empty() || lex_less(canon, best)) best = canon;
  }
  return best;
}

/// Lexicographically least realizable symbol with the given key and the same
/// scales, ranks and types.  Used when the canonical signs admit no valid
/// oddity distribution.
inline std::vector<JordanConstituent> least_realizable(const std::vector<JordanConstituent>& shape,
                                                       const std::vector<JordanConstituent>& key) {
  std::vector<JordanConstituent> cur = shape, best;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cur.size()) {
      if (two_adic_key(cur) == key && (best.empty() || lex_less(cur, best))) best = cur;
      return;
    }
    for (int e : {-1, 1}) {
      cur[i].eps = e;
      if (!cur[i].odd) {
        cur[i].oddity = 0;
        rec(i + 1);
        continue;
      }
      for (int t = 0; t < 8; ++t)
        if (eps_valid(cur[i].rank, e, true, t)) {
          cur[i].oddity = t;
          rec(i + 1);
        }
    }
  };
  rec(0);
  if (best.empty()) throw InternalInconsistency("no realizable symbol for a canonical 2-adic key");
  return best;
}

} // namespace detail

/// Canonical representative of the isomorphism class of a finite quadratic
/// form given by its symbol.  Two symbols describe isomorphic forms iff their
/// normalizations are equal.
inline FqfSymbol normalize_symbol(const FqfSymbol& s) {
  FqfSymbol in = make_symbol(s.parts);
  std::vector<JordanConstituent> two, rest;
  for (const auto& c : in.parts) (c.p == 2 ? two : rest).push_back(c);
  FqfSymbol out;
  out.nonstandard = s.nonstandard;
  if (!two.empty()) {
    auto key = detail::two_adic_key(two);
    std::vector<JordanConstituent> rep(key.begin() + 1, key.end());
    if (!detail::redistribute_oddities(rep)) rep = detail::least_realizable(two, key);
    out.parts = rep;
  }
  out.parts.insert(out.parts.end(), rest.begin(), rest.end());
  return out;
}

// ---------------------------------------------------------------------------
// explicit forms

/// Least positive quadratic nonresidue mod an odd prime.
inline Int nonresidue(const Int& p) {
  for (Int n = 2;; ++n)
    if (kronecker(n, p) == -1) return n;
}

/// Cyclic form q_theta^{(p)}(p^k).
inline FiniteQuadraticForm q_theta(const Int& p, int k, const Int& theta) {
  JordanConstituent c{p, k, 1};
  Int pk = c.scale();
  Int num = theta;
  if (p != 2 && mod(num, Int(2)) != 0) num += pk;
  return cyclic_form(pk, Rat(num, pk));
}

/// u(2^k) (hyperbolic) or v(2^k).
inline FiniteQuadraticForm uv_form(int k, bool v) {
  Int pk = Int(1) << k;
  FiniteQuadraticForm f{{pk, pk}, {0, 0}, RatMatrix(2, 2)};
  f.b(0, 1) = f.b(1, 0) = mod_rat(Rat(1, 1) / Rat(pk), Rat(1));
  if (v) {
    f.q[0] = f.q[1] = mod_rat(Rat(2) / Rat(pk), Rat(2));
    f.b(0, 0) = f.b(1, 1) = mod_rat(Rat(2) / Rat(pk), Rat(1));
  }
  return f;
}

/// Thetas in {1,3,5,7} realizing a type I constituent.
inline std::vector<int> type1_thetas(int rank, int eps, int oddity) {
  // multiset counts of 1, 3, 5, 7
  for (int n1 = rank; n1 >= 0; --n1)
    for (int n7 = rank - n1; n7 >= 0; --n7)
      for (int n3 = rank - n1 - n7; n3 >= 0; --n3) {
        int n5 = rank - n1 - n7 - n3;
        if (mod8(n1 + 3 * n3 + 5 * n5 + 7 * n7) != mod8(oddity)) continue;
        int e = ((n3 + n5) % 2 == 0) ? 1 : -1;
        if (e != eps) continue;
        std::vector<int> out;
        out.insert(out.end(), n1, 1);
        out.insert(out.end(), n3, 3);
        out.insert(out.end(), n5, 5);
        out.insert(out.end(), n7, 7);
        return out;
      }
  throw InvalidInput("no type I 2-adic form with these invariants");
}

/// An explicit finite quadratic form with the given symbol.
inline FiniteQuadraticForm materialize(const FqfSymbol& s) {
  FiniteQuadraticForm f = trivial_form();
  for (const auto& c : s.parts) {
    if (c.p == 2) {
      if (c.odd) {
        for (int th : type1_thetas(c.rank, c.eps, c.oddity)) f = direct_sum_raw(f, q_theta(2, c.k, th));
      } else {
        if (c.rank % 2) throw InvalidInput("type II constituent of odd rank");
        for (int i = 0; i + 2 < c.rank; i += 2) f = direct_sum_raw(f, uv_form(c.k, false));
        f = direct_sum_raw(f, uv_form(c.k, c.eps < 0));
      }
    } else {
      for (int i = 0; i + 1 < c.rank; ++i) f = direct_sum_raw(f, q_theta(c.p, c.k, 1));
      f = direct_sum_raw(f, q_theta(c.p, c.k, c.eps > 0 ? Int(1) : nonresidue(c.p)));
    }
  }
  return normalize_generators(f);
}

namespace detail {

/// 2-adic / p-adic Jordan splitting of a p-primary form.
inline std::vector<JordanConstituent> split_p_part(FiniteQuadraticForm h, const Int& p) {
  std::vector<JordanConstituent> atoms;
  while (!h.trivial()) {
    const std::size_t n = h.ngens();
    Int pk = h.orders.back();
    int k = valuation(pk, p);
    std::vector<std::size_t> top;
    for (std::size_t i = 0; i < n; ++i)
      if (h.orders[i] == pk) top.push_back(i);
    // cyclic summand: an element x of order p^k with p^k b(x,x) a unit
    std::optional<IntVector> x;
    auto full = [&](const IntVector& y) {
      Rat v = h.value(y) * Rat(pk);
      if (v.get_den() != 1) throw InternalInconsistency("q value finer than the exponent");
      return mod(Int(v.get_num()), p) != 0;
    };
    for (auto i : top)
      if (!x && full(h.unit(i))) x = h.unit(i);
    if (!x && p != 2)
      for (std::size_t a = 0; a < top.size() && !x; ++a)
        for (std::size_t c = a + 1; c < top.size() && !x; ++c) {
          IntVector y = h.unit(top[a]);
          y[top[c]] = 1;
          if (full(y)) x = y;
        }
    std::vector<IntVector> rest;
    if (x) {
      Rat qx = h.value(*x);
      Int c = as_int(qx * Rat(pk));
      JordanConstituent atom{p, k, 1, 1, false, 0};
      if (p == 2) {
        atom.odd = true;
        atom.oddity = mod8(mod(c, Int(8)).get_si());
        atom.eps = (atom.oddity == 1 || atom.oddity == 7) ? 1 : -1;
      } else {
        atom.eps = kronecker(c, p);
      }
      atoms.push_back(atom);
      Int bxx = as_int(h.bilinear(*x, *x) * Rat(pk));
      Int inv;
      mpz_invert(inv.get_mpz_t(), bxx.get_mpz_t(), pk.get_mpz_t());
      for (std::size_t i = 0; i < n; ++i) {
        IntVector y = h.unit(i);
        Int byx = as_int(h.bilinear(y, *x) * Rat(pk));
        Int alpha = mod(byx * inv, pk);
        for (std::size_t t = 0; t < n; ++t) y[t] -= alpha * (*x)[t];
        rest.push_back(h.reduce(y));
      }
    } else {
      if (p != 2) throw InternalInconsistency("degenerate odd-primary form");
      std::optional<std::pair<std::size_t, std::size_t>> pair;
      for (std::size_t a = 0; a < top.size() && !pair; ++a)
        for (std::size_t c = 0; c < top.size() && !pair; ++c) {
          if (a == c) continue;
          Rat v = h.b(top[a], top[c]) * Rat(pk);
          if (mod(Int(v.get_num()), Int(2)) != 0) pair = std::make_pair(top[a], top[c]);
        }
      if (!pair) throw InternalInconsistency("degenerate 2-primary form");
      IntVector ex = h.unit(pair->first), ey = h.unit(pair->second);
      Int m00 = as_int(h.b(pair->first, pair->first) * Rat(pk));
      Int m01 = as_int(h.b(pair->first, pair->second) * Rat(pk));
      Int m11 = as_int(h.b(pair->second, pair->second) * Rat(pk));
      Int qa = as_int(h.q[pair->first] * Rat(pk));
      Int qd = as_int(h.q[pair->second] * Rat(pk));
      bool is_v = mod(qa / 2, Int(2)) != 0 && mod(qd / 2, Int(2)) != 0;
      atoms.push_back(JordanConstituent{2, k, 2, is_v ? -1 : 1, false, 0});
      Int det = mod(m00 * m11 - m01 * m01, pk);
      Int dinv;
      mpz_invert(dinv.get_mpz_t(), det.get_mpz_t(), pk.get_mpz_t());
      for (std::size_t i = 0; i < n; ++i) {
        IntVector z = h.unit(i);
        Int r0 = as_int(h.b(i, pair->first) * Rat(pk));
        Int r1 = as_int(h.b(i, pair->second) * Rat(pk));
        Int alpha = mod(dinv * (m11 * r0 - m01 * r1), pk);
        Int beta = mod(dinv * (m00 * r1 - m01 * r0), pk);
        for (std::size_t t = 0; t < n; ++t) z[t] -= alpha * ex[t] + beta * ey[t];
        rest.push_back(h.reduce(z));
      }
    }
    Int before = h.group_order();
    h = subgroup(h, rest).form;
    Int split = x ? pk : pk * pk;
    if (h.group_order() * split != before) throw InternalInconsistency("Jordan splitting lost elements");
  }
  return atoms;
}

} // namespace detail

/// Symbol of an explicit nondegenerate finite quadratic form.
inline FqfSymbol fqf_symbol(const FiniteQuadraticForm& f) {
  std::vector<JordanConstituent> atoms;
  for (const auto& p : prime_divisors(f.group_order())) {
    auto part = p_part(f, p).form;
    auto a = detail::split_p_part(part, p);
    atoms.insert(atoms.end(), a.begin(), a.end());
  }
  return make_symbol(atoms);
}

inline int signature_mod8(const FiniteQuadraticForm& f) { return signature_mod8(fqf_symbol(f)); }

} // namespace evenlat
