#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evenlat/lattice.hpp"
#include "evenlat/symbol.hpp"

namespace evenlat {

namespace detail {

/// 2-adic oddity of a unimodular block with an odd diagonal entry: pivot odd
/// diagonal entries to the front one at a time and clear their rows, then sum
/// the isolated odd diagonal entries mod 8.
inline int oddity_sweep(RatMatrix a) {
  const std::size_t na = a.rows();
  auto odd = [](const Rat& x) { return mod(Int(x.get_num()), Int(2)) != 0; };
  for (;;) {
    std::size_t t = 0;
    while (t < na && odd(a(t, t))) ++t;
    bool beta = false;
    for (std::size_t k = 0; k < t && !beta; ++k)
      for (std::size_t k1 = k + 1; k1 < na; ++k1)
        if (a(k, k1) != 0) {
          beta = true;
          break;
        }
    for (std::size_t k = t; k < na && !beta; ++k)
      if (odd(a(k, k))) beta = true;
    if (!beta) {
      long s = 0;
      for (std::size_t k = 0; k < t; ++k) s += rat_mod_pow2(a(k, k), 3);
      return mod8(s);
    }
    // leading odd entries that are already isolated
    std::size_t t1 = 0;
    while (t1 < na && odd(a(t1, t1))) {
      bool clear = true;
      for (std::size_t k1 = t1 + 1; k1 < na; ++k1)
        if (a(t1, k1) != 0) clear = false;
      if (!clear) break;
      ++t1;
    }
    std::size_t t2 = t1;
    while (t2 < na && !odd(a(t2, t2))) ++t2;
    if (t2 == na) throw InternalInconsistency("oddity sweep found no pivot");
    if (t2 != t1) {
      a.swap_rows(t1, t2);
      a.swap_cols(t1, t2);
    }
    for (std::size_t m = t1 + 1; m < na; ++m) {
      if (a(t1, m) == 0) continue;
      Rat f = -a(t1, m) / a(t1, t1);
      a.add_col(m, t1, f);
      a.add_row(m, t1, f);
    }
  }
}

} // namespace detail

/// Jordan constituents of L over Z_p, including the scale-1 part.
inline std::vector<JordanConstituent> jordan_decompose(const Lattice& l, const Int& p) {
  if (!is_prime(p)) throw InvalidInput("p must be prime");
  const std::size_t n = l.rank();
  SnfResult s = smith_normal_form(l.gram());
  IntMatrix lll = s.V.transpose() * l.gram() * s.V;
  std::vector<Int> u(n);
  std::vector<int> ex(n);
  for (std::size_t i = 0; i < n; ++i) {
    ex[i] = valuation(s.D(i, i), p);
    mpz_pow_ui(u[i].get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(ex[i]));
  }
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < n; ++i)
    if (i == 0 || u[i] != u[i - 1]) starts.push_back(i);
  std::vector<JordanConstituent> out;
  if (p != 2) {
    for (std::size_t b = 0; b < starts.size(); ++b) {
      std::size_t st = starts[b], en = b + 1 < starts.size() ? starts[b + 1] : n;
      IntMatrix cc(en - st, en - st);
      for (std::size_t i = st; i < en; ++i)
        for (std::size_t j = st; j < en; ++j) cc(i - st, j - st) = lll(i, j) / u[st];
      Int d = determinant(cc);
      out.push_back(JordanConstituent{p, ex[st], static_cast<int>(en - st), kronecker(d, p), false, 0});
    }
    return out;
  }
  RatMatrix llll = to_rational(lll);
  for (std::size_t b = 0; b < starts.size(); ++b) {
    std::size_t st = starts[b], en = b + 1 < starts.size() ? starts[b + 1] : n;
    std::size_t ss = en - st;
    RatMatrix cc1 = llll.block(st, st, ss, ss);
    RatMatrix a = cc1.scaled(Rat(1) / Rat(u[st]));
    bool odd = false;
    for (std::size_t k = 0; k < ss; ++k)
      if (mod(Int(a(k, k).get_num()), Int(2)) != 0) odd = true;
    long det8 = rat_mod_pow2(determinant(a), 3);
    JordanConstituent c{2, ex[st], static_cast<int>(ss), (det8 == 1 || det8 == 7) ? 1 : -1, odd, 0};
    if (odd) c.oddity = detail::oddity_sweep(a);
    out.push_back(c);
    if (en == n) break;
    // clear the coupling of this block to all later ones
    RatMatrix inv = inverse(cc1);
    RatMatrix c21 = llll.block(st, en, ss, n - en);
    RatMatrix x = inv * c21;
    RatMatrix ttt = RatMatrix::identity(n);
    for (std::size_t i = 0; i < ss; ++i)
      for (std::size_t j = 0; j < n - en; ++j) ttt(st + i, en + j) = -x(i, j);
    llll = ttt.transpose() * llll * ttt;
  }
  return out;
}

struct GenusSymbol {
  Inertia signature;
  std::vector<JordanConstituent> parts;  ///< every prime dividing 2 det, all scales

  std::size_t rank() const { return signature.plus + signature.minus; }

  /// Symbol of the discriminant form (scale-1 constituents dropped).
  FqfSymbol discriminant() const { return make_symbol(parts); }

  std::string to_string(bool signed_alias = false) const {
    return evenlat::to_string(discriminant(), signed_alias);
  }
};

inline GenusSymbol genus_symbol(const Lattice& l) {
  if (!l.is_even()) throw OddLattice("genus symbols are computed for even lattices");
  GenusSymbol g;
  g.signature = inertia(l.gram());
  auto primes = prime_divisors(2 * l.det());
  for (const auto& p : primes) {
    auto c = jordan_decompose(l, p);
    g.parts.insert(g.parts.end(), c.begin(), c.end());
  }
  return g;
}

/// Local-global canonical key: signature plus per-prime canonical symbols.
inline bool same_genus(const GenusSymbol& a, const GenusSymbol& b) {
  if (!(a.signature == b.signature)) return false;
  auto split = [](const GenusSymbol& g) {
    std::vector<JordanConstituent> two, rest;
    for (const auto& c : g.parts) (c.p == 2 ? two : rest).push_back(c);
    return std::make_pair(canonical_2adic(two), rest);
  };
  return split(a) == split(b);
}

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<FormMap> witness;  ///< present when the explicit search ran and succeeded
  bool cross_checked = false;
};

inline bool fqf_equivalent(const FqfSymbol& a, const FqfSymbol& b) {
  if (elementary_divisors(a) != elementary_divisors(b)) return false;
  return normalize_symbol(a) == normalize_symbol(b);
}

/// Decides isomorphism of explicit forms via normalized symbols; for groups of
/// order <= `oracle_limit` an explicit isometry search must agree.
inline EquivalenceResult fqf_equivalent_explicit(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b,
                                                 const Int& oracle_limit = 4096) {
  EquivalenceResult r;
  if (a.group_order() != b.group_order()) return r;
  r.equivalent = fqf_equivalent(fqf_symbol(a), fqf_symbol(b));
  if (a.group_order() <= oracle_limit) {
    auto w = find_isometry(a, b, oracle_limit);
    r.cross_checked = true;
    if (w.has_value() != r.equivalent)
      throw InternalInconsistency("symbol comparison and explicit isometry search disagree");
    r.witness = w;
  }
  return r;
}

inline bool fqf_equivalent(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
  return fqf_equivalent_explicit(a, b).equivalent;
}

/// Complement test for primitive embeddings into an even unimodular lattice of
/// the given signature: signatures add up, the ambient signature is admissible,
/// and q_K is isomorphic to -q_M.
inline bool embedding_compatible(const Inertia& sig_m, const FqfSymbol& q_m, const Inertia& sig_k, const FqfSymbol& q_k,
                                 std::size_t amb_plus, std::size_t amb_minus) {
  if (sig_m.zero || sig_k.zero) return false;
  if (sig_m.plus + sig_k.plus != amb_plus || sig_m.minus + sig_k.minus != amb_minus) return false;
  if (mod8(static_cast<long>(amb_plus) - static_cast<long>(amb_minus)) != 0) return false;
  return fqf_equivalent(q_k, fqf_negate(q_m));
}

inline bool embedding_compatible(const Lattice& m, const Lattice& k, std::size_t amb_plus, std::size_t amb_minus) {
  auto gm = genus_symbol(m), gk = genus_symbol(k);
  return embedding_compatible(gm.signature, gm.discriminant(), gk.signature, gk.discriminant(), amb_plus, amb_minus);
}

enum class UniquenessStatus { Holds, HypothesesFail };

/// Sufficient criterion for an even lattice with invariants (t+, t-, q) to be
/// unique in its genus.
inline UniquenessStatus unique_in_genus_status(std::size_t t_plus, std::size_t t_minus, const FqfSymbol& q) {
  const std::size_t r = t_plus + t_minus;
  if (t_plus < 1 || t_minus < 1 || r < 3) return UniquenessStatus::HypothesesFail;
  FqfSymbol s = make_symbol(q.parts);
  std::vector<Int> primes;
  for (const auto& c : s.parts)
    if (primes.empty() || primes.back() != c.p) primes.push_back(c.p);
  for (const auto& p : primes) {
    if (static_cast<long>(r) >= length_at(s, p) + 2) continue;
    bool split = false;
    for (std::size_t i = 0; i < s.parts.size(); ++i) {
      const auto& c = s.parts[i];
      if (c.p != p) continue;
      if (p != 2) {
        if (c.rank >= 2) split = true;
      } else {
        if (!c.odd && c.rank >= 2) split = true;
        if (c.odd && c.rank >= 3) split = true;
        if (c.odd && i + 1 < s.parts.size() && s.parts[i + 1].p == 2 && s.parts[i + 1].odd &&
            s.parts[i + 1].k == c.k + 1)
          split = true;
      }
    }
    if (!split) return UniquenessStatus::HypothesesFail;
  }
  return UniquenessStatus::Holds;
}

inline bool unique_in_genus(std::size_t t_plus, std::size_t t_minus, const FqfSymbol& q) {
  return unique_in_genus_status(t_plus, t_minus, q) == UniquenessStatus::Holds;
}

} // namespace evenlat
