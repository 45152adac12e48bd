#pragma once

#include <functional>
#include <string>
#include <vector>

#include "evenlat/genus.hpp"

namespace oracle {

using namespace evenlat;

struct RelationCase {
  std::string label;
  bool expected;
  std::function<bool()> holds;
};

// Relations (a)-(k) between elementary forms, each decided by explicit isometry
// search (bilinear-only for (j)) or, for (k), by normalized symbols.  With
// `smallest` only the first parameter choice of each relation is produced.
inline std::vector<RelationCase> relation_cases(bool smallest) {
  auto qt = [](long p, int k, long th) { return q_theta(Int(p), k, Int(th)); };
  auto sum = [](std::initializer_list<FiniteQuadraticForm> fs) {
    FiniteQuadraticForm f = trivial_form();
    for (const auto& x : fs) f = direct_sum_raw(f, x);
    return normalize_generators(f);
  };
  auto iso = [](const FiniteQuadraticForm& x, const FiniteQuadraticForm& y) {
    auto r = fqf_equivalent_explicit(x, y);
    return r.equivalent && r.witness.has_value();
  };
  auto biso = [](const FiniteQuadraticForm& x, const FiniteQuadraticForm& y) {
    return find_isometry(x, y, 4096, true).has_value();
  };
  auto u = [](int k) { return uv_form(k, false); };
  auto v = [](int k) { return uv_form(k, true); };
  const std::vector<long> th4 = smallest ? std::vector<long>{1} : std::vector<long>{1, 3, 5, 7};
  const std::vector<int> ks = smallest ? std::vector<int>{1} : std::vector<int>{1, 2};

  std::vector<RelationCase> out;
  auto add = [&](std::string label, bool expected, std::function<bool()> f) { out.push_back({std::move(label), expected, std::move(f)}); };

  add("a", true, [=] { return iso(sum({qt(3, 1, 1), qt(3, 1, 1)}), sum({qt(3, 1, 2), qt(3, 1, 2)})); });
  if (!smallest) add("a: single summands differ", false, [=] { return iso(qt(3, 1, 1), qt(3, 1, 2)); });
  for (int k : ks) add("b k=" + std::to_string(k), true, [=] { return iso(sum({u(k), u(k)}), sum({v(k), v(k)})); });
  for (long a : smallest ? std::vector<long>{1} : std::vector<long>{1, 3})
    for (long b : th4)
      add("c " + std::to_string(a) + "," + std::to_string(b), true,
          [=] { return iso(sum({qt(2, 2, a), qt(2, 2, b)}), sum({qt(2, 2, 5 * a), qt(2, 2, 5 * b)})); });
  for (int k : ks)
    for (long th : th4)
      for (long tp : th4)
        add("d k=" + std::to_string(k) + " " + std::to_string(th) + "," + std::to_string(tp), true, [=] {
          auto lhs = sum({qt(2, k, th), qt(2, k, th), qt(2, k, tp)});
          auto rhs = (tp - th) % 4 == 0 ? sum({v(k), qt(2, k, -5 * tp)}) : sum({u(k), qt(2, k, -tp)});
          return iso(lhs, rhs);
        });
  for (long th : th4)
    add("e " + std::to_string(th), true, [=] { return iso(sum({v(1), qt(2, 2, th)}), sum({u(1), qt(2, 2, 5 * th)})); });
  for (long th : th4)
    add("f " + std::to_string(th), true, [=] { return iso(sum({qt(2, 1, th), v(2)}), sum({qt(2, 1, 5 * th), u(2)})); });
  for (long th : th4)
    for (long tp : th4)
      add("g " + std::to_string(th) + "," + std::to_string(tp), true, [=] {
        return iso(sum({qt(2, 1, th), qt(2, 2, tp)}), sum({qt(2, 1, th + 2 * tp), qt(2, 2, 5 * (tp - 2 * th))}));
      });
  for (long th : th4)
    for (long tp : th4)
      add("h " + std::to_string(th) + "," + std::to_string(tp), true,
          [=] { return iso(sum({qt(2, 1, th), qt(2, 3, tp)}), sum({qt(2, 1, 5 * th), qt(2, 3, 5 * tp)})); });
  for (long th : th4) add("i " + std::to_string(th), true, [=] { return iso(qt(2, 1, th), qt(2, 1, 5 * th)); });
  add("i: 1 vs 3 differ", false, [=] { return iso(qt(2, 1, 1), qt(2, 1, 3)); });
  for (long th : smallest ? std::vector<long>{3} : std::vector<long>{1, 3, 5, 7})
    add("j theta=" + std::to_string(th), true, [=] { return biso(qt(2, 1, 1), qt(2, 1, th)); });
  add("j u~v", true, [=] { return biso(u(1), v(1)); });
  if (!smallest)
    for (long th : th4) add("j 4: " + std::to_string(th), true, [=] { return biso(qt(2, 2, th), qt(2, 2, 5 * th)); });
  add("j 4: 1 vs 3 differ", false, [=] { return biso(qt(2, 2, 1), qt(2, 2, 3)); });

  auto sym = [](std::initializer_list<JordanConstituent> cs) { return normalize_symbol(make_symbol(cs)); };
  auto two = [](int k, int rank, int eps, int oddity) { return JordanConstituent{2, k, rank, eps, true, oddity}; };
  auto two2 = [](int k, int rank, int eps) { return JordanConstituent{2, k, rank, eps, false, 0}; };
  auto odd = [](long p, int k, int rank, int eps) { return JordanConstituent{Int(p), k, rank, eps, false, 0}; };
  std::vector<std::pair<FqfSymbol, FqfSymbol>> k_pairs = {
      {sym({odd(3, 1, 2, 1)}), sym({odd(3, 1, 1, -1), odd(3, 1, 1, -1)})},
      {sym({two2(1, 4, 1)}), sym({two2(1, 2, -1), two2(1, 2, -1)})},
      {sym({two(1, 3, 1, 3)}), sym({two2(1, 2, -1), two(1, 1, -1, 3)})},
      {sym({two2(1, 2, -1), two(2, 1, 1, 1)}), sym({two2(1, 2, 1), two(2, 1, -1, 5)})},
      {sym({two(1, 1, 1, 1), two2(2, 2, -1)}), sym({two(1, 1, -1, 5), two2(2, 2, 1)})},
      {sym({two(1, 1, 1, 1), two(3, 1, 1, 1)}), sym({two(1, 1, -1, 5), two(3, 1, -1, 5)})},
      {sym({two(1, 1, 1, 1)}), sym({two(1, 1, -1, 5)})}};
  for (std::size_t i = 0; i < (smallest ? 1 : k_pairs.size()); ++i) {
    auto pr = k_pairs[i];
    add("k #" + std::to_string(i + 1), true, [pr] { return pr.first == pr.second; });
  }
  return out;
}

} // namespace oracle
