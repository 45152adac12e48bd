// One pass/fail line per acceptance criterion; nonzero exit if any criterion fails.
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "evenlat/evenlat.hpp"
#include "oracles.hpp"
#include "relations.hpp"

using namespace evenlat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      failures.push_back(what);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void absorb(Outcome& o, const VerificationReport& r) {
  for (const auto& row : r.rows)
    if (row.status == RowStatus::Mismatch)
      o.require(false, row.key + ": expected " + row.expected.dump() + " computed " + row.computed.dump());
}

Outcome criterion1() {
  Outcome o;
  double worst = 0;
  for (const auto& row : table3_rows())
    for (const auto& g : row.grams) {
      auto t0 = std::chrono::steady_clock::now();
      (void)genus_symbol(Lattice(g));
      worst = std::max(worst, seconds_since(t0));
    }
  auto rep = check_table3_genus();
  absorb(o, rep);
  o.require(rep.rows.size() == 33, "expected 33 Gram matrices");
  o.require(worst < 1.0, "genus computation took over 1 s");
  std::ostringstream ss;
  ss << rep.count(RowStatus::Match) << "/" << rep.rows.size() << " Gram matrices reproduce q_T (explicit isometry each), slowest "
     << worst * 1000 << " ms";
  o.detail = ss.str();
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto rep = check_table1_duality();
  absorb(o, rep);
  o.detail = std::to_string(rep.count(RowStatus::Match)) + "/" + std::to_string(rep.rows.size()) +
             " shared (n, Deg) keys with normalize(-q_S) = normalize(q_T)";
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto rep = check_table4();
  absorb(o, rep);
  o.detail = std::to_string(rep.count(RowStatus::Match)) + "/" + std::to_string(rep.rows.size()) +
             " lattices match |O(T)|, |W(T)|, |O(q_T)|, M_s";
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto rep = check_niemeier();
  absorb(o, rep);
  o.require(rep.rows.size() == 23, "expected 23 lattices");
  o.detail = std::to_string(rep.count(RowStatus::Match)) + "/23 Niemeier lattices even, unimodular, rank 24, listed root system";
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto rep = check_n1_pipeline();
  absorb(o, rep);
  if (rep.count(RowStatus::Skipped)) {
    o.detail = "skipped: " + rep.rows.front().note;
    return o;
  }
  auto cases = n1_pipeline_cases();
  o.require(fqf_equivalent(cases[1].result.s_genus.discriminant(), parse_symbol("2_{II}^{-6},4_3^{-1}")),
            "2-orbit marking genus");
  o.require(fqf_equivalent(cases[0].result.s_genus.discriminant(), parse_symbol("2_7^{+9}")), "fixed marking genus");
  o.detail = "S_G 2_{II}^{+8}; fixed alpha " + canonical(cases[0].result.s_genus.discriminant()) + " / " +
             cases[0].result.complement_roots.to_string() + "; 2-orbit alpha " +
             canonical(cases[1].result.s_genus.discriminant()) + " / " + cases[1].result.complement_roots.to_string();
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> ent(-9, 9), rk(1, 6);
  int cases = 0;

  // Smith normal form contracts
  for (int t = 0; t < 60; ++t, ++cases) {
    std::size_t r = static_cast<std::size_t>(rk(rng)), c = static_cast<std::size_t>(rk(rng));
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = ent(rng);
    SnfResult s = smith_normal_form(m);
    bool ok = s.U * m * s.V == s.D && abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1 && s.U * s.U_inv == IntMatrix::identity(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j && s.D(i, j) != 0) ok = false;
    auto inv = s.invariants();
    for (std::size_t i = 0; i < inv.size(); ++i) {
      if (inv[i] <= 0) ok = false;
      if (i + 1 < inv.size() && inv[i + 1] % inv[i] != 0) ok = false;
    }
    ok = ok && s.rank == rank(m);
    o.require(ok, "SNF contract");
  }

  auto even_gram = [&](std::size_t n) {
    for (;;) {
      IntMatrix g(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = 2 * (ent(rng) / 2);
        for (std::size_t j = i + 1; j < n; ++j) g(i, j) = g(j, i) = ent(rng);
      }
      if (determinant(g) != 0) return g;
    }
  };

  // genus invariance under unimodular basis change
  for (int t = 0; t < 40; ++t, ++cases) {
    IntMatrix g = even_gram(static_cast<std::size_t>(rk(rng)));
    Lattice l(g);
    auto gs = genus_symbol(l);
    for (int k = 0; k < 4; ++k) {
      IntMatrix u = oracle::random_unimodular(rng, g.rows());
      auto gm = genus_symbol(Lattice(u.transpose() * g * u));
      o.require(same_genus(gs, gm) && normalize_symbol(gm.discriminant()) == normalize_symbol(gs.discriminant()),
                "genus changed under basis change");
    }
  }

  // signature mod 8: inertia vs Gauss sums vs symbol
  for (int t = 0; cases < 160; ++t) {
    IntMatrix g = even_gram(static_cast<std::size_t>(rk(rng)));
    if (abs(determinant(g)) > 20000) continue;
    ++cases;
    Lattice l(g);
    auto in = inertia(g);
    int expected = mod8(static_cast<long>(in.plus) - static_cast<long>(in.minus));
    o.require(oracle::gauss_signature(discriminant_form(l)) == expected, "Gauss sum signature");
    o.require(signature_mod8(genus_symbol(l).discriminant()) == expected, "symbol signature");
  }

  // additivity of q over direct sums
  for (int t = 0; t < 40; ++t, ++cases) {
    IntMatrix g1 = even_gram(static_cast<std::size_t>(1 + t % 3)), g2 = even_gram(static_cast<std::size_t>(1 + (t / 3) % 3));
    Lattice a(g1), b(g2);
    auto s = genus_symbol(direct_sum(a, b)).discriminant();
    o.require(fqf_equivalent(s, fqf_sum(genus_symbol(a).discriminant(), genus_symbol(b).discriminant())), "additivity (symbols)");
    auto fs = discriminant_form(direct_sum(a, b));
    if (fs.group_order() <= 4096)
      o.require(find_isometry(fs, fqf_sum(discriminant_form(a), discriminant_form(b)), 8192).has_value(), "additivity (isometry)");
  }

  // relations (a)-(k), smallest parameter choices
  int rel = 0;
  for (const auto& c : oracle::relation_cases(true)) {
    ++rel;
    ++cases;
    o.require(c.holds() == c.expected, "relation " + c.label);
  }
  o.require(cases >= 200, "fewer than 200 cases");
  o.detail = std::to_string(cases) + " cases (SNF 60, genus invariance 40, signature 60, additivity 40, relations " +
             std::to_string(rel) + ")";
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto t1 = table1_rows();
  const std::set<int> named{26, 32, 33, 55, 75};
  int checked = 0, named_checked = 0;
  for (const auto& row : table3_rows()) {
    auto it = std::find_if(t1.begin(), t1.end(), [&](const Degeneration& d) { return d.n == row.n && d.deg == row.deg; });
    if (it == t1.end()) continue;
    for (const auto& g : row.grams) {
      GenusSymbol gt = genus_symbol(Lattice(g));
      Inertia sig_s{0, static_cast<std::size_t>(it->rk_s), 0};
      bool ok = embedding_compatible(sig_s, parse_symbol(it->q_s), gt.signature, gt.discriminant(), 3, 19);
      o.require(ok, row_key(row.n, row.deg) + " not embedding-compatible");
      ++checked;
      named_checked += named.count(row.n) ? 1 : 0;
    }
  }
  bool obstructed = embedding_compatible(Lattice(IntMatrix{{-2}}), Lattice(IntMatrix{{-2}}), 3, 19);
  o.require(!obstructed, "<-2>, <-2> reported compatible");
  o.require(named_checked >= 12, "named pairs missing");
  o.detail = std::to_string(checked) + " (S, T) pairs compatible in (3,19) (" + std::to_string(named_checked) +
             " for n=26,32,33,55,75); <-2>,<-2> rejected";
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto rep = check_table1_uniqueness();
  absorb(o, rep);
  o.detail = std::to_string(rep.count(RowStatus::Match)) + "/" + std::to_string(rep.rows.size()) +
             " rows with rk S <= 18 satisfy the uniqueness criterion for (3, 19 - rk S, -q_S)";
  return o;
}

// Coordinate model of E_8: doubled coordinates, all even or all odd, sum divisible by 4.
std::size_t e8_coordinate_count(long norm) {
  std::size_t count = 0;
  for (int half = 0; half < 2; ++half) {
    std::vector<int> x(8, -4);
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
      while (k < 8 && ++x[static_cast<std::size_t>(k)] > 4) x[static_cast<std::size_t>(k++)] = -4;
      if (k == 8) break;
    }
  }
  return count;
}

Outcome criterion9() {
  Outcome o;
  IntMatrix e8{{-2, 1, 0, 0, 0, 0, 0, 0},  {1, -2, 1, 0, 0, 0, 0, 0}, {0, 1, -2, 1, 0, 0, 0, 1},
               {0, 0, 1, -2, 1, 0, 0, 0},  {0, 0, 0, 1, -2, 1, 0, 0}, {0, 0, 0, 0, 1, -2, 1, 0},
               {0, 0, 0, 0, 0, 1, -2, 0},  {0, 0, 1, 0, 0, 0, 0, -2}};
  Lattice l(e8);
  std::size_t r2 = count_vectors_of_norm(l, -2), r4 = count_vectors_of_norm(l, -4);
  o.require(r2 == 240 && r2 == e8_coordinate_count(2), "E_8 norm 2 count");
  o.require(r4 == 2160 && r4 == e8_coordinate_count(4), "E_8 norm 4 count");
  auto rep = check_table2_exceptional();
  absorb(o, rep);
  o.detail = "E_8 kernel " + std::to_string(r2) + "/" + std::to_string(r4) + "; exceptional columns: " +
             std::to_string(rep.count(RowStatus::Match)) + " verified, " + std::to_string(rep.count(RowStatus::Mismatch)) +
             " contradicted, " + std::to_string(rep.count(RowStatus::Skipped)) + " skipped";
  for (const auto& row : rep.rows)
    if (row.status == RowStatus::Skipped) o.detail += "\n    skipped " + row.key + ": " + row.note;
  return o;
}

} // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"table 3 genus reproduction", criterion1}, {"table 1 / table 3 duality", criterion2},
      {"table 4 reproduction", criterion3},       {"Niemeier suite", criterion4},
      {"n=1 end-to-end marking", criterion5},     {"property suite", criterion6},
      {"embedding compatibility", criterion7},    {"uniqueness sweep", criterion8},
      {"exceptional (-4) counts", criterion9}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds_since(t0);
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail
              << " (" << time.str() << " s)\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
