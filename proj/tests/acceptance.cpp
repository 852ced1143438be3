// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Exercises the library end to end over the exhaustive small corpus.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gmon/corpus.hpp"
#include "gmon/series.hpp"

using namespace gmon;

namespace {

int g_failures = 0;
std::string g_detail;

void fail(const std::string& what) {
  ++g_failures;
  if (g_detail.empty()) g_detail = what;
}

void expect(bool cond, const std::string& what) {
  if (!cond) fail(what);
}

// All monoids of size <= max_n with every action from a cyclic subgroup of
// the automorphism group (including the trivial one).
std::vector<GammaStructure> corpus(int max_n, bool refinement_only) {
  std::vector<GammaStructure> out;
  for (int n = 1; n <= max_n; ++n)
    for (const Monoid& m : enumerate_monoids(n)) {
      if (refinement_only && !is_refinement(m).ok) continue;
      for (GammaStructure& gs :
           attach_actions(m, ActionSource::AllCyclicSubgroups))
        out.push_back(std::move(gs));
    }
  return out;
}

std::string inst_label(const GammaStructure& gs) {
  std::string out = "n=" + std::to_string(gs.n()) + " m=" +
                    std::to_string(gs.m()) + " table=";
  for (int v : gs.monoid.table) out += std::to_string(v) + ".";
  return out;
}

// ---------------------------------------------------------------------------

void criterion1() {
  auto start = std::chrono::steady_clock::now();
  GammaStructure gs = builtin("paper-T7");

  auto ref = is_refinement(gs.monoid);
  expect(!ref.ok && ref.witness == std::vector<int>{1, 1, 2, 2},
         "refinement witness is not (1,1,x,x)");

  IdealLattice lat = all_order_ideals(gs);
  std::set<Mask> got(lat.ideals.begin(), lat.ideals.end());
  std::set<Mask> want{mask_of({0}), mask_of({0, 1, 2}), mask_of({0, 3, 4}),
                      full_mask(7)};
  expect(got == want, "ideal lattice is not { {0}, A, B, T }");

  SumResult sum = ideal_sum(gs, mask_of({0, 1, 2}), mask_of({0, 3, 4}));
  expect(sum.sum == mask_of({0, 1, 2, 3, 4, 5}), "A+B != {0,1,x,y,z,s}");
  expect(!sum.verdict.ok && sum.verdict.reason == "NotHereditary" &&
             sum.verdict.witness.size() == 4 && sum.verdict.witness[2] == 6 &&
             sum.verdict.witness[3] == 6 && gs.monoid.add(6, 6) == 5,
         "A+B violation is not the hereditary failure at b+b=s");

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  expect(secs < 1.0, "criterion 1 exceeded one second");
}

void criterion2() {
  for (const GammaStructure& gs : corpus(5, /*refinement_only=*/true)) {
    auto all = all_composition_series(gs);
    expect(!all.empty(), "no composition series: " + inst_label(gs));
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + (all.size() > 1 ? 1 : 0); j < all.size(); ++j) {
        expect(series_equivalent(gs, all[i], all[j]).equivalent,
               "inequivalent series: " + inst_label(gs));
        SchreierResult sr = schreier_refinement(gs, all[i], all[j]);
        expect(sr.all_pairs_isomorphic,
               "schreier pairing failed: " + inst_label(gs));
        // One verified pair per cell of the interleaving grid.
        size_t cells = (all[i].chain.size() - 1) * (all[j].chain.size() - 1);
        expect(sr.pairing.size() == cells,
               "schreier pairing incomplete: " + inst_label(gs));
      }
  }
}

void criterion3() {
  for (const GammaStructure& gs : corpus(5, /*refinement_only=*/true)) {
    IdealLattice lat = all_order_ideals(gs);
    const auto& ids = lat.ideals;

    for (Mask a : ids)
      for (Mask b : ids)
        if ((a & b) == mask_bit(0))
          expect(check_lemma_sum_quotient(gs, a, b),
                 "sum-quotient lemma failed: " + inst_label(gs));

    // third isomorphism: (T/I)/(J/I) is isomorphic to T/J for I inside J
    for (Mask i : ids)
      for (Mask j : ids) {
        if ((i & j) != i) continue;
        QuotientPresentation qi = quotient(gs, i);
        Mask jbar = 0;
        for (int e : mask_elems(j)) jbar |= mask_bit(qi.projection[e]);
        GammaStructure lhs = quotient(qi.quotient, jbar).quotient;
        GammaStructure rhs = quotient(gs, j).quotient;
        expect(find_gamma_isomorphism(lhs, rhs).has_value(),
               "third isomorphism failed: " + inst_label(gs));
      }

    for (Mask q : ids)
      for (Mask l : ids) {
        if ((l & q) != l) continue;
        for (Mask n : ids)
          expect(check_zassenhaus(gs, q, l, n),
                 "zassenhaus failed: " + inst_label(gs));
      }

    for (Mask a : ids)
      for (Mask a1 : ids) {
        if ((a1 & a) != a1) continue;
        for (Mask b : ids)
          for (Mask b1 : ids) {
            if ((b1 & b) != b1) continue;
            expect(check_butterfly(gs, a, a1, b, b1),
                   "butterfly failed: " + inst_label(gs));
          }
      }
  }
}

void criterion4() {
  for (const GammaStructure& gs : corpus(5, /*refinement_only=*/false)) {
    IdealLattice lat = all_order_ideals(gs);
    bool refinement = is_refinement(gs.monoid).ok;

    for (Mask a : lat.ideals) {
      expect(is_normal(gs.monoid, a), "ideal not normal: " + inst_label(gs));
      for (Mask b : lat.ideals) {
        Mask cap = ideal_intersect(gs, a, b);
        expect(is_order_ideal(gs, cap).ok,
               "intersection not an ideal: " + inst_label(gs));
        if (refinement)
          expect(ideal_sum(gs, a, b).verdict.ok,
                 "sum not an ideal on refinement instance: " + inst_label(gs));
      }
    }

    for (Mask s = 0; s < full_mask(gs.n()) + 1 && gs.n() < 64; ++s)
      expect(order_ideal_biconditional(gs, s) ==
                 order_ideal_hereditary_form(gs, s),
             "characterizations disagree: " + inst_label(gs));
  }
}

void criterion5() {
  for (const GammaStructure& gs : corpus(5, /*refinement_only=*/false)) {
    IdealLattice lat = all_order_ideals(gs);
    for (Mask i : lat.ideals) {
      QuotientPresentation qp = quotient(gs, i);  // throws on any failure
      expect(mask_of(qp.classes.blocks[0]) == i,
             "block 0 is not the ideal: " + inst_label(gs));

      // correspondence: ideals of T/I are exactly the images of J >= I
      IdealLattice qlat = all_order_ideals(qp.quotient);
      std::set<Mask> qids(qlat.ideals.begin(), qlat.ideals.end());
      std::set<Mask> images;
      for (Mask j : lat.ideals) {
        if ((i & j) != i) continue;
        Mask jbar = 0;
        for (int e : mask_elems(j)) jbar |= mask_bit(qp.projection[e]);
        images.insert(jbar);
      }
      expect(images == qids, "ideal correspondence failed: " + inst_label(gs));

      HomMap f{&gs, &qp.quotient, qp.projection};
      expect(!check_hom(f).has_value(),
             "projection is not a hom: " + inst_label(gs));
      FirstIsoReport fir = first_iso_check(f);
      expect(fir.rho_equal && fir.phi_iso,
             "first isomorphism check failed: " + inst_label(gs));
    }
  }
}

void criterion6() {
  for (const GammaStructure& gs : corpus(5, /*refinement_only=*/false)) {
    Series s = one_composition_series(gs);
    expect(is_gamma_series(gs, s).ok, "invalid series: " + inst_label(gs));
    ChainReport rep = chain_condition_report(gs);
    expect(s.length() == rep.height && rep.composition_length == rep.height,
           "series length != lattice height: " + inst_label(gs));
    expect(rep.bound_holds, "a series exceeds the bound: " + inst_label(gs));
  }
}

void criterion7() {
  for (const GammaStructure& gs : corpus(5, /*refinement_only=*/false)) {
    IdealLattice lat = all_order_ideals(gs);
    for (Mask i : lat.ideals) {
      SplitReport rep = split_and_reassemble(gs, i);
      expect(rep.splice_ok && rep.restrict_ok,
             "split/reassemble failed: " + inst_label(gs));
    }
    if (is_refinement(gs.monoid).ok) {
      auto at = atoms(lat);
      if (!at.empty())
        expect(minimal_ideal_series(gs, at).factors_match,
               "minimal-ideal series factors mismatch: " + inst_label(gs));
    }
  }
}

void criterion8() {
  // enumeration vs the naive 3^9-table filter
  std::set<std::string> naive;
  std::vector<int> t(9);
  for (long code = 0; code < 19683; ++code) {
    long c = code;
    for (int k = 0; k < 9; ++k) {
      t[k] = c % 3;
      c /= 3;
    }
    if (check_monoid({"0", "1", "2"}, t, 3).has_value()) continue;
    naive.insert(canonical_form(make_monoid(t, 3)));
  }
  std::set<std::string> fast;
  for (const Monoid& m : enumerate_monoids(3)) fast.insert(canonical_form(m));
  expect(fast == naive, "enumerate_monoids(3) != naive filter");

  // refinement predicate vs the brute-force quadruple search
  auto brute_refinement = [](const Monoid& m) {
    for (int a = 0; a < m.n; ++a)
      for (int b = 0; b < m.n; ++b)
        for (int c = 0; c < m.n; ++c)
          for (int d = 0; d < m.n; ++d) {
            if (m.add(a, b) != m.add(c, d)) continue;
            bool found = false;
            for (int e1 = 0; e1 < m.n && !found; ++e1)
              for (int e2 = 0; e2 < m.n && !found; ++e2)
                for (int e3 = 0; e3 < m.n && !found; ++e3)
                  for (int e4 = 0; e4 < m.n && !found; ++e4)
                    found = m.add(e1, e2) == a && m.add(e3, e4) == b &&
                            m.add(e1, e3) == c && m.add(e2, e4) == d;
            if (!found) return false;
          }
    return true;
  };
  int checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (const Monoid& m : enumerate_monoids(n)) {
      expect(is_refinement(m).ok == brute_refinement(m),
             "refinement predicate disagrees with the brute oracle");
      ++checked;
    }
  expect(checked >= 100, "fewer than 100 refinement oracle comparisons");

  // canonical_form equality iff explicit isomorphism, on all simple factors
  std::vector<GammaStructure> factors;
  for (const GammaStructure& gs : corpus(4, /*refinement_only=*/false)) {
    Series s = one_composition_series(gs);
    for (size_t i = 0; i + 1 < s.chain.size(); ++i)
      factors.push_back(series_factor(gs, s, static_cast<int>(i)));
  }
  for (size_t i = 0; i < factors.size(); ++i)
    for (size_t j = i + 1; j < factors.size(); ++j) {
      if (factors[i].group.table != factors[j].group.table) continue;
      bool same_key =
          canonical_form(factors[i]) == canonical_form(factors[j]);
      bool iso = find_gamma_isomorphism(factors[i], factors[j]).has_value();
      expect(same_key == iso,
             "canonical form disagrees with isomorphism search");
    }
  expect(!factors.empty(), "no simple factors encountered");
}

int run(int n, void (*fn)()) {
  g_failures = 0;
  g_detail.clear();
  try {
    fn();
  } catch (const std::exception& e) {
    fail(std::string("exception: ") + e.what());
  }
  if (g_failures == 0) {
    std::printf("criterion %d: PASS\n", n);
    return 0;
  }
  std::printf("criterion %d: FAIL (%d failure%s; first: %s)\n", n, g_failures,
              g_failures == 1 ? "" : "s", g_detail.c_str());
  return 1;
}

}  // namespace

int main() {
  int bad = 0;
  bad += run(1, criterion1);
  bad += run(2, criterion2);
  bad += run(3, criterion3);
  bad += run(4, criterion4);
  bad += run(5, criterion5);
  bad += run(6, criterion6);
  bad += run(7, criterion7);
  bad += run(8, criterion8);
  return bad == 0 ? 0 : 1;
}
