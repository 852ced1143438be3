#include "gmon/ideals.hpp"

#include <algorithm>

namespace gmon {

bool is_submonoid(const Monoid& m, Mask s) {
  if (!mask_has(s, 0)) return false;
  for (int a : mask_elems(s))
    for (int b : mask_elems(s))
      if (!mask_has(s, m.add(a, b))) return false;
  return true;
}

bool order_ideal_biconditional(const GammaStructure& gs, Mask s) {
  if (s == 0) return false;  // convention: ideals are nonempty
  const Monoid& mo = gs.monoid;
  for (int al = 0; al < gs.m(); ++al)
    for (int be = 0; be < gs.m(); ++be)
      for (int a = 0; a < mo.n; ++a)
        for (int b = 0; b < mo.n; ++b) {
          bool in = mask_has(s, mo.add(gs.act(al, a), gs.act(be, b)));
          if (in != (mask_has(s, a) && mask_has(s, b))) return false;
        }
  return true;
}

bool order_ideal_hereditary_form(const GammaStructure& gs, Mask s) {
  const Monoid& mo = gs.monoid;
  if (!is_submonoid(mo, s)) return false;
  for (int al = 0; al < gs.m(); ++al)
    for (int a : mask_elems(s))
      if (!mask_has(s, gs.act(al, a))) return false;
  for (int b : mask_elems(s))
    for (int a = 0; a < mo.n; ++a)
      if (below(mo, a, b) && !mask_has(s, a)) return false;
  return true;
}

IdealCheck is_order_ideal(const GammaStructure& gs, Mask s) {
  const Monoid& mo = gs.monoid;
  IdealCheck res;
  if (s == 0) return {false, "Empty", {}};
  for (int al = 0; al < gs.m(); ++al)
    for (int be = 0; be < gs.m(); ++be)
      for (int a = 0; a < mo.n; ++a)
        for (int b = 0; b < mo.n; ++b) {
          bool in = mask_has(s, mo.add(gs.act(al, a), gs.act(be, b)));
          bool both = mask_has(s, a) && mask_has(s, b);
          if (in == both) continue;
          res.ok = false;
          res.reason = both ? "SumEscapes" : "NotHereditary";
          res.witness = {al, be, a, b};
          internal_check(!order_ideal_hereditary_form(gs, s),
                         "CharacterizationDisagreement");
          return res;
        }
  internal_check(order_ideal_hereditary_form(gs, s),
                 "CharacterizationDisagreement");
  return res;
}

bool is_normal(const Monoid& m, Mask s) {
  if (!is_submonoid(m, s))
    throw ValidationError(Violation{"NotSubmonoid", mask_elems(s)});
  for (int x : mask_elems(s))
    for (int y = 0; y < m.n; ++y)
      if (mask_has(s, m.add(x, y)) && !mask_has(s, y)) return false;
  return true;
}

Mask generated_ideal(const GammaStructure& gs, Mask seed) {
  const Monoid& mo = gs.monoid;
  Mask s = seed | mask_bit(0);
  for (;;) {
    Mask next = s;
    for (int a : mask_elems(s)) {
      for (int b : mask_elems(s)) next |= mask_bit(mo.add(a, b));
      for (int al = 0; al < gs.m(); ++al) next |= mask_bit(gs.act(al, a));
      for (int x = 0; x < mo.n; ++x)
        if (below(mo, x, a)) next |= mask_bit(x);
    }
    if (next == s) return s;
    s = next;
  }
}

Mask zero_ideal(const GammaStructure& gs) {
  return generated_ideal(gs, mask_bit(0));
}

int IdealLattice::index_of(Mask s) const {
  for (size_t i = 0; i < ideals.size(); ++i)
    if (ideals[i] == s) return static_cast<int>(i);
  return -1;
}

IdealLattice all_order_ideals(const GammaStructure& gs, int crosscheck_limit) {
  const Monoid& mo = gs.monoid;
  std::vector<Mask> found{zero_ideal(gs)};
  auto add = [&](Mask s) {
    if (std::find(found.begin(), found.end(), s) == found.end())
      found.push_back(s);
  };
  for (int a = 0; a < mo.n; ++a) add(generated_ideal(gs, mask_bit(a)));
  for (;;) {
    size_t before = found.size();
    for (size_t i = 0; i < found.size(); ++i)
      for (size_t j = 0; j < i; ++j) {
        add(found[i] & found[j]);
        add(generated_ideal(gs, found[i] | found[j]));
      }
    if (found.size() == before) break;
  }

  if (mo.n <= crosscheck_limit) {
    // Ground truth: every nonempty subset through the definition.
    std::vector<Mask> brute;
    for (Mask s = 1; s <= full_mask(mo.n); ++s)
      if (order_ideal_biconditional(gs, s)) brute.push_back(s);
    auto sorted_found = found;
    std::sort(sorted_found.begin(), sorted_found.end());
    std::sort(brute.begin(), brute.end());
    if (sorted_found != brute)
      throw ValidationError(Violation{"LatticeEnumerationMismatch", {mo.n}});
  }

  std::sort(found.begin(), found.end(), [](Mask a, Mask b) {
    if (mask_size(a) != mask_size(b)) return mask_size(a) < mask_size(b);
    return mask_lex_less(a, b);
  });

  IdealLattice lat;
  lat.ideals = std::move(found);
  const int k = static_cast<int>(lat.ideals.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Mask a = lat.ideals[i], b = lat.ideals[j];
      if (a == b || (a & b) != a) continue;
      bool cover = true;
      for (int t = 0; t < k && cover; ++t) {
        Mask c = lat.ideals[t];
        if (c != a && c != b && (a & c) == a && (c & b) == c) cover = false;
      }
      if (cover) lat.covers.emplace_back(i, j);
    }
  return lat;
}

SumResult ideal_sum(const GammaStructure& gs, Mask a, Mask b) {
  const Monoid& mo = gs.monoid;
  SumResult res;
  for (int x : mask_elems(a))
    for (int y : mask_elems(b)) res.sum |= mask_bit(mo.add(x, y));
  res.verdict = is_order_ideal(gs, res.sum);
  if (is_refinement(mo).ok)
    internal_check(res.verdict.ok, "SumLemmaViolated");
  return res;
}

Mask ideal_intersect(const GammaStructure& gs, Mask a, Mask b) {
  Mask s = a & b;
  internal_check(is_order_ideal(gs, s).ok, "IntersectionLemmaViolated");
  return s;
}

std::vector<Mask> atoms(const IdealLattice& lat) {
  std::vector<Mask> out;
  // The least ideal sorts first (it is contained in every other one).
  for (auto [i, j] : lat.covers)
    if (i == 0) out.push_back(lat.ideals[j]);
  return out;
}

bool is_simple(const GammaStructure& gs) {
  return all_order_ideals(gs).ideals.size() <= 2;
}

}  // namespace gmon
