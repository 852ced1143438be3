#include "gmon/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace gmon {

namespace {

Partition partition_from_classes(const std::vector<int>& raw_class, int n) {
  // Relabel blocks by least representative, ascending.
  std::vector<int> first_seen;
  std::map<int, int> relabel;
  for (int x = 0; x < n; ++x)
    if (!relabel.count(raw_class[x])) {
      relabel[raw_class[x]] = static_cast<int>(first_seen.size());
      first_seen.push_back(x);
    }
  Partition p;
  p.class_of.resize(n);
  p.blocks.resize(first_seen.size());
  for (int x = 0; x < n; ++x) {
    int c = relabel[raw_class[x]];
    p.class_of[x] = c;
    p.blocks[c].push_back(x);
  }
  return p;
}

int uf_find(std::vector<int>& up, int x) {
  while (up[x] != x) x = up[x] = up[up[x]];
  return x;
}

}  // namespace

Partition rho_partition(const Monoid& m, Mask h, bool* raw_transitive) {
  if (!is_submonoid(m, h))
    throw ValidationError(Violation{"NotSubmonoid", mask_elems(h)});
  std::vector<Mask> coset(m.n, 0);
  for (int x = 0; x < m.n; ++x)
    for (int e : mask_elems(h)) coset[x] |= mask_bit(m.add(x, e));
  auto related = [&](int x, int y) { return (coset[x] & coset[y]) != 0; };
  if (raw_transitive) {
    *raw_transitive = true;
    for (int x = 0; x < m.n && *raw_transitive; ++x)
      for (int y = 0; y < m.n && *raw_transitive; ++y)
        for (int z = 0; z < m.n; ++z)
          if (related(x, y) && related(y, z) && !related(x, z)) {
            *raw_transitive = false;
            break;
          }
  }
  std::vector<int> up(m.n);
  std::iota(up.begin(), up.end(), 0);
  for (int x = 0; x < m.n; ++x)
    for (int y = x + 1; y < m.n; ++y)
      if (related(x, y)) up[uf_find(up, x)] = uf_find(up, y);
  std::vector<int> cls(m.n);
  for (int x = 0; x < m.n; ++x) cls[x] = uf_find(up, x);
  return partition_from_classes(cls, m.n);
}

QuotientPresentation quotient(const GammaStructure& gs, Mask ideal) {
  const Monoid& mo = gs.monoid;
  if (!is_order_ideal(gs, ideal).ok)
    throw ValidationError(Violation{"HypothesisViolated", mask_elems(ideal)});
  bool raw = false;
  Partition p = rho_partition(mo, ideal, &raw);
  internal_check(raw, "CosetOverlapNotTransitive");
  internal_check(mask_of(p.blocks[0]) == ideal, "BlockZeroMismatch");

  const int k = p.size();
  std::vector<int> table(k * k, -1);
  for (int x = 0; x < mo.n; ++x)
    for (int y = 0; y < mo.n; ++y) {
      int c = p.class_of[mo.add(x, y)];
      int& slot = table[p.class_of[x] * k + p.class_of[y]];
      if (slot == -1)
        slot = c;
      else if (slot != c)
        throw ValidationError(
            Violation{"WellDefinednessFailure", {x, y, slot, c}});
    }
  std::vector<int> action(gs.m() * k, -1);
  for (int al = 0; al < gs.m(); ++al)
    for (int x = 0; x < mo.n; ++x) {
      int c = p.class_of[gs.act(al, x)];
      int& slot = action[al * k + p.class_of[x]];
      if (slot == -1)
        slot = c;
      else if (slot != c)
        throw ValidationError(
            Violation{"WellDefinednessFailure", {al, x, slot, c}});
    }
  std::vector<std::string> names(k);
  for (int c = 0; c < k; ++c) names[c] = "[" + mo.name(p.blocks[c][0]) + "]";

  QuotientPresentation qp;
  qp.ideal = ideal;
  qp.classes = p;
  qp.projection = p.class_of;
  qp.quotient = make_gamma(make_monoid(table, k, std::move(names)), gs.group,
                           std::move(action));
  return qp;
}

GammaStructure restrict_to(const GammaStructure& gs, Mask s,
                           std::vector<int>* index_map) {
  const Monoid& mo = gs.monoid;
  internal_check(is_submonoid(mo, s), "RestrictionNotClosed");
  std::vector<int> elems = mask_elems(s);
  std::vector<int> pos(mo.n, -1);
  for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  const int k = static_cast<int>(elems.size());
  std::vector<int> table(k * k);
  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i) {
    names[i] = mo.name(elems[i]);
    for (int j = 0; j < k; ++j) {
      int v = pos[mo.add(elems[i], elems[j])];
      internal_check(v >= 0, "RestrictionNotClosed");
      table[i * k + j] = v;
    }
  }
  std::vector<int> action(gs.m() * k);
  for (int al = 0; al < gs.m(); ++al)
    for (int i = 0; i < k; ++i) {
      int v = pos[gs.act(al, elems[i])];
      internal_check(v >= 0, "RestrictionNotClosed");
      action[al * k + i] = v;
    }
  if (index_map) *index_map = elems;
  return make_gamma(make_monoid(table, k, std::move(names)), gs.group,
                    std::move(action));
}

GammaStructure factor(const GammaStructure& gs, Mask i, Mask j) {
  internal_check((i & j) == i, "FactorNotNested");
  std::vector<int> map;
  GammaStructure sub = restrict_to(gs, j, &map);
  Mask sub_ideal = 0;
  for (size_t t = 0; t < map.size(); ++t)
    if (mask_has(i, map[t])) sub_ideal |= mask_bit(static_cast<int>(t));
  return quotient(sub, sub_ideal).quotient;
}

std::optional<Violation> check_hom(const HomMap& f) {
  const GammaStructure& s = *f.source;
  const GammaStructure& t = *f.target;
  if (!s.group.same_as(t.group)) return Violation{"GroupMismatch", {}};
  if (f.map.size() != static_cast<size_t>(s.n())) return Violation{"BadShape", {}};
  for (int v : f.map)
    if (v < 0 || v >= t.n()) return Violation{"BadShape", {}};
  if (f.map[0] != 0) return Violation{"NotUnital", {}};
  for (int a = 0; a < s.n(); ++a)
    for (int b = 0; b < s.n(); ++b)
      if (f.map[s.monoid.add(a, b)] != t.monoid.add(f.map[a], f.map[b]))
        return Violation{"NotAdditive", {a, b}};
  for (int al = 0; al < s.m(); ++al)
    for (int a = 0; a < s.n(); ++a)
      if (f.map[s.act(al, a)] != t.act(al, f.map[a]))
        return Violation{"NotEquivariant", {al, a}};
  return std::nullopt;
}

Mask kernel(const HomMap& f) {
  Mask out = 0;
  for (int a = 0; a < f.source->n(); ++a)
    if (f.map[a] == 0) out |= mask_bit(a);
  return out;
}

FirstIsoReport first_iso_check(const HomMap& f) {
  if (auto v = check_hom(f)) throw ValidationError(*v);
  const GammaStructure& s = *f.source;
  const GammaStructure& t = *f.target;
  Mask image = 0;
  for (int v : f.map) image |= mask_bit(v);
  if (image != full_mask(t.n()))
    throw ValidationError(Violation{"NotSurjective", {}});

  Partition rho_f = partition_from_classes(f.map, s.n());
  Partition rho_ker = rho_partition(s.monoid, kernel(f));

  // phi([x]) = f(x) on source/rho_ker: always well defined, iso iff injective.
  std::vector<int> phi(rho_ker.size(), -1);
  for (int x = 0; x < s.n(); ++x) {
    int c = rho_ker.class_of[x];
    if (phi[c] == -1)
      phi[c] = f.map[x];
    else
      internal_check(phi[c] == f.map[x], "PhiNotWellDefined");
  }
  Mask phi_image = 0;
  bool injective = true;
  for (int v : phi) {
    if (mask_has(phi_image, v)) injective = false;
    phi_image |= mask_bit(v);
  }
  FirstIsoReport rep;
  rep.rho_equal = (rho_f == rho_ker);
  rep.phi_iso = injective;
  internal_check(rep.rho_equal == rep.phi_iso, "FirstIsoCriterionMismatch");
  return rep;
}

namespace {

// Label-invariant per-element signature used to prune the bijection search.
std::vector<long> element_signature(const GammaStructure& gs, int a) {
  const Monoid& mo = gs.monoid;
  long ups = 0, downs = 0, stab = 0;
  for (int b = 0; b < mo.n; ++b) {
    if (below(mo, a, b)) ++ups;
    if (below(mo, b, a)) ++downs;
    if (mo.add(a, b) == a) ++stab;
  }
  Mask row = 0;
  for (int b = 0; b < mo.n; ++b) row |= mask_bit(mo.add(a, b));
  long fixers = 0;
  for (int al = 0; al < gs.m(); ++al)
    if (gs.act(al, a) == a) ++fixers;
  return {mo.add(a, a) == a ? 1L : 0L, static_cast<long>(mask_size(orbit(gs, a))),
          fixers, ups, downs, stab, static_cast<long>(mask_size(row))};
}

bool iso_search(const GammaStructure& A, const GammaStructure& B,
                std::vector<int>& pi, Mask used, int next,
                const std::vector<std::vector<int>>& candidates) {
  const int n = A.n();
  if (next == n) return true;
  for (int img : candidates[next]) {
    if (mask_has(used, img)) continue;
    pi[next] = img;
    bool ok = true;
    for (int a = 0; a <= next && ok; ++a)
      for (int b = 0; b <= next && ok; ++b) {
        int s = A.monoid.add(a, b);
        if (s <= next && B.monoid.add(pi[a], pi[b]) != pi[s]) ok = false;
      }
    for (int al = 0; al < A.m() && ok; ++al)
      for (int a = 0; a <= next && ok; ++a) {
        int s = A.act(al, a);
        if (s <= next && B.act(al, pi[a]) != pi[s]) ok = false;
      }
    if (ok && iso_search(A, B, pi, used | mask_bit(img), next + 1, candidates))
      return true;
  }
  pi[next] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_gamma_isomorphism(const GammaStructure& a,
                                                       const GammaStructure& b) {
  if (!a.group.same_as(b.group))
    throw ValidationError(Violation{"GroupMismatch", {}});
  if (a.n() > 10 || b.n() > 10)
    throw ValidationError(Violation{"SizeLimit", {a.n(), b.n()}});
  if (a.n() != b.n()) return std::nullopt;
  const int n = a.n();
  std::vector<std::vector<int>> candidates(n);
  for (int x = 0; x < n; ++x) {
    auto sig = element_signature(a, x);
    for (int y = 0; y < n; ++y)
      if (element_signature(b, y) == sig) candidates[x].push_back(y);
    if (candidates[x].empty()) return std::nullopt;
  }
  std::vector<int> pi(n, -1);
  pi[0] = 0;
  if (iso_search(a, b, pi, mask_bit(0), 1, candidates)) {
    // The incremental check skips sums whose image was unassigned; verify.
    HomMap h{&a, &b, pi};
    internal_check(!check_hom(h).has_value(), "IsoSearchInconsistent");
    return pi;
  }
  return std::nullopt;
}

namespace {

std::string serialize_key(int n, const std::vector<int>& table, int m,
                          const std::vector<int>& gtable,
                          const std::vector<int>& action) {
  std::ostringstream os;
  os << n << "|";
  for (int v : table) os << v << ",";
  os << "|" << m << "|";
  for (int v : gtable) os << v << ",";
  os << "|";
  for (int v : action) os << v << ",";
  return os.str();
}

std::string canonical_key(int n, const Monoid& mo, const Group& g,
                          const std::vector<int>& action) {
  if (n > 8) throw ValidationError(Violation{"SizeLimit", {n}});
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best_t, best_a;
  std::vector<int> t(n * n), a(g.m * n), inv(n);
  bool have = false;
  do {
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        t[i * n + j] = perm[mo.add(inv[i], inv[j])];
    for (int al = 0; al < g.m; ++al)
      for (int i = 0; i < n; ++i) a[al * n + i] = perm[action[al * n + inv[i]]];
    if (!have || std::tie(t, a) < std::tie(best_t, best_a)) {
      best_t = t;
      best_a = a;
      have = true;
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return serialize_key(n, best_t, g.m, g.table, best_a);
}

}  // namespace

std::string canonical_form(const GammaStructure& gs) {
  return canonical_key(gs.n(), gs.monoid, gs.group, gs.action);
}

std::string canonical_form(const Monoid& m) {
  std::vector<int> id(m.n);
  std::iota(id.begin(), id.end(), 0);
  Group g = trivial_group();
  return canonical_key(m.n, m, g, id);
}

namespace {

void require_refinement(const GammaStructure& gs) {
  auto v = is_refinement(gs.monoid);
  if (!v.ok)
    throw ValidationError(Violation{"NotRefinementMonoid", v.witness});
}

void require_ideal(const GammaStructure& gs, Mask s) {
  if (!is_order_ideal(gs, s).ok)
    throw ValidationError(Violation{"HypothesisViolated", mask_elems(s)});
}

}  // namespace

bool check_lemma_sum_quotient(const GammaStructure& gs, Mask a, Mask b) {
  require_refinement(gs);
  require_ideal(gs, a);
  require_ideal(gs, b);
  if ((a & b) != mask_bit(0))
    throw ValidationError(Violation{"HypothesisViolated", mask_elems(a & b)});
  Mask s = ideal_sum(gs, a, b).sum;
  GammaStructure lhs = factor(gs, a, s);
  GammaStructure rhs = restrict_to(gs, b);
  return find_gamma_isomorphism(lhs, rhs).has_value();
}

bool check_zassenhaus(const GammaStructure& gs, Mask q, Mask l, Mask n) {
  require_refinement(gs);
  require_ideal(gs, q);
  require_ideal(gs, l);
  require_ideal(gs, n);
  if ((l & q) != l)
    throw ValidationError(Violation{"HypothesisViolated", mask_elems(l)});
  Mask lhs_den = ideal_sum(gs, l, q & n).sum;
  Mask rhs_num = ideal_sum(gs, q, n).sum;
  Mask rhs_den = ideal_sum(gs, l, n).sum;
  GammaStructure lhs = factor(gs, lhs_den, q);
  GammaStructure rhs = factor(gs, rhs_den, rhs_num);
  return find_gamma_isomorphism(lhs, rhs).has_value();
}

bool check_butterfly(const GammaStructure& gs, Mask a, Mask a1, Mask b,
                     Mask b1) {
  require_refinement(gs);
  for (Mask s : {a, a1, b, b1}) require_ideal(gs, s);
  if ((a1 & a) != a1 || (b1 & b) != b1)
    throw ValidationError(Violation{"HypothesisViolated", {}});
  // Denominators are the symmetric ones the proof actually derives,
  // (A'∩B)+B' and (A∩B')+A'; the asymmetric printed variant is false
  // (e.g. on the 2x2 truncated-coordinate monoid).
  GammaStructure lhs =
      factor(gs, ideal_sum(gs, a1 & b, b1).sum, ideal_sum(gs, a & b, b1).sum);
  GammaStructure rhs =
      factor(gs, ideal_sum(gs, a & b1, a1).sum, ideal_sum(gs, a & b, a1).sum);
  return find_gamma_isomorphism(lhs, rhs).has_value();
}

}  // namespace gmon
