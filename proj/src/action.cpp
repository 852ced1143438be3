#include "gmon/action.hpp"

#include <algorithm>
#include <numeric>

namespace gmon {

std::optional<Violation> check_group(const std::vector<int>& table, int m,
                                     bool require_abelian) {
  if (m <= 0 || table.size() != static_cast<size_t>(m) * m)
    return Violation{"BadShape", {m}};
  for (int v : table)
    if (v < 0 || v >= m) return Violation{"BadShape", {m}};
  auto at = [&](int a, int b) { return table[a * m + b]; };
  for (int a = 0; a < m; ++a)
    if (at(0, a) != a || at(a, 0) != a) return Violation{"NoIdentity", {a}};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          return Violation{"NotAssociative", {a, b, c}};
  for (int a = 0; a < m; ++a) {
    bool has = false;
    for (int b = 0; b < m && !has; ++b)
      if (at(a, b) == 0 && at(b, a) == 0) has = true;
    if (!has) return Violation{"NoInverse", {a}};
  }
  if (require_abelian)
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (at(a, b) != at(b, a)) return Violation{"NotAbelian", {a, b}};
  return std::nullopt;
}

Group make_group(const std::vector<int>& table, int m, bool require_abelian) {
  if (auto v = check_group(table, m, require_abelian)) throw ValidationError(*v);
  Group g{m, table, std::vector<int>(m, 0)};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (g.mul(a, b) == 0) g.inverse[a] = b;
  return g;
}

Group trivial_group() { return make_group({0}, 1); }

Group cyclic_group(int d) {
  std::vector<int> t(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) t[i * d + j] = (i + j) % d;
  return make_group(t, d);
}

std::optional<Violation> check_action(const Group& g, const Monoid& mo,
                                      const std::vector<int>& action) {
  const int m = g.m, n = mo.n;
  if (action.size() != static_cast<size_t>(m) * n)
    return Violation{"BadShape", {m, n}};
  for (int v : action)
    if (v < 0 || v >= n) return Violation{"BadShape", {m, n}};
  auto at = [&](int al, int a) { return action[al * n + a]; };
  for (int a = 0; a < n; ++a)
    if (at(0, a) != a) return Violation{"IdentityLaw", {a}};
  for (int al = 0; al < m; ++al)
    for (int be = 0; be < m; ++be)
      for (int a = 0; a < n; ++a)
        if (at(g.mul(al, be), a) != at(al, at(be, a)))
          return Violation{"CompositionLaw", {al, be, a}};
  for (int al = 0; al < m; ++al)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (at(al, mo.add(a, b)) != mo.add(at(al, a), at(al, b)))
          return Violation{"AdditivityLaw", {al, a, b}};
  for (int al = 0; al < m; ++al) {
    Mask seen = 0;
    for (int a = 0; a < n; ++a) seen |= mask_bit(at(al, a));
    if (seen != full_mask(n)) return Violation{"NotPermutation", {al}};
  }
  return std::nullopt;
}

GammaStructure make_gamma(Monoid mo, Group g, std::vector<int> action) {
  if (auto v = check_action(g, mo, action)) throw ValidationError(*v);
  return GammaStructure{std::move(mo), std::move(g), std::move(action)};
}

GammaStructure with_trivial_action(Monoid mo) {
  std::vector<int> id(mo.n);
  std::iota(id.begin(), id.end(), 0);
  return make_gamma(std::move(mo), trivial_group(), std::move(id));
}

Mask orbit(const GammaStructure& gs, int a) {
  Mask out = 0;
  for (int al = 0; al < gs.m(); ++al) out |= mask_bit(gs.act(al, a));
  return out;
}

namespace {

void aut_search(const Monoid& m, std::vector<int>& pi, Mask used, int next,
                std::vector<std::vector<int>>& out) {
  const int n = m.n;
  if (next == n) {
    out.push_back(pi);
    return;
  }
  for (int img = 0; img < n; ++img) {
    if (mask_has(used, img)) continue;
    pi[next] = img;
    bool ok = true;
    for (int a = 0; a <= next && ok; ++a)
      for (int b = 0; b <= next && ok; ++b) {
        int s = m.add(a, b);
        if (s <= next && m.add(pi[a], pi[b]) != pi[s]) ok = false;
        // products landing above `next` are checked once their image exists
      }
    if (ok) aut_search(m, pi, used | mask_bit(img), next + 1, out);
  }
  pi[next] = -1;
}

}  // namespace

std::vector<std::vector<int>> automorphism_group(const Monoid& m) {
  std::vector<int> pi(m.n, -1);
  pi[0] = 0;
  std::vector<std::vector<int>> out;
  aut_search(m, pi, mask_bit(0), 1, out);
  // Deferred checks: keep only genuine homomorphisms.
  std::vector<std::vector<int>> res;
  for (auto& p : out) {
    bool ok = true;
    for (int a = 0; a < m.n && ok; ++a)
      for (int b = 0; b < m.n && ok; ++b)
        if (m.add(p[a], p[b]) != p[m.add(a, b)]) ok = false;
    if (ok) res.push_back(p);
  }
  std::sort(res.begin(), res.end());
  return res;
}

}  // namespace gmon
