#include "gmon/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gmon/quotient.hpp"

namespace gmon {

namespace {

// Partial associativity scan over the triples whose entries are all defined.
bool partial_ok(const std::vector<int>& t, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = t[a * n + b];
      if (ab < 0) continue;
      for (int c = 0; c < n; ++c) {
        int bc = t[b * n + c];
        if (bc < 0) continue;
        int l = t[ab * n + c], r = t[a * n + bc];
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
  return true;
}

void enum_search(std::vector<int>& t, int n,
                 const std::vector<std::pair<int, int>>& cells, size_t at,
                 std::map<std::string, Monoid>& out) {
  if (at == cells.size()) {
    Monoid m = make_monoid(t, n);
    out.emplace(canonical_form(m), std::move(m));
    return;
  }
  auto [i, j] = cells[at];
  for (int v = 0; v < n; ++v) {
    t[i * n + j] = t[j * n + i] = v;
    if (partial_ok(t, n)) enum_search(t, n, cells, at + 1, out);
  }
  t[i * n + j] = t[j * n + i] = -1;
}

}  // namespace

std::vector<Monoid> enumerate_monoids(int n) {
  if (n < 1 || n > kEnumerationCap)
    throw ValidationError(Violation{"SizeLimit", {n}});
  std::vector<int> t(n * n, -1);
  for (int a = 0; a < n; ++a) t[a] = t[a * n] = a;
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) cells.emplace_back(i, j);
  std::map<std::string, Monoid> found;
  enum_search(t, n, cells, 0, found);
  std::vector<Monoid> out;
  out.reserve(found.size());
  for (auto& [key, m] : found) out.push_back(std::move(m));
  return out;
}

namespace {

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

using PermSet = std::set<std::vector<int>>;

PermSet close_under_composition(PermSet gens, int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  gens.insert(id);
  for (;;) {
    PermSet next = gens;
    for (const auto& p : gens)
      for (const auto& q : gens) next.insert(compose(p, q));
    if (next.size() == gens.size()) return gens;
    gens = std::move(next);
  }
}

GammaStructure action_from_perm_group(const Monoid& m, const PermSet& perms) {
  std::vector<std::vector<int>> ps(perms.begin(), perms.end());  // lex order
  const int k = static_cast<int>(ps.size());
  auto index_of = [&](const std::vector<int>& p) {
    return static_cast<int>(
        std::lower_bound(ps.begin(), ps.end(), p) - ps.begin());
  };
  std::vector<int> gtable(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) gtable[i * k + j] = index_of(compose(ps[i], ps[j]));
  std::vector<int> action(k * m.n);
  for (int i = 0; i < k; ++i)
    for (int a = 0; a < m.n; ++a) action[i * m.n + a] = ps[i][a];
  return make_gamma(m, make_group(gtable, k), std::move(action));
}

bool perm_group_abelian(const PermSet& perms) {
  for (const auto& p : perms)
    for (const auto& q : perms)
      if (compose(p, q) != compose(q, p)) return false;
  return true;
}

}  // namespace

GammaStructure cyclic_action(const Monoid& m, const std::vector<int>& gen) {
  if (static_cast<int>(gen.size()) != m.n)
    throw ValidationError(Violation{"BadParams", {}});
  std::vector<bool> hit(m.n, false);
  for (int v : gen) {
    if (v < 0 || v >= m.n || hit[v])
      throw ValidationError(Violation{"BadParams", {}});
    hit[v] = true;
  }
  if (gen[0] != 0) throw ValidationError(Violation{"BadParams", {}});
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b)
      if (gen[m.add(a, b)] != m.add(gen[a], gen[b]))
        throw ValidationError(Violation{"NotAutomorphism", {a, b}});
  std::vector<std::vector<int>> pows;
  std::vector<int> id(m.n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<int> cur = id;
  do {
    pows.push_back(cur);
    cur = compose(gen, cur);
  } while (cur != id);
  const int d = static_cast<int>(pows.size());
  std::vector<int> action(d * m.n);
  for (int i = 0; i < d; ++i)
    for (int a = 0; a < m.n; ++a) action[i * m.n + a] = pows[i][a];
  return make_gamma(m, cyclic_group(d), std::move(action));
}

std::vector<GammaStructure> attach_actions(const Monoid& m, ActionSource src) {
  std::vector<GammaStructure> out;
  out.push_back(with_trivial_action(m));
  if (src == ActionSource::Trivial) return out;

  auto auts = automorphism_group(m);
  if (src == ActionSource::AllCyclicSubgroups) {
    std::set<PermSet> seen;
    for (const auto& pi : auts) {
      if (pi == auts.front()) continue;  // identity
      PermSet sub = close_under_composition({pi}, m.n);
      // First generator in lex order wins for its subgroup.
      if (seen.insert(sub).second) out.push_back(cyclic_action(m, pi));
    }
    return out;
  }

  // Full subgroup sweep: closure of known subgroups extended by one element.
  std::set<PermSet> subs{close_under_composition({}, m.n)};
  for (;;) {
    size_t before = subs.size();
    std::vector<PermSet> current(subs.begin(), subs.end());
    for (const auto& s : current)
      for (const auto& g : auts)
        if (!s.count(g)) {
          PermSet bigger = s;
          bigger.insert(g);
          subs.insert(close_under_composition(std::move(bigger), m.n));
        }
    if (subs.size() == before) break;
  }
  for (const auto& s : subs) {
    if (s.size() == 1) continue;  // trivial action already present
    if (!perm_group_abelian(s)) continue;
    out.push_back(action_from_perm_group(m, s));
  }
  return out;
}

GammaStructure paper_t7() {
  const std::vector<std::string> names{"0", "1", "x", "y", "z", "s", "b"};
  auto idx = [&](char c) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i][0] == c) return static_cast<int>(i);
    return -1;
  };
  const char* rows[7] = {"01xyzsb", "111sssb", "x11sssb", "yssyysb",
                         "zssyysb", "ssssssb", "bbbbbbs"};
  std::vector<int> t(49);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) t[i * 7 + j] = idx(rows[i][j]);
  return with_trivial_action(make_monoid(t, 7, names));
}

namespace {

[[noreturn]] void bad_params(const std::string& spec) {
  throw ValidationError(Violation{"BadParams", {}});
  (void)spec;
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Monoid truncated_naturals(int k) {
  const int n = k + 1;
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = std::min(a + b, k);
  return make_monoid(t, n);
}

GammaStructure shifted_power(int k, int d) {
  const int s = k + 1;
  long total = 1;
  for (int i = 0; i < d; ++i) {
    total *= s;
    if (total > kMaxElements) throw ValidationError(Violation{"BadParams", {k, d}});
  }
  const int n = static_cast<int>(total);
  auto digits = [&](int e) {
    std::vector<int> ds(d);
    for (int i = 0; i < d; ++i) {
      ds[i] = e % s;
      e /= s;
    }
    return ds;
  };
  auto index = [&](const std::vector<int>& ds) {
    int e = 0;
    for (int i = d - 1; i >= 0; --i) e = e * s + ds[i];
    return e;
  };
  std::vector<int> t(n * n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    auto da = digits(a);
    std::string nm;
    for (int i = 0; i < d; ++i) {
      if (i && s > 10) nm += ".";
      nm += std::to_string(da[i]);
    }
    names[a] = nm;
    for (int b = 0; b < n; ++b) {
      auto db = digits(b);
      std::vector<int> dc(d);
      for (int i = 0; i < d; ++i) dc[i] = std::min(da[i] + db[i], k);
      t[a * n + b] = index(dc);
    }
  }
  std::vector<int> action(d * n);
  for (int al = 0; al < d; ++al)
    for (int a = 0; a < n; ++a) {
      auto da = digits(a);
      std::vector<int> rot(d);
      for (int i = 0; i < d; ++i) rot[(i + al) % d] = da[i];
      action[al * n + a] = index(rot);
    }
  return make_gamma(make_monoid(t, n, names), cyclic_group(d),
                    std::move(action));
}

Monoid direct_sum(const std::vector<Monoid>& parts) {
  long total = 1;
  for (const auto& p : parts) {
    total *= p.n;
    if (total > kMaxElements) throw ValidationError(Violation{"BadParams", {}});
  }
  const int n = static_cast<int>(total);
  const int k = static_cast<int>(parts.size());
  auto digits = [&](int e) {
    std::vector<int> ds(k);
    for (int i = 0; i < k; ++i) {
      ds[i] = e % parts[i].n;
      e /= parts[i].n;
    }
    return ds;
  };
  auto index = [&](const std::vector<int>& ds) {
    int e = 0;
    for (int i = k - 1; i >= 0; --i) e = e * parts[i].n + ds[i];
    return e;
  };
  std::vector<int> t(n * n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    auto da = digits(a);
    std::string nm;
    for (int i = 0; i < k; ++i) {
      if (i) nm += ".";
      nm += parts[i].name(da[i]);
    }
    names[a] = nm;
    for (int b = 0; b < n; ++b) {
      auto db = digits(b);
      std::vector<int> dc(k);
      for (int i = 0; i < k; ++i) dc[i] = parts[i].add(da[i], db[i]);
      t[a * n + b] = index(dc);
    }
  }
  return make_monoid(t, n, names);
}

Monoid semilattice_from_poset(const std::vector<std::string>& rels) {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;
  for (const auto& r : rels) {
    auto lt = r.find('<');
    if (lt == std::string::npos) throw ValidationError(Violation{"BadParams", {}});
    int a = std::stoi(r.substr(0, lt));
    int b = std::stoi(r.substr(lt + 1));
    nodes = std::max({nodes, a + 1, b + 1});
    edges.emplace_back(a, b);
  }
  if (nodes > 6) throw ValidationError(Violation{"BadParams", {nodes}});
  std::vector<Mask> le(nodes);  // le[b] = set of a with a <= b
  for (int a = 0; a < nodes; ++a) le[a] = mask_bit(a);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [a, b] : edges) {
      Mask merged = le[b] | le[a];
      if (merged != le[b]) {
        le[b] = merged;
        changed = true;
      }
    }
  }
  std::vector<Mask> downs;
  for (Mask s = 0; s <= full_mask(nodes); ++s) {
    bool ok = true;
    for (int b = 0; b < nodes && ok; ++b)
      if (mask_has(s, b) && (le[b] & s) != le[b]) ok = false;
    if (ok) downs.push_back(s);
    if (nodes == 0) break;
  }
  std::sort(downs.begin(), downs.end(), [](Mask a, Mask b) {
    if (mask_size(a) != mask_size(b)) return mask_size(a) < mask_size(b);
    return mask_lex_less(a, b);
  });
  const int n = static_cast<int>(downs.size());
  auto pos = [&](Mask s) {
    return static_cast<int>(
        std::find(downs.begin(), downs.end(), s) - downs.begin());
  };
  std::vector<int> t(n * n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    std::string nm;
    for (int e : mask_elems(downs[a])) nm += static_cast<char>('0' + e);
    names[a] = nm.empty() ? "e" : nm;
    for (int b = 0; b < n; ++b) t[a * n + b] = pos(downs[a] | downs[b]);
  }
  return make_monoid(t, n, names);
}

}  // namespace

GammaStructure builtin(const std::string& spec) {
  std::string name = spec;
  std::string args;
  auto lp = spec.find('(');
  if (lp != std::string::npos) {
    if (spec.back() != ')') bad_params(spec);
    name = spec.substr(0, lp);
    args = spec.substr(lp + 1, spec.size() - lp - 2);
  }
  auto argv = split_args(args);
  try {
    if (name == "paper-T7" && argv.empty()) return paper_t7();
    if (name == "truncated-naturals" && argv.size() == 1)
      return with_trivial_action(truncated_naturals(std::stoi(argv[0])));
    if (name == "shifted-power" && argv.size() == 2)
      return shifted_power(std::stoi(argv[0]), std::stoi(argv[1]));
    if (name == "direct-sum" && !argv.empty()) {
      std::vector<Monoid> parts;
      for (const auto& a : argv) parts.push_back(builtin(a).monoid);
      return with_trivial_action(direct_sum(parts));
    }
    if (name == "semilattice-from-poset")
      return with_trivial_action(semilattice_from_poset(argv));
  } catch (const std::invalid_argument&) {
    bad_params(spec);
  } catch (const std::out_of_range&) {
    bad_params(spec);
  }
  bad_params(spec);
}

}  // namespace gmon
