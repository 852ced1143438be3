#include "gmon/monoid.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace gmon {

int mask_size(Mask m) { return std::popcount(m); }

std::vector<int> mask_elems(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < kMaxElements; ++i)
    if (mask_has(m, i)) out.push_back(i);
  return out;
}

Mask mask_of(const std::vector<int>& elems) {
  Mask m = 0;
  for (int e : elems) m |= mask_bit(e);
  return m;
}

bool mask_lex_less(Mask a, Mask b) {
  if (a == b) return false;
  Mask diff = a ^ b;
  int low = std::countr_zero(diff);
  // Sorted element lists first differ at index `low`; the mask containing it
  // is lexicographically smaller there unless the other list ended already.
  Mask above_a = a >> low, above_b = b >> low;
  if (above_b == 0) return false;  // b exhausted, a has the extra element
  if (above_a == 0) return true;
  return mask_has(a, low);
}

std::string Violation::describe(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) os << ",";
    int a = args[i];
    if (a >= 0 && a < static_cast<int>(names.size()))
      os << names[a];
    else
      os << a;
  }
  os << ")";
  return os.str();
}

std::string Violation::describe() const { return describe({}); }

int Monoid::sum(Mask s) const {
  int acc = 0;
  for (int e : mask_elems(s)) acc = add(acc, e);
  return acc;
}

std::optional<Violation> check_monoid(const std::vector<std::string>& names,
                                      const std::vector<int>& table, int n) {
  if (n <= 0 || n > kMaxElements ||
      table.size() != static_cast<size_t>(n) * n ||
      names.size() != static_cast<size_t>(n))
    return Violation{"BadShape", {n}};
  for (int v : table)
    if (v < 0 || v >= n) return Violation{"BadShape", {n}};
  {
    std::unordered_set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size()) return Violation{"BadShape", {n}};
  }
  auto at = [&](int a, int b) { return table[a * n + b]; };
  for (int a = 0; a < n; ++a)
    if (at(0, a) != a || at(a, 0) != a) return Violation{"NotIdentity", {a}};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (at(a, b) != at(b, a)) return Violation{"NotCommutative", {a, b}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          return Violation{"NotAssociative", {a, b, c}};
  return std::nullopt;
}

Monoid make_monoid(const std::vector<int>& table, int n,
                   std::vector<std::string> names) {
  if (names.empty()) {
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  if (auto v = check_monoid(names, table, n)) throw ValidationError(*v);
  return Monoid{n, std::move(names), table};
}

std::optional<int> leq(const Monoid& m, int a, int b) {
  for (int c = 0; c < m.n; ++c)
    if (m.add(a, c) == b) return c;
  return std::nullopt;
}

PropertyVerdict is_conical(const Monoid& m) {
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b)
      if (m.add(a, b) == 0 && (a != 0 || b != 0)) return {false, {a, b}};
  return {};
}

PropertyVerdict is_cancellative(const Monoid& m) {
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b)
      for (int c = b + 1; c < m.n; ++c)
        if (m.add(a, b) == m.add(a, c)) return {false, {a, b, c}};
  return {};
}

std::optional<std::array<int, 4>> refinement_witness(const Monoid& m, int a,
                                                     int b, int c, int d) {
  if (m.add(a, b) != m.add(c, d))
    throw ValidationError(Violation{"PreconditionViolated", {a, b, c, d}});
  for (int e1 = 0; e1 < m.n; ++e1)
    for (int e2 = 0; e2 < m.n; ++e2) {
      if (m.add(e1, e2) != a) continue;
      for (int e3 = 0; e3 < m.n; ++e3) {
        if (m.add(e1, e3) != c) continue;
        for (int e4 = 0; e4 < m.n; ++e4)
          if (m.add(e3, e4) == b && m.add(e2, e4) == d)
            return std::array<int, 4>{e1, e2, e3, e4};
      }
    }
  return std::nullopt;
}

PropertyVerdict is_refinement(const Monoid& m) {
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b)
      for (int c = 0; c < m.n; ++c)
        for (int d = 0; d < m.n; ++d)
          if (m.add(a, b) == m.add(c, d) && !refinement_witness(m, a, b, c, d))
            return {false, {a, b, c, d}};
  return {};
}

Mask minimal_elements(const Monoid& m, MinimalMode mode) {
  Mask out = 0;
  for (int a = 0; a < m.n; ++a) {
    bool minimal = true;
    for (int b = 0; b < m.n && minimal; ++b) {
      if (mode == MinimalMode::Nonzero && below(m, b, 0)) continue;
      if (below(m, b, a) && !below(m, a, b)) minimal = false;
    }
    if (minimal) out |= mask_bit(a);
  }
  return out;
}

}  // namespace gmon
