// Finite groups, actions on monoids, orbits, and monoid automorphisms.

#pragma once

#include <optional>
#include <vector>

#include "gmon/monoid.hpp"

namespace gmon {

// Finite group as a Cayley table with identity at 0. Validation asserts
// commutativity by default (the algorithms never rely on it).
struct Group {
  int m = 0;
  std::vector<int> table;    // row-major m*m
  std::vector<int> inverse;  // inverse[a] * a == 0

  int mul(int a, int b) const { return table[a * m + b]; }
  bool same_as(const Group& o) const { return m == o.m && table == o.table; }
};

// Codes: BadShape, NoIdentity(a), NotAssociative(a,b,c), NoInverse(a),
// NotAbelian(a,b).
std::optional<Violation> check_group(const std::vector<int>& table, int m,
                                     bool require_abelian = true);

Group make_group(const std::vector<int>& table, int m,
                 bool require_abelian = true);

Group trivial_group();
Group cyclic_group(int d);

// A monoid together with a validated group action: the Γ-monoid bundle.
struct GammaStructure {
  Monoid monoid;
  Group group;
  std::vector<int> action;  // row-major m*n, action[al*n + a] = ^al a

  int act(int alpha, int a) const { return action[alpha * monoid.n + a]; }
  int n() const { return monoid.n; }
  int m() const { return group.m; }
};

// Identity, composition and additivity laws plus per-row bijectivity.
// Codes: BadShape, IdentityLaw(a), CompositionLaw(al,be,a),
// AdditivityLaw(al,a,b), NotPermutation(al).
std::optional<Violation> check_action(const Group& g, const Monoid& mo,
                                      const std::vector<int>& action);

GammaStructure make_gamma(Monoid mo, Group g, std::vector<int> action);

// Trivial-Γ bundle over a monoid.
GammaStructure with_trivial_action(Monoid mo);

Mask orbit(const GammaStructure& gs, int a);

// All permutations pi with pi(0)=0 and pi(a+b)=pi(a)+pi(b), by backtracking;
// sorted lexicographically (the identity comes first).
std::vector<std::vector<int>> automorphism_group(const Monoid& m);

}  // namespace gmon
