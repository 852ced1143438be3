// Instance supply: exhaustive enumeration of small commutative monoids,
// actions from automorphism subgroups, and named builtin families.

#pragma once

#include <string>
#include <vector>

#include "gmon/action.hpp"

namespace gmon {

constexpr int kEnumerationCap = 6;

// All commutative monoids with identity at 0, up to isomorphism, sorted by
// canonical form. Throws SizeLimit above the cap.
std::vector<Monoid> enumerate_monoids(int n);

enum class ActionSource { Trivial, AllCyclicSubgroups, FullAutomorphismSubgroups };

// Bundles for each chosen subgroup of Aut(M); the trivial action is always
// first. Cyclic subgroups use their lexicographically least generator; only
// abelian subgroups are used (matching the standing assumption on Γ).
std::vector<GammaStructure> attach_actions(const Monoid& m, ActionSource src);

// Named families:
//   paper-T7
//   truncated-naturals(k)            {0..k}, a+b = min(a+b,k)
//   shifted-power(k,d)               truncated-naturals(k)^d with Z/d shift
//   direct-sum(<spec>,<spec>,...)    componentwise sum, trivial action
//   semilattice-from-poset(i<j,...)  down-sets of the poset under union
// Throws BadParams for anything else.
GammaStructure builtin(const std::string& spec);

// T7 from the running counterexample, names 0 1 x y z s b, trivial action.
GammaStructure paper_t7();

// Z/d bundle generated by one monoid automorphism, d = its order. Throws
// BadParams for a malformed permutation, NotAutomorphism otherwise.
GammaStructure cyclic_action(const Monoid& m, const std::vector<int>& gen);

}  // namespace gmon
