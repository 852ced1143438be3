// Quotients by ρ_I, homomorphisms, Γ-isomorphism search, canonical forms,
// and the isomorphism-theorem checkers.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmon/ideals.hpp"

namespace gmon {

struct Partition {
  std::vector<int> class_of;             // element -> block index
  std::vector<std::vector<int>> blocks;  // sorted by least representative
  int size() const { return static_cast<int>(blocks.size()); }
  bool operator==(const Partition&) const = default;
};

// ρ_H: transitive closure of coset overlap (x+H) ∩ (y+H) != {}. For arbitrary
// submonoids the closure can be proper; raw_transitive reports whether the raw
// relation was already an equivalence. Throws NotSubmonoid.
Partition rho_partition(const Monoid& m, Mask h, bool* raw_transitive = nullptr);

struct QuotientPresentation {
  Mask ideal = 0;
  Partition classes;
  GammaStructure quotient;    // over the blocks, same acting group
  std::vector<int> projection;  // element -> block index (same as class_of)
};

// Quotient Γ-monoid by a verified Γ-order-ideal. Well-definedness of the block
// operation and action is verified over all representatives; a failure throws
// WellDefinednessFailure (a bug trap, not an expected path). Also asserts that
// coset overlap is already transitive and that block 0 equals the ideal.
QuotientPresentation quotient(const GammaStructure& gs, Mask ideal);

// Sub-Γ-monoid on an action-and-sum-closed subset (ideals qualify);
// index_map[i] is the original index of sub-element i.
GammaStructure restrict_to(const GammaStructure& gs, Mask s,
                           std::vector<int>* index_map = nullptr);

// The factor J/I: quotient of the restriction to J by the image of I.
// Requires I ⊆ J, both ideals of gs.
GammaStructure factor(const GammaStructure& gs, Mask i, Mask j);

struct HomMap {
  const GammaStructure* source = nullptr;
  const GammaStructure* target = nullptr;
  std::vector<int> map;
};

// f(0)=0, additivity, equivariance. Codes: NotUnital, NotAdditive(a,b),
// NotEquivariant(al,a), GroupMismatch, BadShape.
std::optional<Violation> check_hom(const HomMap& f);

Mask kernel(const HomMap& f);  // preimage of the target identity

struct FirstIsoReport {
  bool rho_equal = false;  // ρ_f == ρ_{Ker f}
  bool phi_iso = false;    // induced map source/ρ_{Ker f} -> target bijective
};

// Requires a validated surjective hom (throws NotSurjective). The two verdicts
// are asserted to coincide.
FirstIsoReport first_iso_check(const HomMap& f);

// Additive unital equivariant bijection, backtracking with invariant pruning.
// Throws GroupMismatch if the acting groups differ (table equality), SizeLimit
// above 10 elements.
std::optional<std::vector<int>> find_gamma_isomorphism(const GammaStructure& a,
                                                       const GammaStructure& b);

// Γ-isomorphism invariant: minimal (table, action) serialization over all
// element relabelings fixing 0. Throws SizeLimit above 8 elements.
std::string canonical_form(const GammaStructure& gs);
std::string canonical_form(const Monoid& m);  // isomorphism invariant, trivial Γ

// (A+B)/A ≅ B for ideals with A∩B={0} in a refinement Γ-monoid.
bool check_lemma_sum_quotient(const GammaStructure& gs, Mask a, Mask b);

// Q/(L+(Q∩N)) ≅ (Q+N)/(L+N) for ideals with L ⊆ Q, refinement Γ-monoid.
bool check_zassenhaus(const GammaStructure& gs, Mask q, Mask l, Mask n);

// ((A∩B)+B')/((A'∩B)+B') ≅ ((A∩B)+A')/((A∩B')+A') for A'⊆A, B'⊆B.
bool check_butterfly(const GammaStructure& gs, Mask a, Mask a1, Mask b,
                     Mask b1);

}  // namespace gmon
