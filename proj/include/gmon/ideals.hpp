// Γ-order-ideals: recognition, generation, lattice enumeration, closure lemmas.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmon/action.hpp"

namespace gmon {

struct IdealCheck {
  bool ok = true;
  // "Empty", "SumEscapes(al,be,a,b)" (forward direction fails),
  // "NotHereditary(a,b)" (a+b in S but a or b outside, at alpha=beta=0),
  // plus the biconditional witness indices.
  std::string reason;
  std::vector<int> witness;
};

// The biconditional characterization: ^al a + ^be b in S iff a,b in S.
// The result is asserted identical to the submonoid/action-closed/hereditary
// characterization; the empty set counts as no ideal under both (convention).
IdealCheck is_order_ideal(const GammaStructure& gs, Mask s);

// The two characterizations evaluated separately (exposed for the property
// suites; is_order_ideal asserts their agreement on nonempty sets).
bool order_ideal_biconditional(const GammaStructure& gs, Mask s);
bool order_ideal_hereditary_form(const GammaStructure& gs, Mask s);

bool is_submonoid(const Monoid& m, Mask s);

// x, x+y in S implies y in S. Throws NotSubmonoid unless S is a submonoid.
bool is_normal(const Monoid& m, Mask s);

// Least fixed point: 0, sums, action images and downward closure under <=.
Mask generated_ideal(const GammaStructure& gs, Mask seed);

// The least ideal <0>. Equals {0} exactly when the monoid is conical; in the
// presence of invertible elements it is their downward-closed span, and every
// series bottoms out here rather than at the (non-ideal) singleton.
Mask zero_ideal(const GammaStructure& gs);

struct IdealLattice {
  std::vector<Mask> ideals;                  // sorted by size, then lex
  std::vector<std::pair<int, int>> covers;   // (i,j): ideals[i] covered by ideals[j]
  int index_of(Mask s) const;                // -1 if absent
};

// Principal-ideal closure under intersection and join; cross-checked against
// the exhaustive subset filter when n <= crosscheck_limit.
IdealLattice all_order_ideals(const GammaStructure& gs,
                              int crosscheck_limit = 20);

// Elementwise sum {a+b : a in A, b in B} plus the ideal verdict for it.
struct SumResult {
  Mask sum = 0;
  IdealCheck verdict;
};
SumResult ideal_sum(const GammaStructure& gs, Mask a, Mask b);

// Intersection of ideals; asserted to be an ideal unconditionally.
Mask ideal_intersect(const GammaStructure& gs, Mask a, Mask b);

std::vector<Mask> atoms(const IdealLattice& lat);

bool is_simple(const GammaStructure& gs);

}  // namespace gmon
