// Γ-series, Schreier refinement, composition series, Jordan-Hölder machinery,
// chain conditions and the cyclic/comparable/noncomparable classification.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "gmon/quotient.hpp"

namespace gmon {

// Ascending chain {0} = I_0 ⊆ ... ⊆ I_k = T of Γ-order-ideals.
struct Series {
  std::vector<Mask> chain;
  int length() const;  // number of proper inclusions
};

enum class TypeTag { Cyclic, Comparable, Noncomparable, Unclassified, Mixed };
std::string to_string(TypeTag t);

struct FactorDescriptor {
  std::string key;  // canonical form of the simple quotient
  int size = 0;
  TypeTag tag = TypeTag::Unclassified;
  bool operator<(const FactorDescriptor& o) const { return key < o.key; }
  bool operator==(const FactorDescriptor& o) const { return key == o.key; }
};

// Canonical form when the factor is within the canonical-form cap; above it a
// deterministic invariant fingerprint ("sig:..." so the schemes never collide).
// The fingerprint is not a complete invariant; corpus-scale factors always get
// the exact key.
std::string factor_key(const GammaStructure& f);

struct SeriesCheck {
  bool ok = true;
  std::string reason;  // "BadEndpoint", "NotNested(i)", "NotIdeal(i)"
  int index = -1;
};
SeriesCheck is_gamma_series(const GammaStructure& gs, const Series& s);

struct SchreierResult {
  Series refined1, refined2;      // after collapsing duplicate steps
  int collapsed1 = 0, collapsed2 = 0;
  // Pairs of uncollapsed factor positions (i*m+j) verified Γ-isomorphic.
  std::vector<std::pair<int, int>> pairing;
  bool all_pairs_isomorphic = false;
};

// Interleaves two Γ-series with terms G(i,j) = G_i + (G_{i+1} ∩ H_j) and the
// symmetric H(j,i); each paired factor is verified isomorphic explicitly.
// Throws NotRefinementMonoid (the theorem's hypothesis).
SchreierResult schreier_refinement(const GammaStructure& gs, const Series& s1,
                                   const Series& s2);

// Maximal chains of the ideal lattice. Also asserts the cover ⟺ simple-factor
// equivalence over all nested lattice pairs.
std::vector<Series> all_composition_series(const GammaStructure& gs);

// A composition series realizing the lattice height (maximal cover chains can
// differ in length without refinement); deterministic tie-break by
// lexicographically smallest element set.
Series one_composition_series(const GammaStructure& gs);

GammaStructure series_factor(const GammaStructure& gs, const Series& s, int i);

struct EquivalenceResult {
  bool equivalent = false;
  std::vector<std::pair<int, int>> pairing;  // factor index pairs when equal
};
// Multiset equality of canonical factor keys. Throws NotCompositionSeries.
EquivalenceResult series_equivalent(const GammaStructure& gs, const Series& a,
                                    const Series& b);

std::vector<FactorDescriptor> jordan_holder_factors(const GammaStructure& gs);

struct ChainReport {
  int height = 0;                 // longest strict chain in the ideal lattice
  int composition_length = 0;
  bool noetherian = true, artinian = true;  // finite lattice: always true
  bool bound_holds = false;       // no Γ-series exceeds composition_length
};
ChainReport chain_condition_report(const GammaStructure& gs);

struct SplitReport {
  bool splice_ok = false;    // series of I + preimage of series of T/I works
  bool restrict_ok = false;  // a series of T meets I in a series of I
  Series spliced;
};
SplitReport split_and_reassemble(const GammaStructure& gs, Mask ideal);

// Partial sums of distinct atoms; factors verified isomorphic to the atoms.
// Throws NotRefinementMonoid / NotAtom(i). The series lives in the
// sub-Γ-monoid on the total sum.
struct MinimalIdealSeries {
  Series series;          // chain inside gs (element indices of gs)
  Mask carrier = 0;       // the sum of all atoms
  bool factors_match = false;
  TypeTag tag = TypeTag::Unclassified;
};
MinimalIdealSeries minimal_ideal_series(const GammaStructure& gs,
                                        const std::vector<Mask>& atom_list);

// Type of a simple Γ-monoid. Quantifiers range over non-identity group
// elements and over elements not below 0; when no element qualifies the tag
// is Noncomparable by vacuity (documented convention).
TypeTag classify_simple(const GammaStructure& gs);

TypeTag classify_series(const GammaStructure& gs, const Series& s,
                        std::vector<TypeTag>* breakdown = nullptr);

}  // namespace gmon
