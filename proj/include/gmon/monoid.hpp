// Finite commutative monoids as Cayley tables, with order-theoretic predicates.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmon {

// Subsets of element indices; element count is capped at 64.
using Mask = std::uint64_t;

constexpr int kMaxElements = 64;

inline bool mask_has(Mask m, int i) { return (m >> i) & 1u; }
inline Mask mask_bit(int i) { return Mask{1} << i; }
inline Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
int mask_size(Mask m);
std::vector<int> mask_elems(Mask m);
Mask mask_of(const std::vector<int>& elems);
// Lexicographic order on the sorted element lists (not numeric mask order).
bool mask_lex_less(Mask a, Mask b);

// A failed validation or a counterexample, as a code plus witness indices.
struct Violation {
  std::string code;
  std::vector<int> args;
  std::string describe(const std::vector<std::string>& names) const;
  std::string describe() const;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(Violation v)
      : std::runtime_error(v.code + " " + v.describe()), violation(std::move(v)) {}
  Violation violation;
};

// Always-on internal consistency check; these guard claims the algorithms
// re-derive rather than trust (they must never fire on validated inputs).
inline void internal_check(bool cond, const char* code) {
  if (!cond) throw ValidationError(Violation{code, {}});
}

// Commutative monoid on indices 0..n-1 with identity at 0.
struct Monoid {
  int n = 0;
  std::vector<std::string> names;  // n distinct tokens, names[0] is the identity
  std::vector<int> table;          // row-major n*n

  int add(int a, int b) const { return table[a * n + b]; }
  int sum(Mask s) const;  // fold of + over the elements of s (0 for empty)
  const std::string& name(int a) const { return names[a]; }
};

// Identity, commutativity and associativity; returns the first violated axiom.
// Codes: BadShape, NotIdentity(a), NotCommutative(a,b), NotAssociative(a,b,c).
std::optional<Violation> check_monoid(const std::vector<std::string>& names,
                                      const std::vector<int>& table, int n);

// Throws ValidationError on the first violated axiom. Default names are the
// decimal indices.
Monoid make_monoid(const std::vector<int>& table, int n,
                   std::vector<std::string> names = {});

// Algebraic pre-order: least c with a+c == b, absent if a is not below b.
std::optional<int> leq(const Monoid& m, int a, int b);
inline bool below(const Monoid& m, int a, int b) { return leq(m, a, b).has_value(); }
inline bool incomparable(const Monoid& m, int a, int b) {
  return !below(m, a, b) && !below(m, b, a);
}

struct PropertyVerdict {
  bool ok = true;
  std::vector<int> witness;  // counterexample when !ok
};

PropertyVerdict is_conical(const Monoid& m);       // witness (a,b)
PropertyVerdict is_cancellative(const Monoid& m);  // witness (a,b,c)

// Lexicographically least (e1,e2,e3,e4) with a=e1+e2, b=e3+e4, c=e1+e3,
// d=e2+e4. Throws ValidationError(PreconditionViolated) unless a+b == c+d.
std::optional<std::array<int, 4>> refinement_witness(const Monoid& m, int a,
                                                     int b, int c, int d);

// Witness is the first equal-sum quadruple (a,b,c,d) with no refinement.
PropertyVerdict is_refinement(const Monoid& m);

enum class MinimalMode { Literal, Nonzero };

// Literal: a minimal iff for all b, b<=a implies a<=b.
// Nonzero: the quantifier skips b with b<=0.
Mask minimal_elements(const Monoid& m, MinimalMode mode);

}  // namespace gmon
