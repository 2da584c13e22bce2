#ifndef MONOIDLAB_MONOID_HPP_
#define MONOIDLAB_MONOID_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monoidlab/word.hpp"

namespace monoidlab {

// Maps letters to element indices; deterministic iteration order matters
// for witness reporting.
using Assignment = std::map<char, int>;

// A finite monoid given by its multiplication table.  Immutable after
// validation.  All built-in constructions put the identity at index 0.
class FiniteMonoid {
 public:
  // Validates associativity and the two-sided identity law.  When
  // `identity` is absent the identity element is located by scanning.
  // Throws InputError with the offending triple on failure.
  static FiniteMonoid validate(int size, std::vector<int> table,
                               std::optional<int> identity = std::nullopt,
                               std::vector<std::string> names = {},
                               std::string monoid_name = "");

  int size() const noexcept { return size_; }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * size_ + b]; }
  const std::vector<int>& table() const noexcept { return table_; }

  const std::string& name() const noexcept { return name_; }
  // Element label, or the index in decimal when no labels were provided.
  std::string element_name(int e) const;
  bool has_element_names() const noexcept { return !names_.empty(); }

  // Lexicographically least table over all permutations fixing the
  // identity, with the identity moved to index 0 first.  Two monoids are
  // isomorphic iff their canonical tables agree.
  std::vector<int> canonical_table() const;
  bool isomorphic_to(const FiniteMonoid& other) const;

 private:
  FiniteMonoid() = default;
  int size_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<std::string> names_;
  std::string name_;
};

// Left-to-right fold of the table over the letter images.
// Throws InputError when w uses a letter outside the assignment.
int evaluate(const FiniteMonoid& m, const Assignment& a, const Word& w);

struct Satisfaction {
  bool holds;
  // First failing assignment in odometer order over sorted letters.
  Assignment witness;
};

// Exhaustive check over all |M|^|content| assignments.
Satisfaction satisfies(const FiniteMonoid& m, const Identity& id);
bool satisfies_all(const FiniteMonoid& m, const std::vector<Identity>& ids);

// "x=g y=g^2" using element names, letters ascending.
std::string assignment_str(const FiniteMonoid& m, const Assignment& a);

// --- the paper's concrete constructions ------------------------------------

// Rees quotient over the non-subwords of w: elements are the subwords of w
// in shortlex order plus a zero at the last index; products that leave the
// subword set are sent to zero.
FiniteMonoid s_monoid(const Word& w);

// {1, g, ..., g^n} with g^n * g = g^n; the canonical generator of C_n for
// n >= 2 and of SL for n = 1.
FiniteMonoid cyclic_chain(int n);

// Two-element left-zero semigroup with an identity adjoined.
FiniteMonoid lrb_monoid();

FiniteMonoid trivial_monoid();
// The two-element semilattice monoid {1, e}.
FiniteMonoid sl2_monoid();

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b);

struct Submonoid {
  FiniteMonoid monoid;
  // embedding[i] = index in the parent of element i.
  std::vector<int> embedding;
};

// Closure of generators plus the identity under the table, re-indexed with
// the identity first.
Submonoid submonoid(const FiniteMonoid& m, const std::vector<int>& generators);

// --- structure tests --------------------------------------------------------

struct IndexPeriod {
  int index;
  int period;
};

// Smallest i >= 1, p >= 1 with x^(i+p) = x^i.
IndexPeriod index_period(const FiniteMonoid& m, int x);

// Union of groups: every element has index 1.
bool is_completely_regular(const FiniteMonoid& m);
// Every element has a two-sided inverse.
bool is_group(const FiniteMonoid& m);
bool is_commutative(const FiniteMonoid& m);

// All monoids on `size` elements up to isomorphism, identity at index 0,
// emitted in ascending canonical-table order.
std::vector<FiniteMonoid> enumerate_monoids(int size, int max_size = 4);

}  // namespace monoidlab

#endif  // MONOIDLAB_MONOID_HPP_
