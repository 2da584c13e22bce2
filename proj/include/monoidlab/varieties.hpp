#ifndef MONOIDLAB_VARIETIES_HPP_
#define MONOIDLAB_VARIETIES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoidlab/monoid.hpp"
#include "monoidlab/word.hpp"

namespace monoidlab {

inline constexpr std::size_t kDefaultFreeObjectBudget = 1000000;

// Letters handed to free-object generators, in order: x, y, z, then a, b, ...
std::string generator_letters(int rank);

// The relatively free object of var(N1) v ... v var(Nm) on `letters`,
// realized as the submonoid of functions from generator assignments into
// the factors, generated by the coordinate projections.  Elements are
// concatenated evaluation vectors over each factor's assignment space;
// two words denote the same element exactly when the joined variety
// satisfies their equation.
struct FreeObject {
  std::vector<FiniteMonoid> factors;
  std::string letters;                                // one letter per generator
  std::vector<std::vector<std::uint8_t>> elements;    // evaluation vectors
  std::vector<Word> reps;                             // shortlex-least representatives
  std::vector<int> generators;                        // element id per projection
  std::vector<int> transitions;                       // id * rank + g -> id
  int identity = 0;

  int rank() const { return static_cast<int>(letters.size()); }
  int count() const { return static_cast<int>(elements.size()); }
  int step(int id, int gen) const {
    return transitions[static_cast<std::size_t>(id) * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(gen)];
  }
  // Follows transitions; throws InputError on a letter outside `letters`.
  int element_of(const Word& w) const;
};

// Single-ambient form: the free object of var(N) on `rank` generators.
FreeObject free_object(const FiniteMonoid& n, int rank,
                       std::size_t element_budget = kDefaultFreeObjectBudget);
// Joint form over several ambients; var(N1 x N2) = var(N1) v var(N2), so
// this is the free object of the join without materializing the product.
FreeObject free_object_joint(std::vector<FiniteMonoid> factors, std::string letters,
                             std::size_t element_budget = kDefaultFreeObjectBudget);

enum class MembershipStatus { member, non_member, unknown };

struct MembershipResult {
  MembershipStatus status;
  // u = v holding in N but failing in M, shortlex-lesser side first.
  std::optional<Identity> separating;
  std::string note;
};

// Decides M in var(N) by checking that evaluation onto a greedily chosen
// generating tuple of M is well-defined on the free object of var(N).
MembershipResult membership(const FiniteMonoid& m, const FiniteMonoid& n,
                            std::size_t element_budget = kDefaultFreeObjectBudget);

enum class IsotermStatus { isoterm, not_isoterm, unknown };

struct IsotermResult {
  IsotermStatus status;
  std::optional<Word> witness;  // a word w' != w with N |= w = w'
};

// Decides whether w is an isoterm for the joined variety of the factors:
// builds the free-object DFA over content(w) plus one fresh letter and
// tests that exactly one word reaches the class of w.  Witnesses prefer
// the content-only alphabet.
IsotermResult isoterm_joint(const std::vector<FiniteMonoid>& factors, const Word& w,
                            std::size_t element_budget = kDefaultFreeObjectBudget);
IsotermResult isoterm(const FiniteMonoid& n, const Word& w,
                      std::size_t element_budget = kDefaultFreeObjectBudget);

struct WordClassResult {
  bool infinite;
  // Words u over content(w) with N |= w = u, shortlex, up to length_cap.
  std::vector<Word> words;
};

WordClassResult word_class(const FiniteMonoid& n, const Word& w, std::size_t length_cap,
                           std::size_t element_budget = kDefaultFreeObjectBudget);

// Direct product with variety semantics: var(result) = var(a) v var(b).
FiniteMonoid join_generator(const FiniteMonoid& a, const FiniteMonoid& b);

}  // namespace monoidlab

#endif  // MONOIDLAB_VARIETIES_HPP_
