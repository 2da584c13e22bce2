#ifndef MONOIDLAB_LATTICE_HPP_
#define MONOIDLAB_LATTICE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace monoidlab {

// A finite lattice: order matrix plus computed meet/join tables.
// Immutable after validation.
class FiniteLattice {
 public:
  // Reflexive-transitive closure of the given pairs; rejects cycles and
  // pairs lacking a unique meet or join, naming a witness pair.
  static FiniteLattice validate(int size, const std::vector<std::pair<int, int>>& leq_pairs,
                                std::string name = "");

  int size() const noexcept { return size_; }
  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * size_ + b] != 0; }
  int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * size_ + b]; }
  int join(int a, int b) const { return join_[static_cast<std::size_t>(a) * size_ + b]; }
  int bottom() const noexcept { return bottom_; }
  int top() const noexcept { return top_; }
  const std::string& name() const noexcept { return name_; }

  // Same carrier with the order reversed.
  FiniteLattice dual() const;

  // Lexicographically minimal order matrix over all permutations; equal
  // exactly for isomorphic lattices.
  std::vector<std::uint8_t> canonical_matrix() const;

 private:
  FiniteLattice() = default;
  int size_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<int> meet_;
  std::vector<int> join_;
  int bottom_ = 0;
  int top_ = 0;
  std::string name_;
};

// Witness semantics: `holds` == false comes with the first falsifying pair
// in index order; replaying the defining formula on it fails again.
struct PredicateResult {
  bool holds;
  std::optional<std::pair<int, int>> witness;
};

// y <= z  ->  (x v y) ^ z = (x ^ z) v y
PredicateResult is_modular_element(const FiniteLattice& l, int x);
// (x v y) ^ z = (x ^ z) v (y ^ z)
PredicateResult is_standard_element(const FiniteLattice& l, int x);
PredicateResult is_costandard_element(const FiniteLattice& l, int x);
// (x v y) ^ (y v z) ^ (z v x) = (x ^ y) v (y ^ z) v (z ^ x)
PredicateResult is_neutral_element(const FiniteLattice& l, int x);
// x <= y  ->  x v (y ^ z) = y ^ (x v z)
PredicateResult is_lower_modular_element(const FiniteLattice& l, int x);
PredicateResult is_upper_modular_element(const FiniteLattice& l, int x);

// x is non-modular iff some u < w has x v u = x v w and x ^ u = x ^ w;
// then {x ^ u, u, w, x, x v u} spans a pentagon.
std::optional<std::pair<int, int>> find_pentagon_witness(const FiniteLattice& l, int x);

struct ElementReport {
  int element;
  bool neutral, standard, costandard, modular, lower_modular, upper_modular;
  // witness per failed flag, keyed by flag name
  std::vector<std::pair<std::string, std::pair<int, int>>> witnesses;
};

// Runs all six predicates and consistency-checks the implication chain
// (neutral => standard ^ costandard, standard => modular ^ lower-modular,
// costandard => modular ^ upper-modular); a violation is a predicate bug
// and throws Error.
ElementReport classify_element(const FiniteLattice& l, int x);

bool is_distributive(const FiniteLattice& l);

// All lattices on n elements up to isomorphism, ascending canonical order.
std::vector<FiniteLattice> enumerate_lattices(int n, int max_size = 7);

struct Sublattice {
  FiniteLattice lattice;
  // embedding[i] = index in the parent of element i
  std::vector<int> embedding;
};

Sublattice sublattice_generated(const FiniteLattice& l, std::vector<int> subset);

// Canonical examples.
FiniteLattice chain_lattice(int n);
FiniteLattice boolean_lattice(int num_atoms);
FiniteLattice n5_lattice();  // 0=bottom, 1=u, 2=w (u<w), 3=side, 4=top
FiniteLattice m3_lattice();  // 0=bottom, 1..3 atoms, 4=top

struct MinedExample {
  FiniteLattice lattice;
  int element;
  std::pair<int, int> standard_witness;
};

// Smallest lattice (by size, then enumeration order) with an element that
// is modular and lower-modular but not standard.
std::optional<MinedExample> mine_modular_lowermodular_not_standard(int max_size);

}  // namespace monoidlab

#endif  // MONOIDLAB_LATTICE_HPP_
