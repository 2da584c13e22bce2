#ifndef MONOIDLAB_FORMATS_HPP_
#define MONOIDLAB_FORMATS_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monoidlab/eqlogic.hpp"
#include "monoidlab/lattice.hpp"
#include "monoidlab/monoid.hpp"

namespace monoidlab {

// Basis files: one identity per line ("u = v", U+2248 accepted), '#' starts
// a comment, blank lines ignored.
IdentityBasis parse_basis_text(std::string_view text, std::string name = "");
IdentityBasis load_basis_file(const std::string& path);

// Monoid files: a sequence of definitions.  Each starts with "monoid <name>"
// followed by either an explicit table
//     size <k> / identity <i> / table / k rows of k indices
// or a construction shorthand
//     construct S <word> | construct C <n> | construct LRB
//     construct product <name> <name>
// where product operands are earlier definitions or builtin names
// (T, SL2, LRB, C<k>).  A bare construct line defines an anonymous monoid.
struct MonoidFile {
  std::vector<std::pair<std::string, FiniteMonoid>> monoids;
  const FiniteMonoid& last() const;
};

MonoidFile parse_monoid_text(std::string_view text);
MonoidFile load_monoid_file(const std::string& path);

// Builtin names usable on the command line and in product operands.
bool is_builtin_monoid(const std::string& name);
FiniteMonoid builtin_monoid(const std::string& name);

// CLI resolution: "construct ..." inline, builtin name, else file path
// (taking the last definition in the file).
FiniteMonoid resolve_monoid(const std::string& spec);

// Lattice files: "lattice <name>" / "size <n>" / "leq" / lines "i j"
// meaning i <= j (reflexive-transitive closure applied).
FiniteLattice parse_lattice_text(std::string_view text);
FiniteLattice load_lattice_file(const std::string& path);

std::string monoid_to_text(const FiniteMonoid& m, const std::string& name);

}  // namespace monoidlab

#endif  // MONOIDLAB_FORMATS_HPP_
