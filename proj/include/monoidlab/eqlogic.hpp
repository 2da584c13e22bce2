#ifndef MONOIDLAB_EQLOGIC_HPP_
#define MONOIDLAB_EQLOGIC_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoidlab/monoid.hpp"
#include "monoidlab/word.hpp"

namespace monoidlab {

struct IdentityBasis {
  std::vector<Identity> identities;
  std::string name;
};

enum class DeriveStatus { proved, refuted, unknown };

// One rewrite: replace the instance subst(from) at `pos` by subst(to),
// where (from, to) is the basis identity read left-to-right when `forward`
// and right-to-left otherwise.
struct RewriteStep {
  std::size_t pos;
  int identity_index;
  bool forward;
  Substitution subst;
};

struct DerivationVerdict {
  DeriveStatus status = DeriveStatus::unknown;
  // Non-empty only when proved; replays from goal.lhs to goal.rhs.
  std::vector<RewriteStep> trace;
  std::optional<FiniteMonoid> countermodel;  // when refuted
  Assignment counter_assignment;
  std::uint64_t steps_spent = 0;

  bool proved() const { return status == DeriveStatus::proved; }
  bool refuted() const { return status == DeriveStatus::refuted; }
};

// Applies one step; throws InputError when the instance does not match.
Word apply_step(const IdentityBasis& basis, const Word& w, const RewriteStep& step);
// Replays a full trace from goal.lhs and checks it ends at goal.rhs.
bool trace_replays(const IdentityBasis& basis, const Identity& goal,
                   const std::vector<RewriteStep>& trace);

// Bidirectional breadth-first search over words reachable from either side
// of the goal by rewriting with substituted basis identities, capped at
// max_word_len (default: longer goal side + 6) and max_steps expansions
// (default 10^5).  Sound; never refutes; returns unknown on exhaustion.
DerivationVerdict derive_bounded(const IdentityBasis& basis, const Identity& goal,
                                 std::optional<std::size_t> max_word_len = std::nullopt,
                                 std::optional<std::uint64_t> max_steps = std::nullopt);

// Scans the monoid universe up to max_model_size for a monoid satisfying
// the basis but not the goal.  Refuted or unknown, never proved.
DerivationVerdict refute(const IdentityBasis& basis, const Identity& goal,
                         int max_model_size = 4);

// Decides u = v in var C_n = var{x^n = x^(n+1), xy = yx} for n >= 2 via the
// capped-exponent normal form: per letter, min(occurrences, n) must agree.
bool decide_cn(const Word& u, const Word& v, int n);

std::string trace_str(const IdentityBasis& basis, const Identity& goal,
                      const std::vector<RewriteStep>& trace);

}  // namespace monoidlab

#endif  // MONOIDLAB_EQLOGIC_HPP_
