#ifndef MONOIDLAB_SCENARIOS_HPP_
#define MONOIDLAB_SCENARIOS_HPP_

#include <string>
#include <vector>

namespace monoidlab {

enum class ClaimStatus { pass, fail, unknown };

// How a claim's verdict was obtained.  Claims resting on an external
// assumption (or on a budget-starved computation) annotate the report but
// never decide its overall status.
enum class Provenance { checked, external_assumption, unknown };

struct Claim {
  std::string id;
  std::string description;
  ClaimStatus status;
  Provenance provenance;
  std::string detail;
};

struct ScenarioReport {
  std::string scenario;
  std::vector<Claim> claims;

  ClaimStatus overall() const;
  // Line-oriented "claim <id>: <verdict> [<detail>]" block, byte-stable.
  std::string to_text() const;
  std::string to_json() const;
};

// Lemma-level replay: S(yx^n) against x^k y = y x^k, the C_(n+1)
// permutation class of yx^n, derivability of x^n y = y x^n from the
// periodicity pair, the C_(n+1) countermodel, and the isoterm proxy.
ScenarioReport scenario_lemma2(int n, int m);

// Theorem-level replay: the y -> y^2 substitution, the LRB derivations and
// countermodel, and the SL/C2 membership echoes over the registry.
ScenarioReport scenario_theorem_steps(int r, int s, int t);

// Special-element suite: implication chain over the lattice universe,
// pentagon and diamond classification, and the minimal
// modular+lower-modular-not-standard example.
ScenarioReport scenario_special_elements();

// The default parameter grid; jobs > 1 runs scenarios concurrently with
// deterministic ordered assembly.
std::vector<ScenarioReport> scenario_grid(int jobs = 1);
std::string grid_to_text(const std::vector<ScenarioReport>& reports);
std::string grid_to_json(const std::vector<ScenarioReport>& reports);

}  // namespace monoidlab

#endif  // MONOIDLAB_SCENARIOS_HPP_
