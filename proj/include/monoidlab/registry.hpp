#ifndef MONOIDLAB_REGISTRY_HPP_
#define MONOIDLAB_REGISTRY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "monoidlab/eqlogic.hpp"
#include "monoidlab/monoid.hpp"

namespace monoidlab {

// A variety presented by identities, generated by a finite monoid, or both.
struct VarietyHandle {
  std::string name;
  std::optional<FiniteMonoid> generator;
  std::optional<IdentityBasis> basis;
  // True when "this generator generates the presented variety" is taken
  // from the literature rather than checked here; such handles never
  // decide a claim on their own.
  bool generator_assumption = false;
};

// The named objects of the workbench: T, MON, SL, the C_n family, LRB, and
// the presented-only varieties E and D.  Every Generated+Presented pair is
// checked (generator satisfies basis) when the registry is built.
class Registry {
 public:
  static const Registry& instance();

  const std::vector<VarietyHandle>& handles() const noexcept { return handles_; }
  const VarietyHandle& at(const std::string& name) const;
  const VarietyHandle* find(const std::string& name) const;

 private:
  Registry();
  std::vector<VarietyHandle> handles_;
};

}  // namespace monoidlab

#endif  // MONOIDLAB_REGISTRY_HPP_
