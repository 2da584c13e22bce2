#include "monoidlab/registry.hpp"

#include "monoidlab/error.hpp"
#include "monoidlab/formats.hpp"

namespace monoidlab {

namespace {

IdentityBasis basis_of(std::string name, std::initializer_list<const char*> lines) {
  IdentityBasis b;
  b.name = std::move(name);
  for (const char* line : lines) b.identities.push_back(Identity::parse(line));
  return b;
}

}  // namespace

Registry::Registry() {
  handles_.push_back(VarietyHandle{"T", trivial_monoid(), std::nullopt, false});
  handles_.push_back(VarietyHandle{"MON", std::nullopt, IdentityBasis{{}, "MON"}, false});
  handles_.push_back(VarietyHandle{
      "SL", sl2_monoid(), basis_of("SL", {"x = x^2", "xy = yx"}), false});
  for (int n = 2; n <= 4; ++n) {
    std::string nm = "C" + std::to_string(n);
    std::string power = "x^" + std::to_string(n) + " = x^" + std::to_string(n + 1);
    handles_.push_back(VarietyHandle{
        nm, cyclic_chain(n), basis_of(nm, {power.c_str(), "xy = yx"}), false});
  }
  handles_.push_back(VarietyHandle{
      "LRB", lrb_monoid(), basis_of("LRB", {"xy = xyx"}), true});
  handles_.push_back(VarietyHandle{
      "E", std::nullopt,
      basis_of("E", {"x^2 = x^3", "x^2y = xyx", "x^2y^2 = y^2x^2"}), false});
  handles_.push_back(VarietyHandle{
      "D", std::nullopt,
      basis_of("D", {"x^2 = x^3", "x^2y = xyx", "xyx = yx^2"}), false});

  for (const VarietyHandle& h : handles_) {
    if (h.generator && h.basis) {
      for (const Identity& id : h.basis->identities) {
        if (!satisfies(*h.generator, id).holds) {
          throw Error("registry validation failed: generator of " + h.name +
                      " violates " + id.str());
        }
      }
    }
  }
}

const Registry& Registry::instance() {
  static const Registry registry;
  return registry;
}

const VarietyHandle* Registry::find(const std::string& name) const {
  for (const VarietyHandle& h : handles_) {
    if (h.name == name) return &h;
  }
  return nullptr;
}

const VarietyHandle& Registry::at(const std::string& name) const {
  const VarietyHandle* h = find(name);
  if (!h) throw InputError("unknown registry variety: " + name);
  return *h;
}

}  // namespace monoidlab
