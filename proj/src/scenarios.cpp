#include "monoidlab/scenarios.hpp"

#include <functional>
#include <future>
#include <json.hpp>

#include "monoidlab/error.hpp"
#include "monoidlab/registry.hpp"
#include "monoidlab/varieties.hpp"

namespace monoidlab {

namespace {

using nlohmann::ordered_json;

Claim checked(std::string id, std::string description, bool ok, std::string detail) {
  return Claim{std::move(id), std::move(description),
               ok ? ClaimStatus::pass : ClaimStatus::fail, Provenance::checked,
               std::move(detail)};
}

Claim external(std::string id, std::string description, bool ok, std::string detail) {
  return Claim{std::move(id), std::move(description),
               ok ? ClaimStatus::pass : ClaimStatus::fail,
               Provenance::external_assumption, std::move(detail)};
}

Claim unknown_claim(std::string id, std::string description, std::string detail) {
  return Claim{std::move(id), std::move(description), ClaimStatus::unknown,
               Provenance::unknown, std::move(detail)};
}

std::string status_str(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass:
      return "pass";
    case ClaimStatus::fail:
      return "fail";
    default:
      return "unknown";
  }
}

std::string power(char letter, int k) {
  if (k == 0) return "1";
  std::string out(1, letter);
  if (k > 1) out += "^" + std::to_string(k);
  return out;
}

// All words over the given letters, shortlex order, lengths 0..max_len.
std::vector<Word> words_over(const std::string& letters, std::size_t max_len) {
  std::vector<Word> out = {Word()};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (char c : letters) {
        out.push_back(out[i] * Word(std::string(1, c)));
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::string sat_detail(const FiniteMonoid& m, const Satisfaction& sat) {
  if (sat.holds) return "holds";
  return "fails with " + assignment_str(m, sat.witness);
}

}  // namespace

ClaimStatus ScenarioReport::overall() const {
  bool any_unknown = false;
  for (const Claim& c : claims) {
    if (c.provenance == Provenance::unknown || c.status == ClaimStatus::unknown) {
      any_unknown = true;
      continue;
    }
    if (c.provenance == Provenance::checked && c.status == ClaimStatus::fail) {
      return ClaimStatus::fail;
    }
  }
  return any_unknown ? ClaimStatus::unknown : ClaimStatus::pass;
}

std::string ScenarioReport::to_text() const {
  std::string out = "scenario: " + scenario + "\n";
  for (const Claim& c : claims) {
    out += c.id + ": " + status_str(c.status) + " [" + c.detail + "]";
    if (c.provenance == Provenance::external_assumption) {
      out += " {external-assumption, not counted}";
    } else if (c.provenance == Provenance::unknown) {
      out += " {unknown}";
    }
    out += "\n";
  }
  out += "overall: " + status_str(overall()) + "\n";
  return out;
}

std::string ScenarioReport::to_json() const {
  ordered_json j;
  j["scenario"] = scenario;
  j["claims"] = ordered_json::array();
  for (const Claim& c : claims) {
    ordered_json cj;
    cj["id"] = c.id;
    cj["description"] = c.description;
    cj["status"] = status_str(c.status);
    cj["provenance"] = c.provenance == Provenance::checked ? "checked"
                       : c.provenance == Provenance::external_assumption
                           ? "external-assumption"
                           : "unknown";
    cj["detail"] = c.detail;
    j["claims"].push_back(cj);
  }
  j["overall"] = status_str(overall());
  return j.dump(2);
}

ScenarioReport scenario_lemma2(int n, int m) {
  if (n < 2 || m < 1 || n + m > 6) {
    throw InputError("scenario lemma2 needs n >= 2, m >= 1, n + m <= 6");
  }
  ScenarioReport report;
  report.scenario = "lemma2 n=" + std::to_string(n) + " m=" + std::to_string(m);

  const Word yxn = Word::parse("y" + power('x', n));
  const FiniteMonoid s = s_monoid(yxn);
  const FiniteMonoid c = cyclic_chain(n + 1);

  // (a) S(yx^n) satisfies x^k y = y x^k for k > n and violates it at k = n.
  for (int k = n + 1; k <= n + m + 1; ++k) {
    Identity id = Identity::parse(power('x', k) + "y = y" + power('x', k));
    Satisfaction sat = satisfies(s, id);
    report.claims.push_back(checked(
        "a.sat.k" + std::to_string(k), s.name() + " satisfies " + id.str(),
        sat.holds, sat_detail(s, sat)));
  }
  {
    Identity id = Identity::parse(power('x', n) + "y = y" + power('x', n));
    Satisfaction sat = satisfies(s, id);
    report.claims.push_back(checked("a.viol.k" + std::to_string(n),
                                    s.name() + " violates " + id.str(),
                                    !sat.holds, sat_detail(s, sat)));
  }

  // (b) the C_(n+1)-class of yx^n consists of its permutations.
  {
    std::vector<Word> hits;
    bool all_perms = true;
    for (const Word& w : words_over("xy", static_cast<std::size_t>(n) + 3)) {
      if (!decide_cn(yxn, w, n + 1)) continue;
      hits.push_back(w);
      if (occurrences(w, 'x') != static_cast<std::size_t>(n) ||
          occurrences(w, 'y') != 1) {
        all_perms = false;
      }
    }
    bool ok = all_perms && hits.size() == static_cast<std::size_t>(n) + 1;
    std::string detail = std::to_string(hits.size()) + " words:";
    for (const Word& w : hits) detail += " " + w.str();
    report.claims.push_back(checked(
        "b.perm-class",
        "every word equal to " + yxn.str() + " in C" + std::to_string(n + 1) +
            " up to length " + std::to_string(n + 3) + " is a permutation of it",
        ok, detail));
  }

  // (c) x^n y = y x^n follows from the periodicity pair.
  {
    IdentityBasis basis;
    basis.name = "periodicity-pair";
    basis.identities.push_back(
        Identity::parse(power('x', n) + " = " + power('x', n + m)));
    basis.identities.push_back(
        Identity::parse(power('x', n + m) + "y = y" + power('x', n + m)));
    Identity goal = Identity::parse(power('x', n) + "y = y" + power('x', n));
    DerivationVerdict v = derive_bounded(basis, goal);
    std::string description = goal.str() + " derivable from the basis {" +
                              basis.identities[0].str() + ", " +
                              basis.identities[1].str() + "}";
    if (v.status == DeriveStatus::unknown) {
      report.claims.push_back(unknown_claim("c.derive", std::move(description),
                                            "budget exhausted"));
    } else {
      bool ok = v.proved() && trace_replays(basis, goal, v.trace);
      report.claims.push_back(checked(
          "c.derive", std::move(description), ok,
          "proved in " + std::to_string(v.trace.size()) + " steps"));
    }
  }

  // (d) C_(n+1) is a countermodel for x^n = x^(n+m).
  {
    Identity id = Identity::parse(power('x', n) + " = " + power('x', n + m));
    Satisfaction sat = satisfies(c, id);
    report.claims.push_back(checked("d.refute",
                                    c.name() + " violates " + id.str(),
                                    !sat.holds, sat_detail(c, sat)));
  }

  // (e) finite proxy of the isoterm step: var S(yx^n) stands in for the
  // abstract variety containing E.
  {
    IsotermResult iso = isoterm_joint({s, c}, yxn);
    std::string description =
        yxn.str() + " is an isoterm for var " + s.name() + " v var " + c.name() +
        " (proxy: the source claim quantifies over an abstract variety)";
    if (iso.status == IsotermStatus::unknown) {
      report.claims.push_back(
          unknown_claim("e.isoterm-proxy", std::move(description), "budget exhausted"));
    } else {
      std::string detail = iso.status == IsotermStatus::isoterm
                               ? "isoterm"
                               : "not an isoterm, witness " + iso.witness->str();
      report.claims.push_back(external("e.isoterm-proxy", std::move(description),
                                       iso.status == IsotermStatus::isoterm, detail));
    }
  }

  // (f) bounded echo of the cited fact that yx^n = w in E forces w = yx^t:
  // nothing provable within the budget may leave that shape.
  {
    const IdentityBasis& e_basis = *Registry::instance().at("E").basis;
    Word goal_lhs = yxn;
    int proved_count = 0;
    bool shape_ok = true;
    std::string shapes;
    for (const Word& w : words_over("xy", 5)) {
      Identity goal{goal_lhs, w};
      DerivationVerdict v =
          derive_bounded(e_basis, goal, static_cast<std::size_t>(n) + 9, 1500);
      if (!v.proved()) continue;
      ++proved_count;
      bool is_yxt = w.size() >= 3 && w.at(0) == 'y' &&
                    occurrences(w, 'y') == 1 &&
                    occurrences(w, 'x') == w.size() - 1;
      if (!is_yxt) shape_ok = false;
      shapes += " " + w.str();
    }
    report.claims.push_back(external(
        "f.prop42-bounded",
        "bounded derivations from E starting at " + goal_lhs.str() +
            " stay of the form yx^t (general claim unverified)",
        shape_ok,
        std::to_string(proved_count) + " provable within budget:" + shapes));
  }

  return report;
}

ScenarioReport scenario_theorem_steps(int r, int s, int t) {
  if (r < 2 || s < 1 || t < 0 || s + t < 2 || r + s + t > 9) {
    throw InputError(
        "scenario theorem needs r >= 2, s >= 1, t >= 0, s + t >= 2, r + s + t <= 9");
  }
  ScenarioReport report;
  report.scenario = "theorem r=" + std::to_string(r) + " s=" + std::to_string(s) +
                    " t=" + std::to_string(t);

  const Identity id5 =
      Identity::parse("y" + power('x', r) + " = " + power('x', s) + "y" + power('x', t));
  const Identity id6 = Identity::parse("y^2" + power('x', r) + " = " + power('x', s) +
                                       "y^2" + power('x', t));

  // (a) the second identity is the y -> y^2 image of the first.
  {
    Identity image = Substitution::single('y', Word::parse("y^2")).apply(id5);
    report.claims.push_back(checked(
        "a.subst", "(" + id5.str() + ") maps to (" + id6.str() + ") under y -> y^2",
        image == id6, "image is " + image.str()));
  }

  IdentityBasis lrb_basis;
  lrb_basis.name = "LRB";
  lrb_basis.identities.push_back(Identity::parse("xy = xyx"));

  // (b) LRB absorbs both sides.
  {
    Identity goal1 = Identity::parse("y^2" + power('x', r) + " = yx");
    DerivationVerdict v1 = derive_bounded(lrb_basis, goal1);
    bool ok1 = v1.proved() && trace_replays(lrb_basis, goal1, v1.trace);
    report.claims.push_back(checked(
        "b.derive.1", goal1.str() + " derivable from xy = xyx", ok1,
        v1.proved() ? "proved in " + std::to_string(v1.trace.size()) + " steps"
                    : "unknown"));
    Identity goal2 =
        Identity::parse(power('x', s) + "y^2" + power('x', t) + " = xy");
    DerivationVerdict v2 = derive_bounded(lrb_basis, goal2);
    bool ok2 = v2.proved() && trace_replays(lrb_basis, goal2, v2.trace);
    report.claims.push_back(checked(
        "b.derive.2", goal2.str() + " derivable from xy = xyx", ok2,
        v2.proved() ? "proved in " + std::to_string(v2.trace.size()) + " steps"
                    : "unknown"));
  }

  // (c) LRB separates the two sides.
  {
    DerivationVerdict v = refute(lrb_basis, id6, 3);
    bool ok = v.refuted() && v.countermodel.has_value() &&
              v.countermodel->isomorphic_to(lrb_monoid());
    std::string detail;
    if (v.refuted()) {
      detail = "countermodel of size " + std::to_string(v.countermodel->size()) +
               ", assignment " + assignment_str(*v.countermodel, v.counter_assignment);
    } else {
      detail = "unknown";
    }
    report.claims.push_back(checked(
        "c.refute", id6.str() + " refuted by the 3-element LRB monoid", ok, detail));
  }

  // (d) the SL generator divides every non-group generator in the registry.
  auto member_claim = [&report](std::string id, std::string description,
                                const MembershipResult& mr) {
    if (mr.status == MembershipStatus::unknown) {
      report.claims.push_back(
          unknown_claim(std::move(id), std::move(description), "budget exhausted"));
      return;
    }
    std::string detail = mr.status == MembershipStatus::member
                             ? "member"
                             : "non-member, separated by " + mr.separating->str();
    report.claims.push_back(checked(std::move(id), std::move(description),
                                    mr.status == MembershipStatus::member, detail));
  };
  for (const VarietyHandle& h : Registry::instance().handles()) {
    if (!h.generator || is_group(*h.generator)) continue;
    member_claim("d.sl-member." + h.name, "SL2 lies in var(" + h.name + " generator)",
                 membership(sl2_monoid(), *h.generator));
  }

  // (e) the C_2 generator divides every non-completely-regular generator.
  for (const VarietyHandle& h : Registry::instance().handles()) {
    if (!h.generator || is_completely_regular(*h.generator)) continue;
    member_claim("e.c2-member." + h.name,
                 "C2 generator lies in var(" + h.name + " generator)",
                 membership(cyclic_chain(2), *h.generator));
  }

  return report;
}

ScenarioReport scenario_special_elements() {
  ScenarioReport report;
  report.scenario = "special-elements";

  // (a) implication chain over the whole universe up to size 6.
  {
    bool ok = true;
    std::string violation;
    int lattices = 0;
    int elements = 0;
    for (int n = 1; n <= 6 && ok; ++n) {
      for (const FiniteLattice& l : enumerate_lattices(n)) {
        ++lattices;
        for (int x = 0; x < l.size() && ok; ++x) {
          ++elements;
          try {
            classify_element(l, x);
          } catch (const Error& e) {
            ok = false;
            violation = e.what();
          }
        }
      }
    }
    report.claims.push_back(checked(
        "a.implication-chain",
        "neutral => standard ^ costandard, standard => modular ^ lower-modular, "
        "costandard => modular ^ upper-modular over all lattices of size <= 6",
        ok,
        ok ? std::to_string(elements) + " elements over " + std::to_string(lattices) +
                 " lattices"
           : violation));
  }

  // (b) pentagon side element.
  {
    FiniteLattice n5 = n5_lattice();
    int side = 3;
    PredicateResult mod = is_modular_element(n5, side);
    auto pent = find_pentagon_witness(n5, side);
    bool ok = !mod.holds && pent.has_value();
    std::string detail = "no witness";
    if (pent) {
      Sublattice sub = sublattice_generated(n5, {pent->first, pent->second, side});
      ok = ok && sub.lattice.size() == 5 &&
           sub.lattice.canonical_matrix() == n5.canonical_matrix();
      detail = "witness u=" + std::to_string(pent->first) +
               " w=" + std::to_string(pent->second) + ", generated sublattice has " +
               std::to_string(sub.lattice.size()) + " elements";
    }
    report.claims.push_back(checked(
        "b.pentagon", "the N5 side element is non-modular and its witness spans N5",
        ok, detail));
  }

  // (c) diamond: modular throughout, atoms neither standard nor neutral.
  {
    FiniteLattice m3 = m3_lattice();
    bool ok = true;
    for (int x = 0; x < m3.size(); ++x) ok = ok && is_modular_element(m3, x).holds;
    for (int atom : {1, 2, 3}) {
      ok = ok && !is_standard_element(m3, atom).holds &&
           !is_neutral_element(m3, atom).holds;
    }
    report.claims.push_back(checked(
        "c.m3-diamond", "M3 is element-wise modular and its atoms are not standard",
        ok, "checked 5 elements"));
  }

  // (d) distributive examples are neutral throughout.
  {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
      FiniteLattice chain = chain_lattice(n);
      for (int x = 0; x < n; ++x) ok = ok && is_neutral_element(chain, x).holds;
    }
    FiniteLattice cube = boolean_lattice(3);
    for (int x = 0; x < cube.size(); ++x) ok = ok && is_neutral_element(cube, x).holds;
    report.claims.push_back(checked(
        "d.distributive-neutral",
        "every element of the chains up to size 6 and of 2^3 is neutral", ok,
        "chains 1..6 and the 8-element cube"));
  }

  // (e) the minimal modular + lower-modular but not standard example.
  {
    auto mined = mine_modular_lowermodular_not_standard(7);
    bool ok = mined.has_value();
    std::string detail = "none found";
    if (mined) {
      const FiniteLattice& l = mined->lattice;
      int x = mined->element;
      auto [wy, wz] = mined->standard_witness;
      bool replay = is_modular_element(l, x).holds &&
                    is_lower_modular_element(l, x).holds &&
                    l.meet(l.join(x, wy), wz) != l.join(l.meet(x, wz), l.meet(wy, wz));
      ok = ok && replay;
      detail = "size=" + std::to_string(l.size()) + " element=" + std::to_string(x) +
               " standard fails at (y,z)=(" + std::to_string(wy) + "," +
               std::to_string(wz) + ")" + (replay ? ", certificate replays" : ", REPLAY FAILED");
    }
    report.claims.push_back(checked(
        "e.mine",
        "a smallest lattice with a modular, lower-modular, non-standard element exists",
        ok, detail));
  }

  return report;
}

std::vector<ScenarioReport> scenario_grid(int jobs) {
  std::vector<std::function<ScenarioReport()>> tasks;
  for (int n : {2, 3}) {
    for (int m : {1, 2}) {
      tasks.push_back([n, m] { return scenario_lemma2(n, m); });
    }
  }
  tasks.push_back([] { return scenario_theorem_steps(2, 1, 1); });
  tasks.push_back([] { return scenario_theorem_steps(2, 2, 0); });
  tasks.push_back([] { return scenario_theorem_steps(3, 2, 1); });
  tasks.push_back([] { return scenario_special_elements(); });

  std::vector<ScenarioReport> reports;
  if (jobs <= 1) {
    for (auto& task : tasks) reports.push_back(task());
    return reports;
  }
  std::vector<std::future<ScenarioReport>> futures;
  for (auto& task : tasks) {
    futures.push_back(std::async(std::launch::async, task));
  }
  for (auto& f : futures) reports.push_back(f.get());
  return reports;
}

std::string grid_to_text(const std::vector<ScenarioReport>& reports) {
  std::string out;
  int pass = 0;
  int fail = 0;
  int unknown = 0;
  for (const ScenarioReport& r : reports) {
    out += r.to_text() + "\n";
    switch (r.overall()) {
      case ClaimStatus::pass:
        ++pass;
        break;
      case ClaimStatus::fail:
        ++fail;
        break;
      default:
        ++unknown;
        break;
    }
  }
  out += "grid: " + std::to_string(reports.size()) + " scenarios, " +
         std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " +
         std::to_string(unknown) + " unknown\n";
  return out;
}

std::string grid_to_json(const std::vector<ScenarioReport>& reports) {
  ordered_json j = ordered_json::array();
  for (const ScenarioReport& r : reports) {
    j.push_back(ordered_json::parse(r.to_json()));
  }
  return j.dump(2);
}

}  // namespace monoidlab
