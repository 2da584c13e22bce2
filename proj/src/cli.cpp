#include "monoidlab/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "monoidlab/error.hpp"
#include "monoidlab/formats.hpp"
#include "monoidlab/registry.hpp"
#include "monoidlab/scenarios.hpp"
#include "monoidlab/varieties.hpp"

namespace monoidlab {

namespace {

using nlohmann::ordered_json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInputError = 3;

struct Budgets {
  std::optional<std::uint64_t> env;  // MONOIDLAB_BUDGET

  std::uint64_t derive_steps(std::optional<std::uint64_t> flag) const {
    if (flag) return *flag;
    return env.value_or(100000);
  }
  std::size_t free_elements() const {
    return env ? static_cast<std::size_t>(*env) : kDefaultFreeObjectBudget;
  }
};

std::string monoid_label(const FiniteMonoid& m) {
  return m.name().empty() ? "monoid(size " + std::to_string(m.size()) + ")" : m.name();
}

void emit(std::ostream& out, bool json, const ordered_json& j,
          const std::string& text) {
  if (json) {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

int cmd_check(const std::string& monoid_spec, const std::string& identity_text,
              bool json, std::ostream& out) {
  FiniteMonoid m = resolve_monoid(monoid_spec);
  Identity id = Identity::parse(identity_text);
  Satisfaction sat = satisfies(m, id);
  ordered_json j;
  j["monoid"] = monoid_label(m);
  j["identity"] = id.str();
  j["verdict"] = sat.holds ? "holds" : "fails";
  std::string text = "monoid: " + monoid_label(m) + "\nidentity: " + id.str() +
                     "\nverdict: " + (sat.holds ? "holds" : "fails") + "\n";
  if (!sat.holds) {
    j["witness"] = assignment_str(m, sat.witness);
    text += "witness: " + assignment_str(m, sat.witness) + "\n";
  }
  emit(out, json, j, text);
  return sat.holds ? kExitHolds : kExitFails;
}

int cmd_derive(const std::string& basis_path, const std::string& goal_text,
               std::optional<std::size_t> max_len, std::optional<std::uint64_t> max_steps,
               const Budgets& budgets, bool json, std::ostream& out) {
  IdentityBasis basis = load_basis_file(basis_path);
  Identity goal = Identity::parse(goal_text);
  DerivationVerdict v =
      derive_bounded(basis, goal, max_len, budgets.derive_steps(max_steps));
  ordered_json j;
  j["basis"] = basis.name;
  j["goal"] = goal.str();
  j["verdict"] = v.proved() ? "proved" : "unknown";
  j["steps_spent"] = v.steps_spent;
  std::string text = "basis: " + basis.name + "\ngoal: " + goal.str() +
                     "\nverdict: " + (v.proved() ? "proved" : "unknown") +
                     "\nsteps_spent: " + std::to_string(v.steps_spent) + "\n";
  if (v.proved()) {
    j["trace_length"] = v.trace.size();
    j["trace"] = trace_str(basis, goal, v.trace);
    text += "trace_length: " + std::to_string(v.trace.size()) + "\ntrace:\n" +
            trace_str(basis, goal, v.trace) + "\n";
  }
  emit(out, json, j, text);
  return v.proved() ? kExitHolds : kExitUnknown;
}

int cmd_refute(const std::string& basis_path, const std::string& goal_text,
               int max_size, bool json, std::ostream& out) {
  IdentityBasis basis = load_basis_file(basis_path);
  Identity goal = Identity::parse(goal_text);
  DerivationVerdict v = refute(basis, goal, max_size);
  ordered_json j;
  j["basis"] = basis.name;
  j["goal"] = goal.str();
  j["verdict"] = v.refuted() ? "refuted" : "unknown";
  std::string text = "basis: " + basis.name + "\ngoal: " + goal.str() +
                     "\nverdict: " + (v.refuted() ? "refuted" : "unknown") + "\n";
  if (v.refuted()) {
    j["countermodel_size"] = v.countermodel->size();
    j["witness"] = assignment_str(*v.countermodel, v.counter_assignment);
    j["countermodel"] = monoid_to_text(*v.countermodel, "countermodel");
    text += "witness: " + assignment_str(*v.countermodel, v.counter_assignment) +
            "\n" + monoid_to_text(*v.countermodel, "countermodel");
  }
  emit(out, json, j, text);
  return v.refuted() ? kExitFails : kExitUnknown;
}

int cmd_member(const std::string& m_spec, const std::string& n_spec,
               const Budgets& budgets, bool json, std::ostream& out) {
  FiniteMonoid m = resolve_monoid(m_spec);
  FiniteMonoid n = resolve_monoid(n_spec);
  MembershipResult r = membership(m, n, budgets.free_elements());
  const char* verdict = r.status == MembershipStatus::member       ? "member"
                        : r.status == MembershipStatus::non_member ? "non-member"
                                                                   : "unknown";
  ordered_json j;
  j["m"] = monoid_label(m);
  j["n"] = monoid_label(n);
  j["verdict"] = verdict;
  std::string text = "m: " + monoid_label(m) + "\nn: " + monoid_label(n) +
                     "\nverdict: " + verdict + "\n";
  if (r.separating) {
    j["separating_identity"] = r.separating->str();
    text += "separating_identity: " + r.separating->str() + "\n";
  }
  if (!r.note.empty()) {
    j["note"] = r.note;
    text += "note: " + r.note + "\n";
  }
  emit(out, json, j, text);
  switch (r.status) {
    case MembershipStatus::member:
      return kExitHolds;
    case MembershipStatus::non_member:
      return kExitFails;
    default:
      return kExitUnknown;
  }
}

int cmd_isoterm(const std::string& n_spec, const std::string& word_text,
                const Budgets& budgets, bool json, std::ostream& out) {
  FiniteMonoid n = resolve_monoid(n_spec);
  Word w = Word::parse(word_text);
  IsotermResult r = isoterm(n, w, budgets.free_elements());
  const char* verdict = r.status == IsotermStatus::isoterm       ? "isoterm"
                        : r.status == IsotermStatus::not_isoterm ? "not-isoterm"
                                                                 : "unknown";
  ordered_json j;
  j["n"] = monoid_label(n);
  j["word"] = w.str();
  j["verdict"] = verdict;
  std::string text = "n: " + monoid_label(n) + "\nword: " + w.str() +
                     "\nverdict: " + verdict + "\n";
  if (r.witness) {
    j["witness"] = r.witness->str();
    text += "witness: " + r.witness->str() + "\n";
  }
  emit(out, json, j, text);
  switch (r.status) {
    case IsotermStatus::isoterm:
      return kExitHolds;
    case IsotermStatus::not_isoterm:
      return kExitFails;
    default:
      return kExitUnknown;
  }
}

int cmd_free(const std::string& n_spec, int rank, const Budgets& budgets, bool json,
             std::ostream& out) {
  FiniteMonoid n = resolve_monoid(n_spec);
  FreeObject fo = free_object(n, rank, budgets.free_elements());
  ordered_json j;
  j["n"] = monoid_label(n);
  j["rank"] = rank;
  j["letters"] = fo.letters;
  j["elements"] = fo.count();
  std::string text = "n: " + monoid_label(n) + "\nrank: " + std::to_string(rank) +
                     "\nletters: " + fo.letters +
                     "\nelements: " + std::to_string(fo.count()) + "\n";
  constexpr int kListCap = 200;
  ordered_json reps = ordered_json::array();
  text += "representatives:";
  for (int i = 0; i < fo.count() && i < kListCap; ++i) {
    reps.push_back(fo.reps[static_cast<std::size_t>(i)].str());
    text += " " + fo.reps[static_cast<std::size_t>(i)].str();
  }
  if (fo.count() > kListCap) {
    reps.push_back("...");
    text += " ...";
  }
  text += "\n";
  j["representatives"] = reps;
  emit(out, json, j, text);
  return kExitHolds;
}

std::string lattice_to_text_block(const FiniteLattice& l) {
  std::string text = "size " + std::to_string(l.size()) + "\nleq\n";
  for (int a = 0; a < l.size(); ++a) {
    for (int b = 0; b < l.size(); ++b) {
      if (a != b && l.leq(a, b)) {
        text += std::to_string(a) + " " + std::to_string(b) + "\n";
      }
    }
  }
  return text;
}

ordered_json element_report_json(const ElementReport& r) {
  ordered_json j;
  j["element"] = r.element;
  j["neutral"] = r.neutral;
  j["standard"] = r.standard;
  j["costandard"] = r.costandard;
  j["modular"] = r.modular;
  j["lower_modular"] = r.lower_modular;
  j["upper_modular"] = r.upper_modular;
  ordered_json w = ordered_json::object();
  for (const auto& [flag, pair] : r.witnesses) {
    w[flag] = {pair.first, pair.second};
  }
  j["witnesses"] = w;
  return j;
}

std::string element_report_text(const ElementReport& r) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::string text = "element: " + std::to_string(r.element) + "\n";
  text += std::string("neutral: ") + flag(r.neutral) + "\n";
  text += std::string("standard: ") + flag(r.standard) + "\n";
  text += std::string("costandard: ") + flag(r.costandard) + "\n";
  text += std::string("modular: ") + flag(r.modular) + "\n";
  text += std::string("lower_modular: ") + flag(r.lower_modular) + "\n";
  text += std::string("upper_modular: ") + flag(r.upper_modular) + "\n";
  for (const auto& [name, pair] : r.witnesses) {
    text += name + "_witness: (" + std::to_string(pair.first) + "," +
            std::to_string(pair.second) + ")\n";
  }
  return text;
}

int cmd_lattice(const std::string& file, int element, bool classify, bool pentagon,
                int enumerate_n, const std::string& mine, bool json, std::ostream& out) {
  if (enumerate_n > 0) {
    std::vector<FiniteLattice> all = enumerate_lattices(enumerate_n);
    ordered_json j;
    j["size"] = enumerate_n;
    j["count"] = all.size();
    std::string text = "lattices of size " + std::to_string(enumerate_n) +
                       " up to isomorphism: " + std::to_string(all.size()) + "\n";
    if (!mine.empty()) {
      if (mine != "modular-lowermodular-not-standard") {
        throw InputError("unknown mining property: " + mine);
      }
      auto found = mine_modular_lowermodular_not_standard(enumerate_n);
      if (!found) {
        j["mined"] = nullptr;
        text += "mined: none up to size " + std::to_string(enumerate_n) + "\n";
        emit(out, json, j, text);
        return kExitUnknown;
      }
      ordered_json mj;
      mj["size"] = found->lattice.size();
      mj["element"] = found->element;
      mj["standard_witness"] = {found->standard_witness.first,
                                found->standard_witness.second};
      j["mined"] = mj;
      text += "mined: size=" + std::to_string(found->lattice.size()) +
              " element=" + std::to_string(found->element) + " standard fails at (" +
              std::to_string(found->standard_witness.first) + "," +
              std::to_string(found->standard_witness.second) + ")\n" +
              "lattice mined\n" + lattice_to_text_block(found->lattice);
      emit(out, json, j, text);
      return kExitHolds;
    }
    emit(out, json, j, text);
    return kExitHolds;
  }
  if (file.empty()) {
    throw InputError("lattice needs --file or --enumerate");
  }
  FiniteLattice l = load_lattice_file(file);
  if (element < 0 || element >= l.size()) {
    throw InputError("element index out of range");
  }
  if (pentagon) {
    auto w = find_pentagon_witness(l, element);
    ordered_json j;
    j["element"] = element;
    j["modular"] = !w.has_value();
    std::string text = "element: " + std::to_string(element) + "\nmodular: " +
                       (w ? "false" : "true") + "\n";
    if (w) {
      Sublattice sub = sublattice_generated(l, {w->first, w->second, element});
      j["pentagon_witness"] = {w->first, w->second};
      j["generated_sublattice_size"] = sub.lattice.size();
      text += "pentagon_witness: (" + std::to_string(w->first) + "," +
              std::to_string(w->second) + ")\n";
      text += "generated_sublattice_size: " + std::to_string(sub.lattice.size()) + "\n";
    }
    emit(out, json, j, text);
    return w ? kExitFails : kExitHolds;
  }
  (void)classify;  // classification is the default view
  ElementReport r = classify_element(l, element);
  emit(out, json, element_report_json(r), element_report_text(r));
  return kExitHolds;
}

int grid_exit(const std::vector<ScenarioReport>& reports) {
  bool any_unknown = false;
  for (const ScenarioReport& r : reports) {
    if (r.overall() == ClaimStatus::fail) return kExitFails;
    if (r.overall() == ClaimStatus::unknown) any_unknown = true;
  }
  return any_unknown ? kExitUnknown : kExitHolds;
}

std::string scenario_file_stem(const std::string& scenario) {
  std::string stem;
  for (char c : scenario) {
    if (c == ' ') {
      stem += '_';
    } else if (c != '=') {
      stem += c;
    }
  }
  return stem;
}

int cmd_scenario_one(const ScenarioReport& report, bool json, std::ostream& out) {
  if (json) {
    out << report.to_json() << "\n";
  } else {
    out << report.to_text();
  }
  switch (report.overall()) {
    case ClaimStatus::pass:
      return kExitHolds;
    case ClaimStatus::fail:
      return kExitFails;
    default:
      return kExitUnknown;
  }
}

int cmd_scenario_grid(int jobs, const std::string& out_dir, bool json,
                      std::ostream& out) {
  std::vector<ScenarioReport> reports = scenario_grid(jobs);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const ScenarioReport& r : reports) {
      std::ofstream f(std::filesystem::path(out_dir) /
                      (scenario_file_stem(r.scenario) + ".txt"));
      f << r.to_text();
    }
    std::ofstream g(std::filesystem::path(out_dir) / "grid.txt");
    g << grid_to_text(reports);
  }
  if (json) {
    out << grid_to_json(reports) << "\n";
  } else {
    out << grid_to_text(reports);
  }
  return grid_exit(reports);
}

int cmd_enumerate(int monoids_size, int max_size, bool json, std::ostream& out) {
  std::vector<FiniteMonoid> all = enumerate_monoids(monoids_size, max_size);
  ordered_json j;
  j["size"] = monoids_size;
  j["count"] = all.size();
  std::string text = "monoids of size " + std::to_string(monoids_size) +
                     " up to isomorphism: " + std::to_string(all.size()) + "\n";
  ordered_json tables = ordered_json::array();
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::string block = monoid_to_text(all[i], "m" + std::to_string(i + 1));
    tables.push_back(block);
    text += block;
  }
  j["monoids"] = tables;
  emit(out, json, j, text);
  return kExitHolds;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Budgets budgets;
  if (const char* env = std::getenv("MONOIDLAB_BUDGET")) {
    try {
      budgets.env = std::stoull(env);
    } catch (...) {
      err << "error: MONOIDLAB_BUDGET must be an integer\n";
      return kExitInputError;
    }
  }

  CLI::App app{"monoidlab: finite monoids, equational logic, and finite lattices"};
  app.require_subcommand(0, 1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable report");

  int exit_code = kExitHolds;

  // check
  auto* check = app.add_subcommand("check", "test an identity in a finite monoid");
  std::string check_monoid, check_identity;
  check->add_option("--monoid", check_monoid, "monoid file, builtin name, or 'construct ...'")
      ->required();
  check->add_option("--identity", check_identity, "identity 'u = v'")->required();
  check->callback([&] { exit_code = cmd_check(check_monoid, check_identity, json, out); });

  // derive
  auto* derive = app.add_subcommand("derive", "bounded equational derivation");
  std::string derive_basis, derive_goal;
  std::optional<std::size_t> derive_max_len;
  std::optional<std::uint64_t> derive_max_steps;
  derive->add_option("--basis", derive_basis, "identity file")->required();
  derive->add_option("--goal", derive_goal, "goal identity 'u = v'")->required();
  derive->add_option("--max-len", derive_max_len, "word length cap");
  derive->add_option("--max-steps", derive_max_steps, "expansion cap");
  derive->callback([&] {
    exit_code = cmd_derive(derive_basis, derive_goal, derive_max_len, derive_max_steps,
                           budgets, json, out);
  });

  // refute
  auto* refute_cmd = app.add_subcommand("refute", "countermodel search");
  std::string refute_basis, refute_goal;
  int refute_max_size = 4;
  refute_cmd->add_option("--basis", refute_basis, "identity file")->required();
  refute_cmd->add_option("--goal", refute_goal, "goal identity 'u = v'")->required();
  refute_cmd->add_option("--max-size", refute_max_size, "model size cap (<= 4)");
  refute_cmd->callback(
      [&] { exit_code = cmd_refute(refute_basis, refute_goal, refute_max_size, json, out); });

  // member
  auto* member = app.add_subcommand("member", "variety membership M in var(N)");
  std::string member_m, member_n;
  member->add_option("--m", member_m, "candidate monoid")->required();
  member->add_option("--n", member_n, "generating monoid")->required();
  member->callback([&] { exit_code = cmd_member(member_m, member_n, budgets, json, out); });

  // isoterm
  auto* iso = app.add_subcommand("isoterm", "isoterm test for var(N)");
  std::string iso_n, iso_word;
  iso->add_option("--n", iso_n, "generating monoid")->required();
  iso->add_option("--word", iso_word, "word, e.g. yx^2")->required();
  iso->callback([&] { exit_code = cmd_isoterm(iso_n, iso_word, budgets, json, out); });

  // free
  auto* free_cmd = app.add_subcommand("free", "relatively free object of var(N)");
  std::string free_n;
  int free_rank = 1;
  free_cmd->add_option("--n", free_n, "generating monoid")->required();
  free_cmd->add_option("--rank", free_rank, "number of generators")->required();
  free_cmd->callback([&] { exit_code = cmd_free(free_n, free_rank, budgets, json, out); });

  // lattice
  auto* lat = app.add_subcommand("lattice", "finite lattice toolbox");
  std::string lat_file, lat_mine;
  int lat_element = 0;
  int lat_enumerate = 0;
  bool lat_classify = false;
  bool lat_pentagon = false;
  lat->add_option("--file", lat_file, "lattice file");
  lat->add_option("--element", lat_element, "element index");
  lat->add_flag("--classify", lat_classify, "full six-predicate report (default)");
  lat->add_flag("--pentagon", lat_pentagon, "pentagon witness for the element");
  lat->add_option("--enumerate", lat_enumerate, "enumerate lattices of this size");
  lat->add_option("--mine", lat_mine, "mining property for --enumerate");
  lat->callback([&] {
    exit_code = cmd_lattice(lat_file, lat_element, lat_classify, lat_pentagon,
                            lat_enumerate, lat_mine, json, out);
  });

  // scenario
  auto* scen = app.add_subcommand("scenario", "replay the proof-step scenarios");
  auto* lemma2 = scen->add_subcommand("lemma2", "S(yx^n) suite");
  int l_n = 2, l_m = 1;
  lemma2->add_option("--n", l_n, "exponent n >= 2");
  lemma2->add_option("--m", l_m, "period m >= 1");
  lemma2->callback([&] { exit_code = cmd_scenario_one(scenario_lemma2(l_n, l_m), json, out); });
  auto* theorem = scen->add_subcommand("theorem", "substitution and LRB suite");
  int t_r = 2, t_s = 1, t_t = 1;
  theorem->add_option("--r", t_r, "exponent r >= 2");
  theorem->add_option("--s", t_s, "exponent s >= 1");
  theorem->add_option("--t", t_t, "exponent t >= 0");
  theorem->callback(
      [&] { exit_code = cmd_scenario_one(scenario_theorem_steps(t_r, t_s, t_t), json, out); });
  auto* special = scen->add_subcommand("special", "lattice special-element suite");
  special->callback([&] { exit_code = cmd_scenario_one(scenario_special_elements(), json, out); });
  auto* grid = scen->add_subcommand("grid", "full default parameter grid");
  int grid_jobs = 1;
  std::string grid_out;
  grid->add_option("--jobs", grid_jobs, "run scenarios concurrently");
  grid->add_option("--out", grid_out, "write report files into this directory");
  grid->callback([&] { exit_code = cmd_scenario_grid(grid_jobs, grid_out, json, out); });
  scen->require_subcommand(1);

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "monoid universe up to isomorphism");
  int enum_monoids = 0;
  int enum_cap = 4;
  enum_cmd->add_option("--monoids", enum_monoids, "element count")->required();
  enum_cmd->add_option("--max-size", enum_cap, "enumeration cap");
  enum_cmd->callback([&] { exit_code = cmd_enumerate(enum_monoids, enum_cap, json, out); });

  std::vector<const char*> argv;
  argv.push_back("monoidlab");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (app.get_subcommands().empty()) {
      out << app.help();
      return kExitHolds;
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const BudgetError& e) {
    err << "unknown: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return exit_code;
}

}  // namespace monoidlab
