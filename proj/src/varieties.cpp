#include "monoidlab/varieties.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "monoidlab/error.hpp"

namespace monoidlab {

std::string generator_letters(int rank) {
  static const std::string order = "xyzabcdefghijklmnopqrstuvw";
  if (rank < 0 || rank > static_cast<int>(order.size())) {
    throw InputError("rank out of range for generator letters");
  }
  return order.substr(0, static_cast<std::size_t>(rank));
}

int FreeObject::element_of(const Word& w) const {
  int id = identity;
  for (char c : w.letters()) {
    std::size_t g = letters.find(c);
    if (g == std::string::npos) {
      throw InputError(std::string("letter '") + c + "' is not a generator");
    }
    id = step(id, static_cast<int>(g));
  }
  return id;
}

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint8_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t b : v) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

FreeObject free_object_joint(std::vector<FiniteMonoid> factors, std::string letters,
                             std::size_t element_budget) {
  if (letters.empty()) throw InputError("free object needs at least one generator");
  if (factors.empty()) throw InputError("free object needs at least one ambient monoid");
  {
    std::set<char> uniq(letters.begin(), letters.end());
    if (uniq.size() != letters.size()) throw InputError("generator letters must be distinct");
  }
  int rank = static_cast<int>(letters.size());
  for (const FiniteMonoid& f : factors) {
    if (f.size() > 255) throw InputError("ambient monoid too large for free object");
  }

  // Per-factor block of the evaluation vector: one entry per assignment of
  // the generators into that factor, generator 0 most significant.
  std::vector<std::size_t> block_len(factors.size());
  std::vector<std::size_t> block_off(factors.size());
  std::size_t total_len = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    std::size_t len = 1;
    for (int g = 0; g < rank; ++g) {
      len *= static_cast<std::size_t>(factors[f].size());
      if (len > (std::size_t{1} << 28)) throw BudgetError("free object assignment space too large");
    }
    block_off[f] = total_len;
    block_len[f] = len;
    total_len += len;
  }

  FreeObject fo;
  fo.factors = std::move(factors);
  fo.letters = std::move(letters);

  std::vector<std::uint8_t> ident(total_len);
  std::vector<std::vector<std::uint8_t>> gens(static_cast<std::size_t>(rank),
                                              std::vector<std::uint8_t>(total_len));
  for (std::size_t f = 0; f < fo.factors.size(); ++f) {
    const FiniteMonoid& m = fo.factors[f];
    std::size_t n = static_cast<std::size_t>(m.size());
    for (std::size_t a = 0; a < block_len[f]; ++a) {
      ident[block_off[f] + a] = static_cast<std::uint8_t>(m.identity());
      // digits of the assignment index give the generator images
      std::size_t rest = a;
      for (int g = rank - 1; g >= 0; --g) {
        std::size_t img = rest % n;
        rest /= n;
        gens[static_cast<std::size_t>(g)][block_off[f] + a] = static_cast<std::uint8_t>(img);
      }
    }
  }

  auto mul = [&](const std::vector<std::uint8_t>& u, const std::vector<std::uint8_t>& v) {
    std::vector<std::uint8_t> out(total_len);
    for (std::size_t f = 0; f < fo.factors.size(); ++f) {
      const FiniteMonoid& m = fo.factors[f];
      for (std::size_t a = block_off[f]; a < block_off[f] + block_len[f]; ++a) {
        out[a] = static_cast<std::uint8_t>(m.mul(u[a], v[a]));
      }
    }
    return out;
  };

  std::unordered_map<std::vector<std::uint8_t>, int, VectorHash> index;
  fo.elements.push_back(ident);
  fo.reps.emplace_back();
  index.emplace(std::move(ident), 0);
  fo.identity = 0;

  std::size_t head = 0;
  while (head < fo.elements.size()) {
    int id = static_cast<int>(head);
    for (int g = 0; g < rank; ++g) {
      std::vector<std::uint8_t> prod = mul(fo.elements[head], gens[static_cast<std::size_t>(g)]);
      auto it = index.find(prod);
      int target;
      if (it != index.end()) {
        target = it->second;
      } else {
        if (fo.elements.size() >= element_budget) {
          throw BudgetError("free object element budget exceeded");
        }
        target = static_cast<int>(fo.elements.size());
        fo.elements.push_back(prod);
        fo.reps.push_back(fo.reps[static_cast<std::size_t>(id)] *
                          Word(std::string(1, fo.letters[static_cast<std::size_t>(g)])));
        index.emplace(std::move(prod), target);
      }
      fo.transitions.push_back(target);
    }
    ++head;
  }
  fo.generators.resize(static_cast<std::size_t>(rank));
  for (int g = 0; g < rank; ++g) {
    fo.generators[static_cast<std::size_t>(g)] = fo.step(fo.identity, g);
  }
  return fo;
}

FreeObject free_object(const FiniteMonoid& n, int rank, std::size_t element_budget) {
  return free_object_joint({n}, generator_letters(rank), element_budget);
}

namespace {

// Greedy generating set: repeatedly adjoin the least element outside the
// current closure.
std::vector<int> greedy_generators(const FiniteMonoid& m) {
  std::vector<int> gens;
  std::set<int> closure = {m.identity()};
  auto close = [&] {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(closure.begin(), closure.end());
      for (int a : cur) {
        for (int g : gens) {
          if (closure.insert(m.mul(a, g)).second) grew = true;
        }
      }
    }
  };
  while (static_cast<int>(closure.size()) < m.size()) {
    for (int e = 0; e < m.size(); ++e) {
      if (!closure.count(e)) {
        gens.push_back(e);
        break;
      }
    }
    close();
  }
  return gens;
}

Identity normalized(Word u, Word v) {
  if (v < u) std::swap(u, v);
  return Identity{std::move(u), std::move(v)};
}

}  // namespace

MembershipResult membership(const FiniteMonoid& m, const FiniteMonoid& n,
                            std::size_t element_budget) {
  std::vector<int> gens = greedy_generators(m);
  if (gens.empty()) {
    return MembershipResult{MembershipStatus::member, std::nullopt,
                            "trivial monoid lies in every variety"};
  }
  int rank = static_cast<int>(gens.size());
  FreeObject fo;
  try {
    fo = free_object(n, rank, element_budget);
  } catch (const BudgetError& e) {
    return MembershipResult{MembershipStatus::unknown, std::nullopt, e.what()};
  }
  // image[id] = evaluation of reps[id] in m at letters -> generating tuple
  std::vector<int> image(static_cast<std::size_t>(fo.count()), -1);
  image[static_cast<std::size_t>(fo.identity)] = m.identity();
  for (int id = 0; id < fo.count(); ++id) {
    for (int g = 0; g < rank; ++g) {
      int t = fo.step(id, g);
      int val = m.mul(image[static_cast<std::size_t>(id)], gens[static_cast<std::size_t>(g)]);
      if (image[static_cast<std::size_t>(t)] < 0) {
        image[static_cast<std::size_t>(t)] = val;
      } else if (image[static_cast<std::size_t>(t)] != val) {
        // reps[id] * letter_g and reps[t] are equal in var(n) but separate m
        Word u = fo.reps[static_cast<std::size_t>(id)] *
                 Word(std::string(1, fo.letters[static_cast<std::size_t>(g)]));
        return MembershipResult{MembershipStatus::non_member,
                                normalized(std::move(u), fo.reps[static_cast<std::size_t>(t)]),
                                ""};
      }
    }
  }
  return MembershipResult{MembershipStatus::member, std::nullopt, ""};
}

namespace {

char fresh_letter(const std::string& taken) {
  static const std::string order = "xyzabcdefghijklmnopqrstuvw";
  for (char c : order) {
    if (taken.find(c) == std::string::npos) return c;
  }
  throw InputError("no fresh letter available");
}

struct DfaView {
  const FreeObject* fo;
  std::vector<int> live_letters;  // generator indices usable in this view
  int accept;
};

std::vector<char> coaccessible(const DfaView& v) {
  int n = v.fo->count();
  std::vector<std::vector<int>> rev(static_cast<std::size_t>(n));
  for (int id = 0; id < n; ++id) {
    for (int g : v.live_letters) {
      rev[static_cast<std::size_t>(v.fo->step(id, g))].push_back(id);
    }
  }
  std::vector<char> co(static_cast<std::size_t>(n), 0);
  std::deque<int> queue = {v.accept};
  co[static_cast<std::size_t>(v.accept)] = 1;
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    for (int p : rev[static_cast<std::size_t>(id)]) {
      if (!co[static_cast<std::size_t>(p)]) {
        co[static_cast<std::size_t>(p)] = 1;
        queue.push_back(p);
      }
    }
  }
  return co;
}

// Nodes live on some start->accept path; edges restricted to live letters.
struct Trimmed {
  std::vector<int> nodes;
  bool has_cycle;
  std::uint64_t path_count;  // saturating at 2
};

Trimmed analyze(const DfaView& v) {
  std::vector<char> co = coaccessible(v);
  int n = v.fo->count();
  std::vector<char> reach(static_cast<std::size_t>(n), 0);
  // start state is reachable by construction of the free object
  Trimmed t{{}, false, 0};
  if (!co[static_cast<std::size_t>(v.fo->identity)]) return t;  // accept unreachable
  reach[static_cast<std::size_t>(v.fo->identity)] = 1;
  std::deque<int> queue = {v.fo->identity};
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    t.nodes.push_back(id);
    for (int g : v.live_letters) {
      int to = v.fo->step(id, g);
      if (co[static_cast<std::size_t>(to)] && !reach[static_cast<std::size_t>(to)]) {
        reach[static_cast<std::size_t>(to)] = 1;
        queue.push_back(to);
      }
    }
  }
  // Kahn's algorithm for cycle detection + path counting in one pass
  std::map<int, int> indeg;
  for (int id : t.nodes) indeg[id] = 0;
  for (int id : t.nodes) {
    for (int g : v.live_letters) {
      int to = v.fo->step(id, g);
      if (reach[static_cast<std::size_t>(to)] && co[static_cast<std::size_t>(to)]) {
        ++indeg[to];
      }
    }
  }
  std::map<int, std::uint64_t> paths;
  std::deque<int> ready;
  for (auto& [id, d] : indeg) {
    if (d == 0) ready.push_back(id);
    paths[id] = 0;
  }
  paths[v.fo->identity] = 1;
  std::size_t processed = 0;
  while (!ready.empty()) {
    int id = ready.front();
    ready.pop_front();
    ++processed;
    for (int g : v.live_letters) {
      int to = v.fo->step(id, g);
      if (!indeg.count(to)) continue;
      paths[to] = std::min<std::uint64_t>(2, paths[to] + paths[id]);
      if (--indeg[to] == 0) ready.push_back(to);
    }
  }
  if (processed != t.nodes.size()) {
    t.has_cycle = true;
    return t;
  }
  t.path_count = paths[v.accept];
  return t;
}

// Shortlex-least accepted word outside {empty word, wexcl}, or nullopt.
// Search space is (dfa state) x (prefix-of-wexcl progress), so it always
// terminates.
std::optional<Word> least_other_accepted(const DfaView& v, const Word& wexcl) {
  std::vector<char> co = coaccessible(v);
  if (!co[static_cast<std::size_t>(v.fo->identity)]) return std::nullopt;
  const std::string& target = wexcl.letters();
  int diverged = static_cast<int>(target.size()) + 1;
  std::set<std::pair<int, int>> seen;  // (state, progress); progress==diverged once off-prefix
  struct Node {
    int state;
    int progress;
    Word word;
  };
  std::deque<Node> queue;
  queue.push_back(Node{v.fo->identity, 0, Word()});
  seen.insert({v.fo->identity, 0});
  while (!queue.empty()) {
    Node cur = queue.front();
    queue.pop_front();
    for (int g : v.live_letters) {
      char letter = v.fo->letters[static_cast<std::size_t>(g)];
      int to = v.fo->step(cur.state, g);
      if (!co[static_cast<std::size_t>(to)]) continue;
      int progress;
      if (cur.progress != diverged &&
          cur.progress < static_cast<int>(target.size()) &&
          target[static_cast<std::size_t>(cur.progress)] == letter) {
        progress = cur.progress + 1;
      } else {
        progress = diverged;
      }
      Word word = cur.word * Word(std::string(1, letter));
      bool is_excluded = progress == static_cast<int>(target.size());
      if (to == v.accept && !is_excluded) return word;
      if (seen.insert({to, progress}).second) {
        queue.push_back(Node{to, progress, std::move(word)});
      }
    }
  }
  return std::nullopt;
}

std::vector<int> letter_indices(const FreeObject& fo, const std::string& letters) {
  std::vector<int> out;
  for (char c : letters) {
    out.push_back(static_cast<int>(fo.letters.find(c)));
  }
  return out;
}

}  // namespace

IsotermResult isoterm_joint(const std::vector<FiniteMonoid>& factors, const Word& w,
                            std::size_t element_budget) {
  if (w.empty()) throw InputError("isoterm requires a non-empty word");
  std::string inner = content(w);
  std::string full = inner + fresh_letter(inner);
  std::sort(full.begin(), full.end());  // shortlex enumeration order
  FreeObject fo;
  try {
    fo = free_object_joint(factors, full, element_budget);
  } catch (const BudgetError&) {
    return IsotermResult{IsotermStatus::unknown, std::nullopt};
  }
  DfaView all{&fo, letter_indices(fo, full), fo.element_of(w)};
  Trimmed t = analyze(all);
  if (!t.has_cycle && t.path_count == 1) {
    return IsotermResult{IsotermStatus::isoterm, std::nullopt};
  }
  // Prefer a witness over the word's own letters.
  DfaView narrow{&fo, letter_indices(fo, inner), all.accept};
  std::optional<Word> witness = least_other_accepted(narrow, w);
  if (!witness) witness = least_other_accepted(all, w);
  if (!witness) {
    throw Error("isoterm analysis found multiple accepted words but no witness");
  }
  return IsotermResult{IsotermStatus::not_isoterm, std::move(witness)};
}

IsotermResult isoterm(const FiniteMonoid& n, const Word& w, std::size_t element_budget) {
  return isoterm_joint({n}, w, element_budget);
}

WordClassResult word_class(const FiniteMonoid& n, const Word& w, std::size_t length_cap,
                           std::size_t element_budget) {
  if (w.empty()) throw InputError("word_class requires a non-empty word");
  std::string inner = content(w);
  FreeObject fo = free_object_joint({n}, inner, element_budget);
  DfaView view{&fo, letter_indices(fo, inner), fo.element_of(w)};
  Trimmed t = analyze(view);
  WordClassResult out{t.has_cycle, {}};
  std::vector<char> co = coaccessible(view);
  struct Node {
    int state;
    Word word;
  };
  std::deque<Node> queue;
  queue.push_back(Node{fo.identity, Word()});
  while (!queue.empty()) {
    Node cur = queue.front();
    queue.pop_front();
    if (cur.state == view.accept) out.words.push_back(cur.word);
    if (cur.word.size() == length_cap) continue;
    for (int g : view.live_letters) {
      int to = fo.step(cur.state, g);
      if (!co[static_cast<std::size_t>(to)]) continue;
      queue.push_back(Node{to, cur.word * Word(std::string(1, fo.letters[static_cast<std::size_t>(g)]))});
    }
  }
  return out;
}

FiniteMonoid join_generator(const FiniteMonoid& a, const FiniteMonoid& b) {
  return direct_product(a, b);
}

}  // namespace monoidlab
