#include "monoidlab/eqlogic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "monoidlab/error.hpp"

namespace monoidlab {

namespace {

// Enumerates every way `pattern` can match a factor of w starting at pos:
// pattern letters take arbitrary (possibly empty) images, repeated letters
// must agree.  Images are tried shortest first, so enumeration order is
// deterministic.
void for_each_match(
    const std::string& w, std::size_t pos, const std::string& pattern,
    const std::function<void(std::size_t, const std::map<char, std::string>&)>& fn) {
  std::map<char, std::string> subst;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t pi,
                                                         std::size_t wi) {
    if (pi == pattern.size()) {
      fn(wi, subst);
      return;
    }
    char c = pattern[pi];
    auto it = subst.find(c);
    if (it != subst.end()) {
      const std::string& img = it->second;
      if (w.compare(wi, img.size(), img) == 0 && wi + img.size() <= w.size()) {
        go(pi + 1, wi + img.size());
      }
      return;
    }
    for (std::size_t len = 0; wi + len <= w.size(); ++len) {
      auto [ins, ok] = subst.emplace(c, w.substr(wi, len));
      (void)ok;
      go(pi + 1, wi + len);
      subst.erase(ins);
    }
  };
  go(0, pos);
}

struct Neighbor {
  Word word;
  RewriteStep step;
};

// All single-rewrite successors of w, in deterministic order: identity
// index, direction, position, then match order.
std::vector<Neighbor> neighbors(const IdentityBasis& basis, const Word& w,
                                std::size_t max_word_len) {
  std::vector<Neighbor> out;
  const std::string& ws = w.letters();
  for (int i = 0; i < static_cast<int>(basis.identities.size()); ++i) {
    for (bool forward : {true, false}) {
      const Word& from = forward ? basis.identities[static_cast<std::size_t>(i)].lhs
                                 : basis.identities[static_cast<std::size_t>(i)].rhs;
      const Word& to = forward ? basis.identities[static_cast<std::size_t>(i)].rhs
                               : basis.identities[static_cast<std::size_t>(i)].lhs;
      for (std::size_t pos = 0; pos <= ws.size(); ++pos) {
        for_each_match(ws, pos, from.letters(),
                       [&](std::size_t end, const std::map<char, std::string>& m) {
                         std::map<char, Word> images;
                         for (const auto& [c, img] : m) images.emplace(c, Word(img));
                         // letters appearing only on the `to` side: image 1
                         for (char c : to.letters()) {
                           if (!images.count(c)) images.emplace(c, Word());
                         }
                         Substitution subst(std::move(images));
                         Word replacement = subst.apply(to);
                         std::size_t new_len = ws.size() - (end - pos) + replacement.size();
                         if (new_len > max_word_len) return;
                         Word result = w.factor(0, pos) * replacement *
                                       w.factor(end, ws.size() - end);
                         out.push_back(Neighbor{std::move(result),
                                                RewriteStep{pos, i, forward, std::move(subst)}});
                       });
      }
    }
  }
  return out;
}

struct ParentInfo {
  Word parent;
  RewriteStep step;  // applied to parent yields this word
  bool root = false;
};

RewriteStep inverted(const RewriteStep& s) {
  return RewriteStep{s.pos, s.identity_index, !s.forward, s.subst};
}

// Chain of steps leading from the side's root to w, per the parent map.
std::vector<RewriteStep> steps_from_root(const std::map<Word, ParentInfo>& visited,
                                         Word w) {
  std::vector<RewriteStep> steps;
  for (;;) {
    const ParentInfo& info = visited.at(w);
    if (info.root) break;
    steps.push_back(info.step);
    w = info.parent;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace

Word apply_step(const IdentityBasis& basis, const Word& w, const RewriteStep& step) {
  if (step.identity_index < 0 ||
      step.identity_index >= static_cast<int>(basis.identities.size())) {
    throw InputError("rewrite step references missing identity");
  }
  const Identity& id = basis.identities[static_cast<std::size_t>(step.identity_index)];
  Word from = step.subst.apply(step.forward ? id.lhs : id.rhs);
  Word to = step.subst.apply(step.forward ? id.rhs : id.lhs);
  if (step.pos + from.size() > w.size() ||
      w.factor(step.pos, from.size()) != from) {
    throw InputError("rewrite step does not match word " + w.str());
  }
  return w.factor(0, step.pos) * to * w.factor(step.pos + from.size(), w.size() - step.pos - from.size());
}

bool trace_replays(const IdentityBasis& basis, const Identity& goal,
                   const std::vector<RewriteStep>& trace) {
  Word cur = goal.lhs;
  for (const RewriteStep& s : trace) cur = apply_step(basis, cur, s);
  return cur == goal.rhs;
}

DerivationVerdict derive_bounded(const IdentityBasis& basis, const Identity& goal,
                                 std::optional<std::size_t> max_word_len,
                                 std::optional<std::uint64_t> max_steps) {
  std::size_t len_cap =
      max_word_len.value_or(std::max(goal.lhs.size(), goal.rhs.size()) + 6);
  std::uint64_t step_cap = max_steps.value_or(100000);

  DerivationVerdict verdict;
  if (goal.trivial()) {
    verdict.status = DeriveStatus::proved;
    return verdict;
  }

  // side 0 grows from lhs, side 1 from rhs
  std::map<Word, ParentInfo> visited[2];
  std::set<Word> frontier[2];
  visited[0][goal.lhs] = ParentInfo{{}, {}, true};
  visited[1][goal.rhs] = ParentInfo{{}, {}, true};
  frontier[0].insert(goal.lhs);
  frontier[1].insert(goal.rhs);

  auto finish = [&](int side, const Word& meet) {
    std::vector<RewriteStep> trace = steps_from_root(visited[0], meet);
    std::vector<RewriteStep> back = steps_from_root(visited[1], meet);
    for (auto it = back.rbegin(); it != back.rend(); ++it) {
      trace.push_back(inverted(*it));
    }
    (void)side;
    verdict.status = DeriveStatus::proved;
    verdict.trace = std::move(trace);
  };

  while (!frontier[0].empty() || !frontier[1].empty()) {
    int side;  // expand the smaller non-empty frontier
    if (frontier[0].empty()) {
      side = 1;
    } else if (frontier[1].empty()) {
      side = 0;
    } else {
      side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    }
    std::set<Word> next;
    for (const Word& w : frontier[side]) {
      if (verdict.steps_spent >= step_cap) {
        verdict.status = DeriveStatus::unknown;
        return verdict;
      }
      ++verdict.steps_spent;
      for (Neighbor& nb : neighbors(basis, w, len_cap)) {
        if (visited[side].count(nb.word)) continue;
        visited[side][nb.word] = ParentInfo{w, std::move(nb.step), false};
        if (visited[1 - side].count(nb.word)) {
          finish(side, nb.word);
          return verdict;
        }
        next.insert(nb.word);
      }
    }
    frontier[side] = std::move(next);
  }
  verdict.status = DeriveStatus::unknown;
  return verdict;
}

DerivationVerdict refute(const IdentityBasis& basis, const Identity& goal,
                         int max_model_size) {
  if (max_model_size < 1 || max_model_size > 4) {
    throw InputError("refute model size cap must be between 1 and 4");
  }
  DerivationVerdict verdict;
  for (int size = 1; size <= max_model_size; ++size) {
    for (const FiniteMonoid& m : enumerate_monoids(size)) {
      ++verdict.steps_spent;
      if (!satisfies_all(m, basis.identities)) continue;
      Satisfaction sat = satisfies(m, goal);
      if (!sat.holds) {
        verdict.status = DeriveStatus::refuted;
        verdict.countermodel = m;
        verdict.counter_assignment = std::move(sat.witness);
        return verdict;
      }
    }
  }
  verdict.status = DeriveStatus::unknown;
  return verdict;
}

bool decide_cn(const Word& u, const Word& v, int n) {
  if (n < 2) throw InputError("decide_cn requires n >= 2");
  std::string letters = content(u * v);
  for (char c : letters) {
    auto cap = [&](const Word& w) {
      return std::min(occurrences(w, c), static_cast<std::size_t>(n));
    };
    if (cap(u) != cap(v)) return false;
  }
  return true;
}

std::string trace_str(const IdentityBasis& basis, const Identity& goal,
                      const std::vector<RewriteStep>& trace) {
  std::string out = goal.lhs.str();
  Word cur = goal.lhs;
  for (const RewriteStep& s : trace) {
    const Identity& id = basis.identities[static_cast<std::size_t>(s.identity_index)];
    cur = apply_step(basis, cur, s);
    out += "\n  =[" + id.str() + (s.forward ? " ->" : " <-") + " at " +
           std::to_string(s.pos) + " with " + s.subst.str() + "]= " + cur.str();
  }
  return out;
}

}  // namespace monoidlab
