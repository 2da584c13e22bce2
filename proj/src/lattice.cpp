#include "monoidlab/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "monoidlab/error.hpp"

namespace monoidlab {

namespace {

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Shared meet/join computation over an arbitrary leq matrix.  Returns the
// witness pair lacking a bound instead of a table when the order is not a
// lattice.
struct BoundTables {
  std::vector<int> meet, join;
  std::optional<std::pair<int, int>> failure;
};

BoundTables compute_bounds(int n, const std::vector<std::uint8_t>& leq) {
  auto le = [&](int a, int b) { return leq[static_cast<std::size_t>(a) * n + b] != 0; };
  BoundTables t;
  t.meet.assign(static_cast<std::size_t>(n) * n, -1);
  t.join.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int glb = -1;
      for (int c = 0; c < n; ++c) {
        if (!le(c, a) || !le(c, b)) continue;
        bool greatest = true;
        for (int d = 0; d < n && greatest; ++d) {
          if (le(d, a) && le(d, b) && !le(d, c)) greatest = false;
        }
        if (greatest) {
          glb = c;
          break;
        }
      }
      int lub = -1;
      for (int c = 0; c < n; ++c) {
        if (!le(a, c) || !le(b, c)) continue;
        bool least = true;
        for (int d = 0; d < n && least; ++d) {
          if (le(a, d) && le(b, d) && !le(c, d)) least = false;
        }
        if (least) {
          lub = c;
          break;
        }
      }
      if (glb < 0 || lub < 0) {
        t.failure = std::make_pair(a, b);
        return t;
      }
      t.meet[static_cast<std::size_t>(a) * n + b] = glb;
      t.join[static_cast<std::size_t>(a) * n + b] = lub;
    }
  }
  return t;
}

}  // namespace

FiniteLattice FiniteLattice::validate(int size,
                                      const std::vector<std::pair<int, int>>& leq_pairs,
                                      std::string name) {
  if (size <= 0) throw InputError("lattice size must be positive");
  int n = size;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) leq[static_cast<std::size_t>(a) * n + a] = 1;
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw InputError("leq pair " + pair_str(a, b) + " out of range");
    }
    leq[static_cast<std::size_t>(a) * n + b] = 1;
  }
  // transitive closure
  for (int k = 0; k < n; ++k) {
    for (int a = 0; a < n; ++a) {
      if (!leq[static_cast<std::size_t>(a) * n + k]) continue;
      for (int b = 0; b < n; ++b) {
        if (leq[static_cast<std::size_t>(k) * n + b]) {
          leq[static_cast<std::size_t>(a) * n + b] = 1;
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && leq[static_cast<std::size_t>(a) * n + b] &&
          leq[static_cast<std::size_t>(b) * n + a]) {
        throw InputError("not a partial order: cycle through " + pair_str(a, b));
      }
    }
  }
  BoundTables t = compute_bounds(n, leq);
  if (t.failure) {
    throw InputError("not a lattice: pair " + pair_str(t.failure->first, t.failure->second) +
                     " lacks a unique meet or join");
  }
  FiniteLattice l;
  l.size_ = n;
  l.leq_ = std::move(leq);
  l.meet_ = std::move(t.meet);
  l.join_ = std::move(t.join);
  l.name_ = std::move(name);
  int bot = 0;
  int top = 0;
  for (int a = 1; a < n; ++a) {
    bot = l.meet(bot, a);
    top = l.join(top, a);
  }
  l.bottom_ = bot;
  l.top_ = top;
  return l;
}

FiniteLattice FiniteLattice::dual() const {
  FiniteLattice d;
  d.size_ = size_;
  d.leq_.assign(static_cast<std::size_t>(size_) * size_, 0);
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      d.leq_[static_cast<std::size_t>(a) * size_ + b] = leq_[static_cast<std::size_t>(b) * size_ + a];
    }
  }
  d.meet_ = join_;
  d.join_ = meet_;
  d.bottom_ = top_;
  d.top_ = bottom_;
  d.name_ = name_.empty() ? "" : name_ + "-dual";
  return d;
}

std::vector<std::uint8_t> FiniteLattice::canonical_matrix() const {
  int n = size_;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best;
  do {
    std::vector<std::uint8_t> cand(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (leq(a, b)) {
          cand[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)]) * n +
               perm[static_cast<std::size_t>(b)]] = 1;
        }
      }
    }
    if (best.empty() || cand < best) best = std::move(cand);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

PredicateResult is_modular_element(const FiniteLattice& l, int x) {
  for (int y = 0; y < l.size(); ++y) {
    for (int z = 0; z < l.size(); ++z) {
      if (!l.leq(y, z)) continue;
      if (l.meet(l.join(x, y), z) != l.join(l.meet(x, z), y)) {
        return PredicateResult{false, std::make_pair(y, z)};
      }
    }
  }
  return PredicateResult{true, std::nullopt};
}

PredicateResult is_standard_element(const FiniteLattice& l, int x) {
  for (int y = 0; y < l.size(); ++y) {
    for (int z = 0; z < l.size(); ++z) {
      if (l.meet(l.join(x, y), z) != l.join(l.meet(x, z), l.meet(y, z))) {
        return PredicateResult{false, std::make_pair(y, z)};
      }
    }
  }
  return PredicateResult{true, std::nullopt};
}

PredicateResult is_costandard_element(const FiniteLattice& l, int x) {
  return is_standard_element(l.dual(), x);
}

PredicateResult is_neutral_element(const FiniteLattice& l, int x) {
  for (int y = 0; y < l.size(); ++y) {
    for (int z = 0; z < l.size(); ++z) {
      int lhs = l.meet(l.meet(l.join(x, y), l.join(y, z)), l.join(z, x));
      int rhs = l.join(l.join(l.meet(x, y), l.meet(y, z)), l.meet(z, x));
      if (lhs != rhs) return PredicateResult{false, std::make_pair(y, z)};
    }
  }
  return PredicateResult{true, std::nullopt};
}

PredicateResult is_lower_modular_element(const FiniteLattice& l, int x) {
  for (int y = 0; y < l.size(); ++y) {
    for (int z = 0; z < l.size(); ++z) {
      if (!l.leq(x, y)) continue;
      if (l.join(x, l.meet(y, z)) != l.meet(y, l.join(x, z))) {
        return PredicateResult{false, std::make_pair(y, z)};
      }
    }
  }
  return PredicateResult{true, std::nullopt};
}

PredicateResult is_upper_modular_element(const FiniteLattice& l, int x) {
  return is_lower_modular_element(l.dual(), x);
}

std::optional<std::pair<int, int>> find_pentagon_witness(const FiniteLattice& l, int x) {
  for (int u = 0; u < l.size(); ++u) {
    for (int w = 0; w < l.size(); ++w) {
      if (u == w || !l.leq(u, w)) continue;
      if (l.join(x, u) == l.join(x, w) && l.meet(x, u) == l.meet(x, w)) {
        return std::make_pair(u, w);
      }
    }
  }
  return std::nullopt;
}

ElementReport classify_element(const FiniteLattice& l, int x) {
  ElementReport r;
  r.element = x;
  auto record = [&](const char* flag, const PredicateResult& p) {
    if (!p.holds) r.witnesses.emplace_back(flag, *p.witness);
    return p.holds;
  };
  r.neutral = record("neutral", is_neutral_element(l, x));
  r.standard = record("standard", is_standard_element(l, x));
  r.costandard = record("costandard", is_costandard_element(l, x));
  r.modular = record("modular", is_modular_element(l, x));
  r.lower_modular = record("lower_modular", is_lower_modular_element(l, x));
  r.upper_modular = record("upper_modular", is_upper_modular_element(l, x));
  bool chain_ok = (!r.neutral || (r.standard && r.costandard)) &&
                  (!r.standard || (r.modular && r.lower_modular)) &&
                  (!r.costandard || (r.modular && r.upper_modular));
  if (!chain_ok) {
    throw Error("special-element implication chain violated at element " +
                std::to_string(x) + "; predicate bug");
  }
  return r;
}

bool is_distributive(const FiniteLattice& l) {
  for (int a = 0; a < l.size(); ++a) {
    for (int b = 0; b < l.size(); ++b) {
      for (int c = 0; c < l.size(); ++c) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Enumeration works over orders that refine the index order (every poset
// has a linear extension, so each isomorphism class shows up); bottom and
// top are then forced to the extreme indices, which keeps canonization to
// (n-2)! permutations.
struct MaskOrder {
  int n;
  std::vector<std::uint32_t> below;  // below[b] = bitmask of a with a <= b
  std::vector<std::uint32_t> above;
};

bool is_lattice_masks(const MaskOrder& o) {
  int n = o.n;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      std::uint32_t lower = o.below[static_cast<std::size_t>(a)] &
                            o.below[static_cast<std::size_t>(b)];
      bool glb = false;
      for (int c = 0; c < n && !glb; ++c) {
        if ((lower >> c) & 1u) {
          glb = (lower & ~o.below[static_cast<std::size_t>(c)]) == 0;
        }
      }
      if (!glb) return false;
      std::uint32_t upper = o.above[static_cast<std::size_t>(a)] &
                            o.above[static_cast<std::size_t>(b)];
      bool lub = false;
      for (int c = 0; c < n && !lub; ++c) {
        if ((upper >> c) & 1u) {
          lub = (upper & ~o.above[static_cast<std::size_t>(c)]) == 0;
        }
      }
      if (!lub) return false;
    }
  }
  return true;
}

std::uint64_t matrix_key(int n, const std::vector<std::uint8_t>& leq,
                         const std::vector<int>& perm) {
  std::uint64_t key = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (leq[static_cast<std::size_t>(a) * n + b]) {
        key |= std::uint64_t{1}
               << (perm[static_cast<std::size_t>(a)] * n + perm[static_cast<std::size_t>(b)]);
      }
    }
  }
  return key;
}

}  // namespace

std::vector<FiniteLattice> enumerate_lattices(int n, int max_size) {
  if (n < 1) throw InputError("lattice enumeration size must be positive");
  if (n > max_size || n > 7) {
    throw InputError("lattice enumeration cap exceeded: size " + std::to_string(n));
  }
  if (n == 1) {
    return {FiniteLattice::validate(1, {})};
  }
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::set<std::uint64_t> canon;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    MaskOrder o;
    o.n = n;
    o.below.assign(static_cast<std::size_t>(n), 0);
    o.above.assign(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
      o.below[static_cast<std::size_t>(a)] |= 1u << a;
      o.above[static_cast<std::size_t>(a)] |= 1u << a;
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if ((mask >> p) & 1u) {
        auto [a, b] = pairs[p];
        o.below[static_cast<std::size_t>(b)] |= 1u << a;
        o.above[static_cast<std::size_t>(a)] |= 1u << b;
      }
    }
    // keep only transitively closed relations so each labeled poset is
    // visited exactly once
    bool transitive = true;
    for (int b = 0; b < n && transitive; ++b) {
      for (int c = 0; c < n && transitive; ++c) {
        if ((o.below[static_cast<std::size_t>(c)] >> b) & 1u) {
          transitive = (o.below[static_cast<std::size_t>(b)] &
                        ~o.below[static_cast<std::size_t>(c)]) == 0;
        }
      }
    }
    if (!transitive || !is_lattice_masks(o)) continue;
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a < n; ++a) {
        if ((o.below[static_cast<std::size_t>(b)] >> a) & 1u) {
          leq[static_cast<std::size_t>(a) * n + b] = 1;
        }
      }
    }
    // bottom is index 0 and top index n-1 under the index-order convention
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> middle(static_cast<std::size_t>(n - 2));
    std::iota(middle.begin(), middle.end(), 1);
    std::uint64_t best = ~std::uint64_t{0};
    do {
      for (int i = 0; i < n - 2; ++i) perm[static_cast<std::size_t>(i + 1)] = middle[static_cast<std::size_t>(i)];
      best = std::min(best, matrix_key(n, leq, perm));
    } while (std::next_permutation(middle.begin(), middle.end()));
    canon.insert(best);
  }
  std::vector<FiniteLattice> out;
  for (std::uint64_t key : canon) {
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if ((key >> (a * n + b)) & 1u) rel.emplace_back(a, b);
      }
    }
    out.push_back(FiniteLattice::validate(n, rel));
  }
  return out;
}

Sublattice sublattice_generated(const FiniteLattice& l, std::vector<int> subset) {
  if (subset.empty()) throw InputError("sublattice generation needs a non-empty subset");
  std::set<int> closure(subset.begin(), subset.end());
  for (int e : closure) {
    if (e < 0 || e >= l.size()) throw InputError("subset element out of range");
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(closure.begin(), closure.end());
    for (int a : cur) {
      for (int b : cur) {
        if (closure.insert(l.meet(a, b)).second) grew = true;
        if (closure.insert(l.join(a, b)).second) grew = true;
      }
    }
  }
  std::vector<int> embedding(closure.begin(), closure.end());
  std::vector<std::pair<int, int>> rel;
  for (std::size_t i = 0; i < embedding.size(); ++i) {
    for (std::size_t j = 0; j < embedding.size(); ++j) {
      if (l.leq(embedding[i], embedding[j])) {
        rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Sublattice{FiniteLattice::validate(static_cast<int>(embedding.size()), rel),
                    std::move(embedding)};
}

FiniteLattice chain_lattice(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a + 1 < n; ++a) rel.emplace_back(a, a + 1);
  return FiniteLattice::validate(n, rel, "chain" + std::to_string(n));
}

FiniteLattice boolean_lattice(int num_atoms) {
  if (num_atoms < 0 || num_atoms > 4) throw InputError("boolean_lattice supports 0..4 atoms");
  int n = 1 << num_atoms;
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if ((a & b) == a) rel.emplace_back(a, b);
    }
  }
  return FiniteLattice::validate(n, rel, "2^" + std::to_string(num_atoms));
}

FiniteLattice n5_lattice() {
  // 0 < 1 < 2 < 4 and 0 < 3 < 4; element 3 is the pentagon side
  return FiniteLattice::validate(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, "N5");
}

FiniteLattice m3_lattice() {
  return FiniteLattice::validate(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, "M3");
}

std::optional<MinedExample> mine_modular_lowermodular_not_standard(int max_size) {
  for (int n = 1; n <= max_size; ++n) {
    for (const FiniteLattice& l : enumerate_lattices(n)) {
      for (int x = 0; x < l.size(); ++x) {
        if (!is_modular_element(l, x).holds) continue;
        if (!is_lower_modular_element(l, x).holds) continue;
        PredicateResult st = is_standard_element(l, x);
        if (!st.holds) {
          return MinedExample{l, x, *st.witness};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace monoidlab
