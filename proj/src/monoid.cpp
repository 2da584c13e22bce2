#include "monoidlab/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "monoidlab/error.hpp"

namespace monoidlab {

FiniteMonoid FiniteMonoid::validate(int size, std::vector<int> table,
                                    std::optional<int> identity,
                                    std::vector<std::string> names,
                                    std::string monoid_name) {
  if (size <= 0) throw InputError("monoid size must be positive");
  if (table.size() != static_cast<std::size_t>(size) * size) {
    throw InputError("table must have size*size entries");
  }
  for (int v : table) {
    if (v < 0 || v >= size) {
      throw InputError("table entry " + std::to_string(v) + " out of range");
    }
  }
  if (!names.empty() && names.size() != static_cast<std::size_t>(size)) {
    throw InputError("element_names must be empty or match size");
  }
  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * size + b]; };
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      for (int c = 0; c < size; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c))) {
          throw InputError("not associative at triple (" + std::to_string(a) +
                           "," + std::to_string(b) + "," + std::to_string(c) +
                           ")");
        }
      }
    }
  }
  auto is_identity = [&](int e) {
    for (int a = 0; a < size; ++a) {
      if (at(e, a) != a || at(a, e) != a) return false;
    }
    return true;
  };
  int id = -1;
  if (identity.has_value()) {
    if (*identity < 0 || *identity >= size || !is_identity(*identity)) {
      throw InputError("element " + std::to_string(identity.value_or(-1)) +
                       " is not a two-sided identity");
    }
    id = *identity;
  } else {
    for (int e = 0; e < size && id < 0; ++e) {
      if (is_identity(e)) id = e;
    }
    if (id < 0) throw InputError("no two-sided identity element");
  }
  FiniteMonoid m;
  m.size_ = size;
  m.identity_ = id;
  m.table_ = std::move(table);
  m.names_ = std::move(names);
  m.name_ = std::move(monoid_name);
  return m;
}

std::string FiniteMonoid::element_name(int e) const {
  if (!names_.empty()) return names_[static_cast<std::size_t>(e)];
  return std::to_string(e);
}

namespace {

std::vector<int> permuted_table(const FiniteMonoid& m, const std::vector<int>& perm) {
  // perm[old] = new
  int n = m.size();
  std::vector<int> out(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      out[static_cast<std::size_t>(perm[a]) * n + perm[b]] = perm[m.mul(a, b)];
    }
  }
  return out;
}

}  // namespace

std::vector<int> FiniteMonoid::canonical_table() const {
  int n = size_;
  // Candidate permutations send the identity to 0 and permute the rest.
  std::vector<int> rest;
  for (int e = 0; e < n; ++e) {
    if (e != identity_) rest.push_back(e);
  }
  std::vector<int> targets(static_cast<std::size_t>(std::max(0, n - 1)));
  std::iota(targets.begin(), targets.end(), 1);
  std::vector<int> best;
  do {
    std::vector<int> perm(static_cast<std::size_t>(n));
    perm[static_cast<std::size_t>(identity_)] = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      perm[static_cast<std::size_t>(rest[i])] = targets[i];
    }
    std::vector<int> cand = permuted_table(*this, perm);
    if (best.empty() || cand < best) best = std::move(cand);
  } while (std::next_permutation(targets.begin(), targets.end()));
  return best;
}

bool FiniteMonoid::isomorphic_to(const FiniteMonoid& other) const {
  return size_ == other.size_ && canonical_table() == other.canonical_table();
}

int evaluate(const FiniteMonoid& m, const Assignment& a, const Word& w) {
  int acc = m.identity();
  for (char c : w.letters()) {
    auto it = a.find(c);
    if (it == a.end()) {
      throw InputError(std::string("letter '") + c + "' has no assignment");
    }
    acc = m.mul(acc, it->second);
  }
  return acc;
}

Satisfaction satisfies(const FiniteMonoid& m, const Identity& id) {
  std::string letters = content(id.lhs * id.rhs);
  int n = m.size();
  std::vector<int> vals(letters.size(), 0);
  for (;;) {
    Assignment a;
    for (std::size_t i = 0; i < letters.size(); ++i) a[letters[i]] = vals[i];
    if (evaluate(m, a, id.lhs) != evaluate(m, a, id.rhs)) {
      return Satisfaction{false, std::move(a)};
    }
    // odometer, last letter fastest
    std::size_t i = letters.size();
    while (i > 0) {
      --i;
      if (++vals[i] < n) break;
      vals[i] = 0;
      if (i == 0) return Satisfaction{true, {}};
    }
    if (letters.empty()) return Satisfaction{true, {}};
  }
}

bool satisfies_all(const FiniteMonoid& m, const std::vector<Identity>& ids) {
  return std::all_of(ids.begin(), ids.end(),
                     [&](const Identity& id) { return satisfies(m, id).holds; });
}

std::string assignment_str(const FiniteMonoid& m, const Assignment& a) {
  std::string out;
  for (const auto& [c, e] : a) {
    if (!out.empty()) out += " ";
    out += c;
    out += "=" + m.element_name(e);
  }
  return out;
}

FiniteMonoid s_monoid(const Word& w) {
  if (w.empty()) throw InputError("s_monoid requires a non-empty word");
  std::vector<Word> subs = subwords(w);  // shortlex: empty word first
  int zero = static_cast<int>(subs.size());
  int size = zero + 1;
  std::map<Word, int> index;
  for (int i = 0; i < zero; ++i) index[subs[static_cast<std::size_t>(i)]] = i;
  std::vector<int> table(static_cast<std::size_t>(size) * size, zero);
  for (int a = 0; a < zero; ++a) {
    for (int b = 0; b < zero; ++b) {
      Word prod = subs[static_cast<std::size_t>(a)] * subs[static_cast<std::size_t>(b)];
      auto it = index.find(prod);
      table[static_cast<std::size_t>(a) * size + b] = it == index.end() ? zero : it->second;
    }
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(size));
  for (const Word& u : subs) names.push_back("[" + u.str() + "]");
  names.push_back("0");
  return FiniteMonoid::validate(size, std::move(table), 0, std::move(names),
                                "S(" + w.str() + ")");
}

FiniteMonoid cyclic_chain(int n) {
  if (n < 1) throw InputError("cyclic_chain requires n >= 1");
  int size = n + 1;
  std::vector<int> table(static_cast<std::size_t>(size) * size);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      table[static_cast<std::size_t>(a) * size + b] = std::min(a + b, n);
    }
  }
  std::vector<std::string> names;
  names.push_back("1");
  for (int k = 1; k <= n; ++k) {
    names.push_back(k == 1 ? "g" : "g^" + std::to_string(k));
  }
  return FiniteMonoid::validate(size, std::move(table), 0, std::move(names),
                                "C" + std::to_string(n) + "-gen");
}

FiniteMonoid lrb_monoid() {
  // 0 = 1, 1 = a, 2 = b; {a, b} is a left-zero semigroup.
  std::vector<int> table = {0, 1, 2,   //
                            1, 1, 1,   //
                            2, 2, 2};
  return FiniteMonoid::validate(3, std::move(table), 0, {"1", "a", "b"}, "LRB-gen");
}

FiniteMonoid trivial_monoid() {
  return FiniteMonoid::validate(1, {0}, 0, {"1"}, "T-gen");
}

FiniteMonoid sl2_monoid() {
  std::vector<int> table = {0, 1,  //
                            1, 1};
  return FiniteMonoid::validate(2, std::move(table), 0, {"1", "e"}, "SL2");
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  int na = a.size();
  int nb = b.size();
  int size = na * nb;
  std::vector<int> table(static_cast<std::size_t>(size) * size);
  auto enc = [&](int x, int y) { return x * nb + y; };
  for (int x1 = 0; x1 < na; ++x1) {
    for (int y1 = 0; y1 < nb; ++y1) {
      for (int x2 = 0; x2 < na; ++x2) {
        for (int y2 = 0; y2 < nb; ++y2) {
          table[static_cast<std::size_t>(enc(x1, y1)) * size + enc(x2, y2)] =
              enc(a.mul(x1, x2), b.mul(y1, y2));
        }
      }
    }
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(size));
  for (int x = 0; x < na; ++x) {
    for (int y = 0; y < nb; ++y) {
      names.push_back("(" + a.element_name(x) + "," + b.element_name(y) + ")");
    }
  }
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "x" + b.name();
  return FiniteMonoid::validate(size, std::move(table),
                                enc(a.identity(), b.identity()),
                                std::move(names), std::move(name));
}

Submonoid submonoid(const FiniteMonoid& m, const std::vector<int>& generators) {
  std::set<int> gens(generators.begin(), generators.end());
  std::set<int> closure = {m.identity()};
  closure.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> current(closure.begin(), closure.end());
    for (int x : current) {
      for (int g : gens) {
        if (closure.insert(m.mul(x, g)).second) grew = true;
      }
    }
  }
  // identity first, remaining elements in parent order
  std::vector<int> elements;
  elements.push_back(m.identity());
  for (int e : closure) {
    if (e != m.identity()) elements.push_back(e);
  }
  std::map<int, int> to_new;
  for (std::size_t i = 0; i < elements.size(); ++i) to_new[elements[i]] = static_cast<int>(i);
  int size = static_cast<int>(elements.size());
  std::vector<int> table(static_cast<std::size_t>(size) * size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      table[static_cast<std::size_t>(i) * size + j] =
          to_new.at(m.mul(elements[static_cast<std::size_t>(i)],
                          elements[static_cast<std::size_t>(j)]));
    }
  }
  std::vector<std::string> names;
  if (m.has_element_names()) {
    for (int e : elements) names.push_back(m.element_name(e));
  }
  return Submonoid{FiniteMonoid::validate(size, std::move(table), 0, std::move(names)),
                   std::move(elements)};
}

IndexPeriod index_period(const FiniteMonoid& m, int x) {
  std::vector<int> seen_at(static_cast<std::size_t>(m.size()), -1);
  int cur = x;
  int k = 1;
  for (;;) {
    int& slot = seen_at[static_cast<std::size_t>(cur)];
    if (slot >= 0) return IndexPeriod{slot, k - slot};
    slot = k;
    cur = m.mul(cur, x);
    ++k;
  }
}

bool is_completely_regular(const FiniteMonoid& m) {
  for (int x = 0; x < m.size(); ++x) {
    if (index_period(m, x).index != 1) return false;
  }
  return true;
}

bool is_group(const FiniteMonoid& m) {
  for (int x = 0; x < m.size(); ++x) {
    bool has_inverse = false;
    for (int y = 0; y < m.size() && !has_inverse; ++y) {
      has_inverse = m.mul(x, y) == m.identity() && m.mul(y, x) == m.identity();
    }
    if (!has_inverse) return false;
  }
  return true;
}

bool is_commutative(const FiniteMonoid& m) {
  for (int a = 0; a < m.size(); ++a) {
    for (int b = a + 1; b < m.size(); ++b) {
      if (m.mul(a, b) != m.mul(b, a)) return false;
    }
  }
  return true;
}

namespace {

// Backtracking fill of the non-identity part of the table, identity fixed
// at 0, re-checking associativity for every completed triple.
void enumerate_tables(int n, std::vector<int>& table, int cell,
                      const std::vector<std::pair<int, int>>& cells,
                      std::vector<std::vector<int>>& out) {
  if (cell == static_cast<int>(cells.size())) {
    out.push_back(table);
    return;
  }
  auto [r, c] = cells[static_cast<std::size_t>(cell)];
  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };
  auto known = [&](int a, int b) { return at(a, b) >= 0; };
  for (int v = 0; v < n; ++v) {
    table[static_cast<std::size_t>(r) * n + c] = v;
    bool ok = true;
    // check all triples whose subproducts are all known
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        for (int d = 0; d < n && ok; ++d) {
          if (!known(a, b) || !known(b, d)) continue;
          int ab = at(a, b);
          int bd = at(b, d);
          if (!known(ab, d) || !known(a, bd)) continue;
          ok = at(ab, d) == at(a, bd);
        }
      }
    }
    if (ok) enumerate_tables(n, table, cell + 1, cells, out);
  }
  table[static_cast<std::size_t>(r) * n + c] = -1;
}

}  // namespace

std::vector<FiniteMonoid> enumerate_monoids(int size, int max_size) {
  if (size < 1) throw InputError("enumeration size must be positive");
  if (size > max_size) {
    throw InputError("enumeration cap exceeded: size " + std::to_string(size) +
                     " > cap " + std::to_string(max_size));
  }
  int n = size;
  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    table[static_cast<std::size_t>(0) * n + a] = a;
    table[static_cast<std::size_t>(a) * n + 0] = a;
  }
  std::vector<std::pair<int, int>> cells;
  for (int r = 1; r < n; ++r) {
    for (int c = 1; c < n; ++c) cells.emplace_back(r, c);
  }
  std::vector<std::vector<int>> tables;
  enumerate_tables(n, table, 0, cells, tables);
  std::set<std::vector<int>> canon_seen;
  std::vector<FiniteMonoid> out;
  std::vector<std::pair<std::vector<int>, FiniteMonoid>> keyed;
  for (auto& t : tables) {
    FiniteMonoid m = FiniteMonoid::validate(n, std::move(t), 0);
    std::vector<int> key = m.canonical_table();
    if (canon_seen.insert(key).second) keyed.emplace_back(std::move(key), std::move(m));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  out.reserve(keyed.size());
  for (auto& [key, m] : keyed) {
    out.push_back(FiniteMonoid::validate(n, std::move(key), 0));
  }
  return out;
}

}  // namespace monoidlab
