#include "monoidlab/formats.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "monoidlab/error.hpp"

namespace monoidlab {

namespace {

// Strips '#' comments and surrounding whitespace.
std::string clean_line(std::string line) {
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!line.empty() && is_space(static_cast<unsigned char>(line.back()))) line.pop_back();
  std::size_t start = 0;
  while (start < line.size() && is_space(static_cast<unsigned char>(line[start]))) ++start;
  return line.substr(start);
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int parse_int(const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw InputError("");
    return v;
  } catch (...) {
    throw InputError("malformed " + what + ": '" + tok + "'");
  }
}

}  // namespace

IdentityBasis parse_basis_text(std::string_view text, std::string name) {
  IdentityBasis basis;
  basis.name = std::move(name);
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = clean_line(std::move(raw));
    if (line.empty()) continue;
    basis.identities.push_back(Identity::parse(line));
  }
  return basis;
}

IdentityBasis load_basis_file(const std::string& path) {
  return parse_basis_text(read_file(path), path);
}

const FiniteMonoid& MonoidFile::last() const {
  if (monoids.empty()) throw InputError("monoid file defines no monoid");
  return monoids.back().second;
}

bool is_builtin_monoid(const std::string& name) {
  if (name == "T" || name == "SL2" || name == "LRB") return true;
  if (name.size() >= 2 && name[0] == 'C') {
    return std::all_of(name.begin() + 1, name.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  }
  return false;
}

FiniteMonoid builtin_monoid(const std::string& name) {
  if (name == "T") return trivial_monoid();
  if (name == "SL2") return sl2_monoid();
  if (name == "LRB") return lrb_monoid();
  if (name.size() >= 2 && name[0] == 'C') {
    int n = parse_int(name.substr(1), "C subscript");
    if (n < 2 || n > 12) throw InputError("C subscript must be in 2..12");
    return cyclic_chain(n);
  }
  throw InputError("unknown builtin monoid: " + name);
}

namespace {

FiniteMonoid run_construct(const std::vector<std::string>& tokens,
                           const MonoidFile& scope) {
  if (tokens.empty()) throw InputError("empty construct line");
  const std::string& kind = tokens[0];
  auto want = [&](std::size_t n) {
    if (tokens.size() != n) {
      throw InputError("construct " + kind + ": wrong number of arguments");
    }
  };
  if (kind == "S") {
    want(2);
    return s_monoid(Word::parse(tokens[1]));
  }
  if (kind == "C") {
    want(2);
    int n = parse_int(tokens[1], "construct C argument");
    if (n < 1) throw InputError("construct C needs n >= 1");
    return cyclic_chain(n);
  }
  if (kind == "LRB") {
    want(1);
    return lrb_monoid();
  }
  if (kind == "T") {
    want(1);
    return trivial_monoid();
  }
  if (kind == "SL2") {
    want(1);
    return sl2_monoid();
  }
  if (kind == "product") {
    want(3);
    auto resolve = [&](const std::string& name) -> FiniteMonoid {
      for (const auto& [n, m] : scope.monoids) {
        if (n == name) return m;
      }
      if (is_builtin_monoid(name)) return builtin_monoid(name);
      throw InputError("product operand not defined: " + name);
    };
    return direct_product(resolve(tokens[1]), resolve(tokens[2]));
  }
  throw InputError("unknown construct kind: " + kind);
}

}  // namespace

MonoidFile parse_monoid_text(std::string_view text) {
  MonoidFile file;
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
      std::string line = clean_line(std::move(raw));
      if (!line.empty()) lines.push_back(std::move(line));
    }
  }
  std::size_t i = 0;
  int anon = 0;
  while (i < lines.size()) {
    std::vector<std::string> head = split_tokens(lines[i]);
    std::string name;
    if (head[0] == "monoid") {
      if (head.size() != 2) throw InputError("monoid header needs exactly one name");
      name = head[1];
      ++i;
      if (i >= lines.size()) throw InputError("monoid " + name + " has no body");
      head = split_tokens(lines[i]);
    } else {
      name = "anonymous" + std::to_string(++anon);
    }
    if (head[0] == "construct") {
      file.monoids.emplace_back(
          name, run_construct({head.begin() + 1, head.end()}, file));
      ++i;
      continue;
    }
    if (head[0] != "size" || head.size() != 2) {
      throw InputError("expected 'size <k>' or 'construct ...' in monoid " + name);
    }
    int size = parse_int(head[1], "size");
    ++i;
    if (i >= lines.size()) throw InputError("missing identity line in monoid " + name);
    std::vector<std::string> idl = split_tokens(lines[i]);
    if (idl.size() != 2 || idl[0] != "identity") {
      throw InputError("expected 'identity <index>' in monoid " + name);
    }
    int identity = parse_int(idl[1], "identity index");
    ++i;
    if (i >= lines.size() || lines[i] != "table") {
      throw InputError("expected 'table' in monoid " + name);
    }
    ++i;
    std::vector<int> table;
    for (int r = 0; r < size; ++r, ++i) {
      if (i >= lines.size()) throw InputError("table row missing in monoid " + name);
      std::vector<std::string> row = split_tokens(lines[i]);
      if (static_cast<int>(row.size()) != size) {
        throw InputError("table row " + std::to_string(r) + " needs " +
                         std::to_string(size) + " entries in monoid " + name);
      }
      for (const std::string& tok : row) table.push_back(parse_int(tok, "table entry"));
    }
    file.monoids.emplace_back(
        name, FiniteMonoid::validate(size, std::move(table), identity, {}, name));
  }
  return file;
}

MonoidFile load_monoid_file(const std::string& path) {
  return parse_monoid_text(read_file(path));
}

FiniteMonoid resolve_monoid(const std::string& spec) {
  std::vector<std::string> tokens = split_tokens(spec);
  if (!tokens.empty() && tokens[0] == "construct") {
    MonoidFile empty;
    return run_construct({tokens.begin() + 1, tokens.end()}, empty);
  }
  if (tokens.size() == 1 && is_builtin_monoid(tokens[0])) {
    return builtin_monoid(tokens[0]);
  }
  return load_monoid_file(spec).last();
}

FiniteLattice parse_lattice_text(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
      std::string line = clean_line(std::move(raw));
      if (!line.empty()) lines.push_back(std::move(line));
    }
  }
  std::size_t i = 0;
  std::string name;
  if (i < lines.size()) {
    std::vector<std::string> head = split_tokens(lines[i]);
    if (head[0] == "lattice") {
      if (head.size() != 2) throw InputError("lattice header needs exactly one name");
      name = head[1];
      ++i;
    }
  }
  if (i >= lines.size()) throw InputError("missing 'size <n>' line in lattice file");
  std::vector<std::string> sz = split_tokens(lines[i]);
  if (sz.size() != 2 || sz[0] != "size") throw InputError("expected 'size <n>'");
  int size = parse_int(sz[1], "size");
  ++i;
  if (i >= lines.size() || lines[i] != "leq") throw InputError("expected 'leq' line");
  ++i;
  std::vector<std::pair<int, int>> pairs;
  for (; i < lines.size(); ++i) {
    std::vector<std::string> toks = split_tokens(lines[i]);
    if (toks.size() != 2) throw InputError("leq line needs two indices: " + lines[i]);
    pairs.emplace_back(parse_int(toks[0], "leq index"), parse_int(toks[1], "leq index"));
  }
  return FiniteLattice::validate(size, pairs, name);
}

FiniteLattice load_lattice_file(const std::string& path) {
  return parse_lattice_text(read_file(path));
}

std::string monoid_to_text(const FiniteMonoid& m, const std::string& name) {
  std::string out = "monoid " + (name.empty() ? std::string("anonymous") : name) + "\n";
  out += "size " + std::to_string(m.size()) + "\n";
  out += "identity " + std::to_string(m.identity()) + "\n";
  out += "table\n";
  for (int a = 0; a < m.size(); ++a) {
    for (int b = 0; b < m.size(); ++b) {
      if (b) out += " ";
      out += std::to_string(m.mul(a, b));
    }
    out += "\n";
  }
  return out;
}

}  // namespace monoidlab
