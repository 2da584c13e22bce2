#include "monoidlab/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "monoidlab/error.hpp"

namespace monoidlab {

namespace {

bool is_letter(char c) { return c >= 'a' && c <= 'z'; }

}  // namespace

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    if (!is_letter(c)) {
      throw InputError(std::string("illegal letter '") + c + "' in word");
    }
  }
}

Word Word::parse(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    char c = text[i];
    std::size_t run = 1;  // letters contributed by this factor
    if (is_letter(c)) {
      ++i;
    } else if (c == '1') {
      run = 0;
      ++i;
    } else {
      throw InputError(std::string("illegal character '") + c + "' in word");
    }
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw InputError("malformed exponent: digits expected after '^'");
      unsigned long k = 0;
      for (std::size_t j = start; j < i; ++j) {
        k = k * 10 + static_cast<unsigned long>(text[j] - '0');
        if (k > 4096) throw InputError("malformed exponent: too large");
      }
      if (k == 0) throw InputError("malformed exponent: must be positive");
      run *= k;
      skip_ws();
    }
    if (run > 0) out.append(run, c);
  }
  return Word(std::move(out));
}

Word parse_word(std::string_view text) { return Word::parse(text); }

Word Word::operator*(const Word& rhs) const {
  Word w;
  w.letters_ = letters_ + rhs.letters_;
  return w;
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  Word w;
  w.letters_ = letters_.substr(pos, len);
  return w;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    out += letters_[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::strong_ordering Word::operator<=>(const Word& rhs) const {
  if (auto c = letters_.size() <=> rhs.letters_.size(); c != 0) return c;
  return letters_.compare(rhs.letters_) <=> 0;
}

std::string content(const Word& w) {
  std::set<char> seen(w.letters().begin(), w.letters().end());
  return std::string(seen.begin(), seen.end());
}

std::size_t occurrences(const Word& w, char letter) {
  return static_cast<std::size_t>(
      std::count(w.letters().begin(), w.letters().end(), letter));
}

std::vector<Word> subwords(const Word& w) {
  std::set<Word> out;
  out.insert(Word());
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t len = 1; pos + len <= w.size(); ++len) {
      out.insert(w.factor(pos, len));
    }
  }
  return std::vector<Word>(out.begin(), out.end());
}

std::string Identity::str() const { return lhs.str() + " = " + rhs.str(); }

Identity Identity::parse(std::string_view text) {
  // '=' or the three-byte UTF-8 encoding of U+2248.
  std::size_t pos = std::string_view::npos;
  std::size_t sign_len = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '=') {
      pos = i;
      sign_len = 1;
      break;
    }
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x89 &&
        static_cast<unsigned char>(text[i + 2]) == 0x88) {
      pos = i;
      sign_len = 3;
      break;
    }
  }
  if (pos == std::string_view::npos) {
    throw InputError("identity must contain '=': " + std::string(text));
  }
  return Identity{Word::parse(text.substr(0, pos)),
                  Word::parse(text.substr(pos + sign_len))};
}

Substitution::Substitution(std::map<char, Word> mapping)
    : mapping_(std::move(mapping)) {}

Substitution Substitution::single(char letter, Word image) {
  std::map<char, Word> m;
  m.emplace(letter, std::move(image));
  return Substitution(std::move(m));
}

const Word& Substitution::of(char letter) const {
  static const std::map<char, Word> kIdentityImages = [] {
    std::map<char, Word> m;
    for (char c = 'a'; c <= 'z'; ++c) m.emplace(c, Word(std::string(1, c)));
    return m;
  }();
  auto it = mapping_.find(letter);
  if (it != mapping_.end()) return it->second;
  return kIdentityImages.at(letter);
}

Word Substitution::apply(const Word& w) const {
  std::string out;
  for (char c : w.letters()) out += of(c).letters();
  return Word(std::move(out));
}

Identity Substitution::apply(const Identity& id) const {
  return Identity{apply(id.lhs), apply(id.rhs)};
}

std::string Substitution::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [c, img] : mapping_) {
    if (!first) out += ", ";
    first = false;
    out += c;
    out += "->" + img.str();
  }
  out += "}";
  return out;
}

}  // namespace monoidlab
