#ifndef MONOIDLAB_WORD_HPP_
#define MONOIDLAB_WORD_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace monoidlab {

// An element of the free monoid over the alphabet 'a'..'z'.  Letters are
// stored fully expanded; the empty word is the monoid identity and prints
// as "1".  Words are ordered shortlex (length first, then lexicographic),
// which is the order used everywhere determinism matters.
class Word {
 public:
  Word() = default;
  // Expects already-expanded letters; rejects anything outside 'a'..'z'.
  explicit Word(std::string letters);

  // Parses "yx^2"-style text: letters with optional positive exponents,
  // '1' for the empty word, whitespace ignored.  Inverse of str().
  static Word parse(std::string_view text);

  const std::string& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word operator*(const Word& rhs) const;
  char at(std::size_t i) const { return letters_[i]; }
  Word factor(std::size_t pos, std::size_t len) const;

  // Canonical printer: maximal runs re-compressed to ^k, empty word -> "1".
  std::string str() const;

  bool operator==(const Word&) const = default;
  // Shortlex.
  std::strong_ordering operator<=>(const Word& rhs) const;

 private:
  std::string letters_;
};

Word parse_word(std::string_view text);

// Distinct letters of w, sorted ascending.
std::string content(const Word& w);
std::size_t occurrences(const Word& w, char letter);

// All contiguous factors of w, including the empty word and w itself,
// sorted shortlex and deduplicated.
std::vector<Word> subwords(const Word& w);

// A universally quantified equation between two words.
struct Identity {
  Word lhs;
  Word rhs;

  bool trivial() const { return lhs == rhs; }
  // "lhs = rhs" in canonical word syntax.
  std::string str() const;
  // Accepts "<word> = <word>"; the UTF-8 sign U+2248 is a synonym for '='.
  static Identity parse(std::string_view text);

  bool operator==(const Identity&) const = default;
  std::strong_ordering operator<=>(const Identity&) const = default;
};

// A letter-to-word mapping extended to the unique endomorphism of the free
// monoid; unlisted letters map to themselves.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<char, Word> mapping);
  static Substitution single(char letter, Word image);

  const Word& of(char letter) const;
  Word apply(const Word& w) const;
  Identity apply(const Identity& id) const;

  const std::map<char, Word>& mapping() const noexcept { return mapping_; }
  // "{x->y^2, y->1}" with letters in ascending order.
  std::string str() const;

 private:
  std::map<char, Word> mapping_;
};

}  // namespace monoidlab

#endif  // MONOIDLAB_WORD_HPP_
