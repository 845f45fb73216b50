#pragma once

// Words in a free group F(x_1, ..., x_n).
//
// Text form: 'a'..'z' are x_1..x_26, the matching upper-case letter is the
// inverse, so "aB" is a b^-1.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hnfold {

class Alphabet {
 public:
  static constexpr int kMaxTextRank = 26;

  explicit Alphabet(int rank);

  int rank() const noexcept { return rank_; }
  bool contains(int index) const noexcept {
    return index >= 1 && index <= rank_;
  }

  friend bool operator==(Alphabet, Alphabet) = default;

 private:
  int rank_;
};

struct Letter {
  int index = 1;  // 1-based generator number
  int sign = 1;   // +1 or -1

  static constexpr Letter pos(int index) { return {index, 1}; }
  static constexpr Letter neg(int index) { return {index, -1}; }

  constexpr Letter inverse() const { return {index, -sign}; }
  constexpr bool positive() const { return sign > 0; }
  constexpr bool cancels(Letter other) const {
    return index == other.index && sign == -other.sign;
  }

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

/// A freely reduced word. Construction always reduces.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::span<const Letter> letters);

  Alphabet alphabet() const noexcept { return alphabet_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& u, const Word& v) {
    if (u.alphabet_.rank() != v.alphabet_.rank())
      return u.alphabet_.rank() < v.alphabet_.rank();
    if (u.size() != v.size()) return u.size() < v.size();
    return u.letters_ < v.letters_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

/// Throws AlphabetError if a letter index is outside the alphabet.
Word free_reduce(Alphabet alphabet, std::span<const Letter> raw);

Word invert(const Word& w);

/// Throws AlphabetError if the alphabets differ.
Word concat(const Word& u, const Word& v);

/// The empty word counts as positive.
bool is_positive(const Word& w);

/// Replaces each x_i by images[i-1] (x_i^-1 by its inverse) and reduces.
/// All images must share one alphabet, which becomes the result's; throws
/// AlphabetError otherwise or if an image is missing.
Word substitute(const Word& w, std::span<const Word> images);

/// Throws ParseError (line 1) on a character outside the alphabet.
Word parse_word(Alphabet alphabet, std::string_view text);
std::string to_string(const Word& w);

char letter_char(Letter l);

}  // namespace hnfold
