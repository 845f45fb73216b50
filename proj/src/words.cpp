#include "hnfold/words.hpp"

#include <algorithm>
#include <cctype>

#include "hnfold/error.hpp"

namespace hnfold {

Alphabet::Alphabet(int rank) : rank_(rank) {
  if (rank < 1) {
    throw AlphabetError("alphabet rank must be at least 1, got " +
                        std::to_string(rank));
  }
}

Word::Word(Alphabet alphabet, std::span<const Letter> letters)
    : alphabet_(alphabet) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (!alphabet.contains(l.index) || (l.sign != 1 && l.sign != -1)) {
      throw AlphabetError("letter x" + std::to_string(l.index) +
                          " is not in an alphabet of rank " +
                          std::to_string(alphabet.rank()));
    }
    if (!letters_.empty() && letters_.back().cancels(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word free_reduce(Alphabet alphabet, std::span<const Letter> raw) {
  return Word(alphabet, raw);
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(w.alphabet(), out);
}

Word concat(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet()) {
    throw AlphabetError("cannot concatenate words over alphabets of rank " +
                        std::to_string(u.alphabet().rank()) + " and " +
                        std::to_string(v.alphabet().rank()));
  }
  std::vector<Letter> joined(u.letters());
  joined.insert(joined.end(), v.letters().begin(), v.letters().end());
  return Word(u.alphabet(), joined);
}

bool is_positive(const Word& w) {
  return std::all_of(w.letters().begin(), w.letters().end(),
                     [](Letter l) { return l.positive(); });
}

Word substitute(const Word& w, std::span<const Word> images) {
  if (images.size() < static_cast<std::size_t>(w.alphabet().rank())) {
    throw AlphabetError("substitution needs an image for every letter");
  }
  if (images.empty()) return w;
  const Alphabet target = images.front().alphabet();
  std::vector<Letter> raw;
  for (const Word& image : images) {
    if (image.alphabet() != target) {
      throw AlphabetError("substitution images use different alphabets");
    }
  }
  for (Letter l : w.letters()) {
    const Word& image = images[static_cast<std::size_t>(l.index - 1)];
    if (l.positive()) {
      raw.insert(raw.end(), image.letters().begin(), image.letters().end());
    } else {
      for (auto it = image.letters().rbegin(); it != image.letters().rend(); ++it) {
        raw.push_back(it->inverse());
      }
    }
  }
  return Word(target, raw);
}

Word parse_word(Alphabet alphabet, std::string_view text) {
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) continue;
    int index = 0;
    int sign = 1;
    if (c >= 'a' && c <= 'z') {
      index = c - 'a' + 1;
    } else if (c >= 'A' && c <= 'Z') {
      index = c - 'A' + 1;
      sign = -1;
    }
    if (index == 0 || !alphabet.contains(index)) {
      throw ParseError(1, i + 1,
                       std::string("unexpected character '") +
                           static_cast<char>(c) + "' for alphabet of rank " +
                           std::to_string(alphabet.rank()));
    }
    raw.push_back({index, sign});
  }
  return Word(alphabet, raw);
}

char letter_char(Letter l) {
  if (l.index < 1 || l.index > Alphabet::kMaxTextRank) {
    throw AlphabetError("letter x" + std::to_string(l.index) +
                        " has no single-character text form");
  }
  const char base = l.positive() ? 'a' : 'A';
  return static_cast<char>(base + l.index - 1);
}

std::string to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w.letters()) out.push_back(letter_char(l));
  return out;
}

}  // namespace hnfold
