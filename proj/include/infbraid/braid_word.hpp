#pragma once

#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "infbraid/permutation.hpp"

namespace infbraid {

/// Raised by the text parsers; `position()` is the 0-based offset of the
/// offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// One Artin generator letter. `sign` is +1 for sigma_index, -1 for its inverse.
///
/// sigma_i is the positive crossing of the strands at positions i and i+1: the
/// strand at position i passes over and the pair turns counterclockwise in C.
struct Letter {
  std::size_t index = 0;
  int sign = 1;

  Letter inverse() const noexcept { return {index, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter sigma(std::size_t i) { return {i, +1}; }
inline Letter sigma_inv(std::size_t i) { return {i, -1}; }

/// A finite braid word on a fixed number of strands.
class BraidWord {
 public:
  explicit BraidWord(std::size_t strands) : strands_(strands) {
    if (strands == 0) throw std::invalid_argument("a braid needs at least one strand");
  }

  BraidWord(std::size_t strands, std::vector<Letter> letters)
      : strands_(strands), letters_(std::move(letters)) {
    if (strands == 0) throw std::invalid_argument("a braid needs at least one strand");
    for (const Letter& l : letters_) check_letter(l);
  }

  std::size_t strands() const noexcept { return strands_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

 private:
  void check_letter(const Letter& l) const {
    if (l.index + 1 >= strands_) {
      throw std::out_of_range("generator s" + std::to_string(l.index) + " is illegal on " +
                              std::to_string(strands_) + " strands");
    }
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  }

  std::size_t strands_;
  std::vector<Letter> letters_;
};

inline BraidWord identity_word(std::size_t strands) { return BraidWord(strands); }

/// Printer for the grammar `B<n>: s<i> s<j>^-1 ...` (single spaces).
inline std::string to_string(const BraidWord& w) {
  std::string out = "B" + std::to_string(w.strands()) + ":";
  for (const Letter& l : w.letters()) {
    out += " s" + std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

namespace detail {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool at_end() const { return pos >= text.size(); }
  char peek() const { return at_end() ? '\0' : text[pos]; }
  bool skip_ws() {
    std::size_t before = pos;
    while (!at_end() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos != before;
  }
  void expect(char c, const char* what) {
    if (peek() != c) throw ParseError(std::string("expected ") + what, pos);
    ++pos;
  }
  std::size_t nat() {
    std::size_t start = pos;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected a natural number", pos);
    std::size_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t digit = static_cast<std::size_t>(text[pos] - '0');
      if (value > (SIZE_MAX - digit) / 10) throw ParseError("number too large", start);
      value = value * 10 + digit;
      ++pos;
    }
    return value;
  }
  bool consume(std::string_view s) {
    if (text.substr(pos, s.size()) == s) {
      pos += s.size();
      return true;
    }
    return false;
  }
};

}  // namespace detail

/// Parses `B<n>: letter*` where a letter is `s<i>` or `s<i>^-1` and letters are
/// whitespace separated.
inline BraidWord parse_word(std::string_view text) {
  detail::Cursor cur{text};
  cur.skip_ws();
  cur.expect('B', "'B'");
  std::size_t strands_at = cur.pos;
  std::size_t strands = cur.nat();
  if (strands == 0) throw ParseError("strand count must be positive", strands_at);
  cur.expect(':', "':'");
  std::vector<Letter> letters;
  bool separated = true;
  while (true) {
    bool ws = cur.skip_ws();
    if (cur.at_end()) break;
    separated = separated || ws;
    if (!separated) throw ParseError("letters must be separated by whitespace", cur.pos);
    std::size_t letter_at = cur.pos;
    cur.expect('s', "'s'");
    std::size_t index = cur.nat();
    int sign = cur.consume("^-1") ? -1 : 1;
    if (index + 1 >= strands) {
      throw ParseError("generator s" + std::to_string(index) + " out of range for " +
                           std::to_string(strands) + " strands",
                       letter_at);
    }
    letters.push_back({index, sign});
    separated = false;
  }
  return BraidWord(strands, std::move(letters));
}

inline void require_same_strands(const BraidWord& f, const BraidWord& g) {
  if (f.strands() != g.strands()) {
    throw std::invalid_argument("strand-count mismatch: " + std::to_string(f.strands()) + " vs " +
                                std::to_string(g.strands()));
  }
}

/// Group product. Concatenation of letters realizes f # g: the relabeling by
/// f(1) is absorbed because letters address positions, not strand names.
inline BraidWord compose(const BraidWord& f, const BraidWord& g) {
  require_same_strands(f, g);
  std::vector<Letter> letters = f.letters();
  letters.insert(letters.end(), g.letters().begin(), g.letters().end());
  return BraidWord(f.strands(), std::move(letters));
}

inline BraidWord inverse(const BraidWord& f) {
  std::vector<Letter> letters;
  letters.reserve(f.length());
  for (auto it = f.letters().rbegin(); it != f.letters().rend(); ++it) letters.push_back(it->inverse());
  return BraidWord(f.strands(), std::move(letters));
}

inline BraidWord power(const BraidWord& f, int exponent) {
  BraidWord base = exponent < 0 ? inverse(f) : f;
  BraidWord out(f.strands());
  for (int k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) out = compose(out, base);
  return out;
}

/// Pads f with straight strands on top.
inline BraidWord pad(const BraidWord& f, std::size_t strands) {
  if (strands < f.strands()) throw std::invalid_argument("cannot pad to fewer strands");
  return BraidWord(strands, f.letters());
}

/// Start index -> end position, composing the transpositions (i i+1) left to right.
inline Permutation underlying_permutation(const BraidWord& f) {
  // at[p] = start index of the strand currently at position p
  std::vector<std::size_t> at(f.strands());
  for (std::size_t p = 0; p < at.size(); ++p) at[p] = p;
  for (const Letter& l : f.letters()) std::swap(at[l.index], at[l.index + 1]);
  std::vector<std::size_t> images(f.strands());
  for (std::size_t p = 0; p < at.size(); ++p) images[at[p]] = p;
  return Permutation(std::move(images));
}

inline long exponent_sum(const BraidWord& f) {
  long sum = 0;
  for (const Letter& l : f.letters()) sum += l.sign;
  return sum;
}

inline bool is_pure(const BraidWord& f) { return underlying_permutation(f).is_identity(); }

/// A positive word realizing `p` (start index -> end position), built by bubble sort.
inline BraidWord word_for_permutation(const Permutation& p) {
  std::size_t n = p.size();
  BraidWord out(n == 0 ? 1 : n);
  // at[k] = target position of the strand currently at position k
  std::vector<std::size_t> at = p.images();
  std::vector<Letter> letters;
  for (std::size_t pass = 0; pass < n; ++pass) {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (at[k] > at[k + 1]) {
        std::swap(at[k], at[k + 1]);
        letters.push_back(sigma(k));
      }
    }
  }
  return BraidWord(out.strands(), std::move(letters));
}

}  // namespace infbraid
