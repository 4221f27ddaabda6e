#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "infbraid/braid_word.hpp"

namespace infbraid {

/// delta_generator^exponent with exponent = +1 or -1.
struct FreeLetter {
  std::size_t generator = 0;
  int exponent = 1;

  FreeLetter inverse() const noexcept { return {generator, -exponent}; }
  friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
  friend auto operator<=>(const FreeLetter&, const FreeLetter&) = default;
};

/// Reduced word in the free group on delta_0, delta_1, ...; the empty word is
/// the identity.
class FreeWord {
 public:
  FreeWord() = default;

  /// Freely reduces `letters` with a single stack pass.
  explicit FreeWord(const std::vector<FreeLetter>& letters) {
    for (const FreeLetter& l : letters) push(l);
  }

  static FreeWord generator(std::size_t i, int exponent = 1) { return FreeWord({FreeLetter{i, exponent}}); }

  const std::vector<FreeLetter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push(FreeLetter l) {
    if (l.exponent != 1 && l.exponent != -1) throw std::invalid_argument("free letter exponent must be +1 or -1");
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  FreeWord& operator*=(const FreeWord& rhs) {
    for (const FreeLetter& l : rhs.letters_) push(l);
    return *this;
  }

  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) { return lhs *= rhs; }

  FreeWord inverse() const {
    FreeWord out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
    return out;
  }

  std::set<std::size_t> support() const {
    std::set<std::size_t> s;
    for (const FreeLetter& l : letters_) s.insert(l.generator);
    return s;
  }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<FreeLetter> letters_;
};

inline FreeWord free_reduce(const std::vector<FreeLetter>& letters) { return FreeWord(letters); }

/// Product delta_{i_0} delta_{i_1} ... over the given indices, in order.
inline FreeWord ordered_product(const std::vector<std::size_t>& indices) {
  FreeWord w;
  for (std::size_t i : indices) w.push({i, 1});
  return w;
}

/// The projection onto the free factor on `keep`: letters outside it are
/// deleted, then the word is reduced again.
template <typename Set>
FreeWord project(const FreeWord& w, const Set& keep) {
  FreeWord out;
  for (const FreeLetter& l : w.letters()) {
    if (std::find(std::begin(keep), std::end(keep), l.generator) != std::end(keep)) out.push(l);
  }
  return out;
}

/// Letters "d<k>" / "d<k>^-1" separated by single spaces; the identity is "".
inline std::string to_string(const FreeWord& w) {
  std::string out;
  for (const FreeLetter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += "d" + std::to_string(l.generator);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

inline FreeWord parse_free_word(std::string_view text) {
  detail::Cursor cur{text};
  std::vector<FreeLetter> letters;
  bool separated = true;
  while (true) {
    bool ws = cur.skip_ws();
    if (cur.at_end()) break;
    separated = separated || ws;
    if (!separated) throw ParseError("letters must be separated by whitespace", cur.pos);
    cur.expect('d', "'d'");
    std::size_t g = cur.nat();
    int e = cur.consume("^-1") ? -1 : 1;
    letters.push_back({g, e});
    separated = false;
  }
  return FreeWord(letters);
}

/// A homomorphism out of a free group, given by generator images.
class FreeMorphism {
 public:
  FreeMorphism() = default;
  explicit FreeMorphism(std::map<std::size_t, FreeWord> images) : images_(std::move(images)) {}

  void set(std::size_t generator, FreeWord image) { images_[generator] = std::move(image); }
  const std::map<std::size_t, FreeWord>& images() const noexcept { return images_; }

  const FreeWord& image(std::size_t generator) const {
    auto it = images_.find(generator);
    if (it == images_.end()) {
      throw std::out_of_range("generator d" + std::to_string(generator) + " is outside the domain");
    }
    return it->second;
  }

  FreeWord operator()(const FreeWord& w) const {
    FreeWord out;
    for (const FreeLetter& l : w.letters()) out *= l.exponent > 0 ? image(l.generator) : image(l.generator).inverse();
    return out;
  }

  friend bool operator==(const FreeMorphism&, const FreeMorphism&) = default;

 private:
  std::map<std::size_t, FreeWord> images_;
};

}  // namespace infbraid
