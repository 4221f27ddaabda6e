#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "infbraid/braid_word.hpp"
#include "infbraid/equivalence.hpp"

namespace infbraid {

/// A braid on m strands starting at {0..m-1} whose endpoints are a set E of m
/// naturals. Endpoints are kept sorted; the strand starting at i reaches
/// E[perm(i)] where perm is the word's underlying permutation.
class GeneralizedBraid {
 public:
  explicit GeneralizedBraid(BraidWord word) : word_(std::move(word)) {
    endpoints_.resize(word_.strands());
    for (std::size_t k = 0; k < endpoints_.size(); ++k) endpoints_[k] = k;
  }

  GeneralizedBraid(BraidWord word, std::vector<std::size_t> endpoints)
      : word_(std::move(word)), endpoints_(std::move(endpoints)) {
    if (endpoints_.size() != word_.strands()) {
      throw std::invalid_argument("endpoint set has " + std::to_string(endpoints_.size()) +
                                  " elements for " + std::to_string(word_.strands()) + " strands");
    }
    for (std::size_t k = 1; k < endpoints_.size(); ++k) {
      if (endpoints_[k - 1] >= endpoints_[k]) {
        throw std::invalid_argument("endpoint set must be strictly increasing");
      }
    }
  }

  const BraidWord& word() const noexcept { return word_; }
  const std::vector<std::size_t>& endpoints() const noexcept { return endpoints_; }
  std::size_t strands() const noexcept { return word_.strands(); }

  /// tau: start index -> endpoint in E.
  std::vector<std::size_t> matching() const {
    Permutation perm = underlying_permutation(word_);
    std::vector<std::size_t> tau(strands());
    for (std::size_t i = 0; i < tau.size(); ++i) tau[i] = endpoints_[perm(i)];
    return tau;
  }

  bool has_standard_endpoints() const noexcept {
    for (std::size_t k = 0; k < endpoints_.size(); ++k) {
      if (endpoints_[k] != k) return false;
    }
    return true;
  }

  /// Endpoint matching is the identity: E = {0..m-1} and the word is pure.
  bool is_pure() const { return has_standard_endpoints() && infbraid::is_pure(word_); }

  friend bool operator==(const GeneralizedBraid&, const GeneralizedBraid&) = default;

 private:
  BraidWord word_;
  std::vector<std::size_t> endpoints_;
};

/// Same endpoint set and equivalent words.
inline bool equivalent(const GeneralizedBraid& f, const GeneralizedBraid& g) {
  return f.endpoints() == g.endpoints() && f.strands() == g.strands() &&
         equivalent(f.word(), g.word());
}

/// Removes the strand that starts at `start_index`: every letter in which it
/// takes part is dropped and the positions above it shift down by one.
inline GeneralizedBraid delete_strand(const GeneralizedBraid& f, std::size_t start_index) {
  const std::size_t m = f.strands();
  if (start_index >= m) {
    throw std::out_of_range("strand " + std::to_string(start_index) + " does not exist on " +
                            std::to_string(m) + " strands");
  }
  if (m == 1) throw std::invalid_argument("cannot delete the only strand");
  const std::size_t endpoint = f.matching()[start_index];

  std::size_t pos = start_index;
  std::vector<Letter> letters;
  for (const Letter& l : f.word().letters()) {
    if (l.index == pos) {
      pos = l.index + 1;
    } else if (l.index + 1 == pos) {
      pos = l.index;
    } else if (l.index > pos) {
      letters.push_back({l.index - 1, l.sign});
    } else {
      letters.push_back(l);
    }
  }
  std::vector<std::size_t> endpoints;
  for (std::size_t e : f.endpoints()) {
    if (e != endpoint) endpoints.push_back(e);
  }
  return GeneralizedBraid(BraidWord(m - 1, std::move(letters)), std::move(endpoints));
}

inline GeneralizedBraid delete_strand(const BraidWord& f, std::size_t start_index) {
  return delete_strand(GeneralizedBraid(f), start_index);
}

/// Replaces E by its image under a strictly increasing map; the word is untouched.
inline GeneralizedBraid relabel(const GeneralizedBraid& f,
                                const std::function<std::size_t(std::size_t)>& shift) {
  std::vector<std::size_t> image;
  image.reserve(f.endpoints().size());
  for (std::size_t e : f.endpoints()) {
    std::size_t v = shift(e);
    if (!image.empty() && v <= image.back()) throw std::invalid_argument("non-monotone shift");
    image.push_back(v);
  }
  return GeneralizedBraid(f.word(), std::move(image));
}

inline std::string join_naturals(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(values[k]);
  }
  return out;
}

inline std::vector<std::size_t> parse_naturals(std::string_view text) {
  std::vector<std::size_t> out;
  detail::Cursor cur{text};
  cur.skip_ws();
  if (cur.at_end()) return out;
  while (true) {
    cur.skip_ws();
    out.push_back(cur.nat());
    cur.skip_ws();
    if (cur.at_end()) break;
    cur.expect(',', "','");
  }
  return out;
}

/// "<E comma list> | <word>", e.g. "0,2 | B2: s0".
inline std::string to_string(const GeneralizedBraid& f) {
  return join_naturals(f.endpoints()) + " | " + to_string(f.word());
}

inline GeneralizedBraid parse_generalized(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("expected '|'", text.size());
  std::vector<std::size_t> endpoints = parse_naturals(text.substr(0, bar));
  BraidWord word = [&] {
    try {
      return parse_word(text.substr(bar + 1));
    } catch (const ParseError& e) {
      throw ParseError("malformed word", bar + 1 + e.position());
    }
  }();
  return GeneralizedBraid(std::move(word), std::move(endpoints));
}

}  // namespace infbraid
