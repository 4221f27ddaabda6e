#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "infbraid/braid_word.hpp"
#include "infbraid/free_word.hpp"

namespace infbraid {

/// Substitution for one letter. s_i sends d_i -> d_i d_{i+1} d_i^-1 and
/// d_{i+1} -> d_i; s_i^-1 sends d_i -> d_{i+1} and d_{i+1} -> d_{i+1}^-1 d_i d_{i+1}.
/// Both fix d_0 d_1 ... d_{n-1}.
inline FreeWord substitute(const Letter& s, const FreeWord& w) {
  const std::size_t i = s.index;
  FreeWord out;
  for (const FreeLetter& l : w.letters()) {
    std::vector<FreeLetter> image;
    if (l.generator == i) {
      if (s.sign > 0) image = {{i, 1}, {i + 1, 1}, {i, -1}};
      else image = {{i + 1, 1}};
    } else if (l.generator == i + 1) {
      if (s.sign > 0) image = {{i, 1}};
      else image = {{i + 1, -1}, {i, 1}, {i + 1, 1}};
    } else {
      out.push(l);
      continue;
    }
    if (l.exponent > 0) {
      for (const FreeLetter& x : image) out.push(x);
    } else {
      for (auto it = image.rbegin(); it != image.rend(); ++it) out.push(it->inverse());
    }
  }
  return out;
}

/// Artin action of a braid word, letters applied left to right: the action of
/// compose(f, g) is the action of f followed by that of g.
inline FreeWord artin_action(const BraidWord& f, const FreeWord& w) {
  for (const FreeLetter& l : w.letters()) {
    if (l.generator >= f.strands()) {
      throw std::out_of_range("generator d" + std::to_string(l.generator) + " is out of range for " +
                              std::to_string(f.strands()) + " strands");
    }
  }
  FreeWord out = w;
  for (const Letter& s : f.letters()) out = substitute(s, out);
  return out;
}

/// Images of d_0 ... d_{n-1} under the action of f.
inline std::vector<FreeWord> artin_images(const BraidWord& f) {
  std::vector<FreeWord> images;
  images.reserve(f.strands());
  for (std::size_t i = 0; i < f.strands(); ++i) images.push_back(FreeWord::generator(i));
  for (const Letter& s : f.letters()) {
    for (FreeWord& img : images) img = substitute(s, img);
  }
  return images;
}

}  // namespace infbraid
