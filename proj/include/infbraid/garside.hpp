#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "infbraid/braid_word.hpp"
#include "infbraid/permutation.hpp"

namespace infbraid {

/// Left normal form Delta^infimum * A_1 ... A_k. Each A_j is a permutation
/// braid (start index -> end position); no A_j is Delta or the identity and
/// every adjacent pair is left-weighted.
struct NormalForm {
  std::size_t strands = 1;
  long infimum = 0;
  std::vector<Permutation> factors;

  bool is_identity() const noexcept { return infimum == 0 && factors.empty(); }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

namespace garside {

inline Permutation delta(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = n - 1 - i;
  return Permutation(std::move(images));
}

/// Conjugation by Delta: s_i <-> s_{n-2-i}.
inline Permutation flip(const Permutation& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = n - 1 - a(n - 1 - i);
  return Permutation(std::move(images));
}

/// Right complement A^-1 Delta.
inline Permutation right_complement(const Permutation& a) {
  const std::size_t n = a.size();
  Permutation inv = a.inverse();
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = n - 1 - inv(i);
  return Permutation(std::move(images));
}

/// s_i is a left divisor of the permutation braid `a`: strands i and i+1 cross.
inline bool starts_with(const Permutation& a, std::size_t i) { return a(i) > a(i + 1); }

/// `a` has s_i as a right divisor: the strands ending at i and i+1 have crossed.
inline bool ends_with(const Permutation& a, std::size_t i) {
  Permutation inv = a.inverse();
  return inv(i) > inv(i + 1);
}

// Rewrites (a, b) into a left-weighted pair with the same product.
// Returns true if anything moved.
inline bool left_weight(Permutation& a, Permutation& b) {
  const std::size_t n = a.size();
  bool moved = false;
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (starts_with(b, i) && !ends_with(a, i)) {
        Permutation s = Permutation::transposition(n, i, i + 1);
        a = a.then(s);
        b = s.then(b);
        moved = again = true;
      }
    }
  }
  return moved;
}

}  // namespace garside

/// Left-greedy normal form. Two words are equivalent iff their normal forms
/// are equal.
inline NormalForm garside_normal_form(const BraidWord& f) {
  const std::size_t n = f.strands();
  NormalForm nf;
  nf.strands = n;
  if (n < 2) return nf;

  const Permutation delta = garside::delta(n);
  const Permutation id(n);

  // Every s_i^-1 is rewritten as (Delta s_i^-1) Delta^-1 and the Delta^-1 is
  // pushed to the front, flipping everything it passes.
  std::size_t negatives_after = 0;
  for (const Letter& l : f.letters()) negatives_after += l.sign < 0 ? 1u : 0u;
  nf.infimum = -static_cast<long>(negatives_after);

  std::vector<Permutation> factors;
  factors.reserve(f.length());
  for (const Letter& l : f.letters()) {
    Permutation s = Permutation::transposition(n, l.index, l.index + 1);
    Permutation factor = l.sign < 0 ? garside::right_complement(s) : s;
    // a positive letter is flipped by every later negative letter, a negative
    // one also by itself
    if (negatives_after % 2 == 1) factor = garside::flip(factor);
    if (l.sign < 0) --negatives_after;
    factors.push_back(std::move(factor));
  }

  // Sweep until every adjacent pair is left-weighted.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < factors.size(); ++j) {
      if (garside::left_weight(factors[j], factors[j + 1])) changed = true;
    }
  }

  std::size_t lead = 0;
  while (lead < factors.size() && factors[lead] == delta) ++lead;
  std::size_t tail = factors.size();
  while (tail > lead && factors[tail - 1] == id) --tail;
  nf.infimum += static_cast<long>(lead);
  for (std::size_t j = lead; j < tail; ++j) nf.factors.push_back(factors[j]);
  return nf;
}

inline std::string to_string(const NormalForm& nf) {
  std::ostringstream os;
  os << "inf=" << nf.infimum << " factors=";
  if (nf.factors.empty()) os << "-";
  for (std::size_t j = 0; j < nf.factors.size(); ++j) {
    if (j) os << ' ';
    os << '[';
    const auto& img = nf.factors[j].images();
    for (std::size_t i = 0; i < img.size(); ++i) os << (i ? "," : "") << img[i];
    os << ']';
  }
  return os.str();
}

}  // namespace infbraid
