#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "infbraid/braid_word.hpp"

namespace infbraid {

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::size_t budget)
      : std::runtime_error("handle reduction exceeded its budget of " + std::to_string(budget) +
                           " steps") {}
};

inline constexpr std::size_t kDefaultHandleBudget = 1'000'000;

namespace detail {

struct Handle {
  std::size_t first;
  std::size_t last;
};

// The handle whose right end is leftmost. Such a handle is always permitted:
// its interior cannot contain another handle.
inline std::optional<Handle> leftmost_handle(const std::vector<Letter>& w) {
  for (std::size_t q = 1; q < w.size(); ++q) {
    const std::size_t i = w[q].index;
    for (std::size_t p = q; p-- > 0;) {
      const std::size_t j = w[p].index;
      if (j == i) {
        if (w[p].sign == -w[q].sign) return Handle{p, q};
        break;
      }
      if (i > 0 && j == i - 1) break;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Dehornoy handle reduction.
///
/// A sigma_i-handle is a subword s_i^e v s_i^-e where v contains neither s_i
/// nor s_{i-1}. Reducing it deletes the two ends and rewrites every
/// s_{i+1}^d in v as s_{i+1}^-e s_i^d s_{i+1}^e. The result has no handle and
/// is empty exactly when the input represents the identity braid.
inline BraidWord handle_reduce(const BraidWord& f, std::size_t budget = kDefaultHandleBudget) {
  std::vector<Letter> w = f.letters();
  std::size_t steps = 0;
  while (auto h = detail::leftmost_handle(w)) {
    if (++steps > budget) throw BudgetExceeded(budget);
    const std::size_t i = w[h->first].index;
    const int e = w[h->first].sign;
    std::vector<Letter> out;
    out.reserve(w.size() + 2 * (h->last - h->first));
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(h->first));
    for (std::size_t k = h->first + 1; k < h->last; ++k) {
      if (w[k].index == i + 1) {
        out.push_back({i + 1, -e});
        out.push_back({i, w[k].sign});
        out.push_back({i + 1, e});
      } else {
        out.push_back(w[k]);
      }
    }
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(h->last) + 1, w.end());
    w = std::move(out);
  }
  return BraidWord(f.strands(), std::move(w));
}

}  // namespace infbraid
