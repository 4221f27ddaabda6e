#pragma once

#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace infbraid {

/// A bijection of {0, ..., n-1}, stored as its image table.
///
/// For braids the convention is "start index -> end position": the image of
/// i is the position at which the strand starting at position i ends.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::size_t n) : images_(n) {
    std::iota(images_.begin(), images_.end(), std::size_t{0});
  }

  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t v : images_) {
      if (v >= images_.size() || seen[v]) {
        throw std::invalid_argument("permutation image table is not a bijection");
      }
      seen[v] = true;
    }
  }

  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b) {
    Permutation p(n);
    std::swap(p.images_.at(a), p.images_.at(b));
    return p;
  }

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  Permutation inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
  }

  /// Apply *this first, then `next`: (this.then(next))(i) = next(this(i)).
  Permutation then(const Permutation& next) const {
    if (next.size() != size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<std::size_t> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = next.images_[images_[i]];
    return Permutation(std::move(out));
  }

  /// Disjoint-cycle notation with fixed points omitted, e.g. "(0 2 1)";
  /// the identity prints as "()".
  std::string cycle_string() const {
    std::ostringstream os;
    std::vector<bool> done(images_.size(), false);
    bool any = false;
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (done[start] || images_[start] == start) continue;
      any = true;
      os << '(';
      std::size_t cur = start;
      bool first = true;
      while (!done[cur]) {
        done[cur] = true;
        if (!first) os << ' ';
        os << cur;
        first = false;
        cur = images_[cur];
      }
      os << ')';
    }
    return any ? os.str() : "()";
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

}  // namespace infbraid
