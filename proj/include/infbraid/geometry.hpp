#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "infbraid/braid_word.hpp"
#include "infbraid/generalized_braid.hpp"
#include "infbraid/pl_braid.hpp"

namespace infbraid {

class NonGenericConfiguration : public std::invalid_argument {
 public:
  NonGenericConfiguration(const std::string& what, Rational time)
      : std::invalid_argument(what), time_(std::move(time)) {}
  const Rational& time() const noexcept { return time_; }

 private:
  Rational time_;
};

namespace detail {

inline void require_distinct(std::span<const Point> pts, const char* what) {
  std::vector<Point> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument(std::string(what) + " points must be pairwise distinct");
  }
}

inline Strand dogleg(const Point& from, const Point& mid, const Point& to) {
  if (mid == from && mid == to) return Strand({{0, from}, {1, to}});
  return Strand({{0, from}, {Rational(1, 2), mid}, {1, to}});
}

// Integer offsets by ring max(|a|,|b|) = r, each ring in (a, b) order.
inline std::vector<Point> ring(long r) {
  std::vector<Point> out;
  for (long a = -r; a <= r; ++a) {
    for (long b = -r; b <= r; ++b) {
      if (std::max(std::labs(a), std::labs(b)) == r) out.emplace_back(Rational(a), Rational(b));
    }
  }
  return out;
}

}  // namespace detail

/// Connects start[k] to end[k] by the two-segment dogleg through a midpoint
/// at time 1/2. Midpoints are chosen greedily: the straight-line midpoint
/// first, then integer-grid offsets from it in growing rings, keeping the
/// first one disjoint from every strand placed so far.
inline PLBraid dogleg_connect(std::span<const Point> start, std::span<const Point> end) {
  if (start.size() != end.size() || start.empty()) {
    throw std::invalid_argument("dogleg_connect needs equally many (and at least one) start and end points");
  }
  detail::require_distinct(start, "start");
  detail::require_distinct(end, "end");

  std::vector<Strand> placed;
  for (std::size_t k = 0; k < start.size(); ++k) {
    const Point center = Rational(1, 2) * (start[k] + end[k]);
    bool done = false;
    for (long r = 0; !done; ++r) {
      for (const Point& offset : detail::ring(r)) {
        Strand candidate = detail::dogleg(start[k], center + offset, end[k]);
        bool clear = std::none_of(placed.begin(), placed.end(),
                                  [&](const Strand& s) { return find_collision(candidate, s).has_value(); });
        if (clear) {
          placed.push_back(std::move(candidate));
          done = true;
          break;
        }
      }
    }
  }
  return PLBraid(std::move(placed));
}

/// Strands start at 0, 1, ..., n-1 on the real axis; letter k occupies the time
/// slice [k/L, (k+1)/L]. At mid-slice of s_i the strand leaving position i is
/// at real part i+1/2, imaginary part -1/2, and its partner at imaginary part
/// +1/2; s_i^-1 swaps the two heights.
inline PLBraid word_to_pl(const BraidWord& f) {
  const std::size_t n = f.strands();
  const std::size_t length = f.length();
  std::vector<std::vector<Breakpoint>> paths(n);
  std::vector<std::size_t> at(n);  // at[p]: strand at position p
  std::iota(at.begin(), at.end(), std::size_t{0});
  for (std::size_t s = 0; s < n; ++s) paths[s].push_back({0, Point(Rational(static_cast<long>(s)))});

  const Rational half(1, 2);
  for (std::size_t k = 0; k < length; ++k) {
    const Letter& l = f.letters()[k];
    const Rational t_mid(static_cast<long>(2 * k + 1), static_cast<long>(2 * length));
    const Rational t_end(static_cast<long>(k + 1), static_cast<long>(length));
    const Rational centre = Rational(static_cast<long>(l.index)) + half;
    const Rational bump = l.sign > 0 ? -half : half;  // imaginary offset of the left strand
    const std::size_t left = at[l.index];
    const std::size_t right = at[l.index + 1];
    paths[left].push_back({t_mid, Point(centre, bump)});
    paths[right].push_back({t_mid, Point(centre, -bump)});
    std::swap(at[l.index], at[l.index + 1]);
    for (std::size_t p = 0; p < n; ++p) paths[at[p]].push_back({t_end, Point(Rational(static_cast<long>(p)))});
  }
  if (length == 0) {
    for (std::size_t s = 0; s < n; ++s) paths[s].push_back({1, Point(Rational(static_cast<long>(s)))});
  }
  std::vector<Strand> strands;
  for (auto& p : paths) strands.emplace_back(std::move(p));
  return PLBraid(std::move(strands));
}

/// A swap of the strands at positions (position, position+1). Events at one
/// instant share `time` and are ordered by `order`.
struct CrossingEvent {
  Rational time;
  std::size_t order = 0;
  std::size_t position = 0;
  int sign = 1;
};

namespace detail {

inline std::vector<std::size_t> order_at(const PLBraid& b, const Rational& t) {
  std::vector<Point> pos;
  for (const Strand& s : b.strands()) pos.push_back(s.at(t));
  std::vector<std::size_t> idx(b.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return pos[x] < pos[y]; });
  return idx;
}

// Bubble-sorts `from` into `to`. Every swapped pair shares its real part at
// `instant`, and strands that are close to one real line at distinct heights
// braid in a way fixed by their heights alone: the lower one passes over.
inline void transition(const PLBraid& b, std::vector<std::size_t> from, const std::vector<std::size_t>& to,
                       const Rational& instant, std::vector<CrossingEvent>& events) {
  std::vector<std::size_t> rank(from.size());
  for (std::size_t k = 0; k < to.size(); ++k) rank[to[k]] = k;
  std::size_t order = 0;
  for (auto it = events.rbegin(); it != events.rend() && it->time == instant; ++it) ++order;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < from.size(); ++k) {
      if (rank[from[k]] < rank[from[k + 1]]) continue;
      const Point left = b.strands()[from[k]].at(instant);
      const Point right = b.strands()[from[k + 1]].at(instant);
      if (left.re != right.re || left.im == right.im) {
        throw NonGenericConfiguration("strands cannot be ordered at a crossing", instant);
      }
      events.push_back({instant, order++, k, left.im < right.im ? 1 : -1});
      std::swap(from[k], from[k + 1]);
      swapped = true;
    }
  }
}

}  // namespace detail

/// Sweeps time and records every change in the (real part, imaginary part)
/// order of the strands. Critical instants are the breakpoints and the zeros
/// of pairwise real-part differences; the order is constant between them.
inline std::vector<CrossingEvent> crossing_events(const PLBraid& b) {
  if (auto c = find_collision(b)) {
    throw NonGenericConfiguration("strands " + std::to_string(c->first) + " and " + std::to_string(c->second) +
                                      " collide",
                                  c->time);
  }
  std::vector<Rational> critical;
  const auto& s = b.strands();
  for (const Strand& strand : s) {
    for (const auto& p : strand.path()) critical.push_back(p.t);
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      auto times = merged_times(s[i], s[j]);
      for (std::size_t k = 1; k < times.size(); ++k) {
        Rational d0 = s[i].at(times[k - 1]).re - s[j].at(times[k - 1]).re;
        Rational d1 = s[i].at(times[k]).re - s[j].at(times[k]).re;
        if ((d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0)) {
          critical.push_back(times[k - 1] + (d0 / (d0 - d1)) * (times[k] - times[k - 1]));
        }
      }
    }
  }
  std::sort(critical.begin(), critical.end());
  critical.erase(std::unique(critical.begin(), critical.end()), critical.end());

  std::vector<CrossingEvent> events;
  std::vector<std::size_t> current = detail::order_at(b, critical.front());
  for (std::size_t k = 1; k < critical.size(); ++k) {
    const Rational mid = (critical[k - 1] + critical[k]) / 2;
    std::vector<std::size_t> open = detail::order_at(b, mid);
    detail::transition(b, current, open, critical[k - 1], events);
    std::vector<std::size_t> next = detail::order_at(b, critical[k]);
    detail::transition(b, open, next, critical[k], events);
    current = std::move(next);
  }
  return events;
}

/// Reads a braid word off a PL braid. Start points are ranked by strand order
/// to give positions 0..m-1; the endpoint labelling is the rank order at t = 1.
inline GeneralizedBraid pl_to_word(const PLBraid& b) {
  std::vector<Letter> letters;
  for (const CrossingEvent& e : crossing_events(b)) letters.push_back({e.position, e.sign});
  return GeneralizedBraid(BraidWord(b.size(), std::move(letters)));
}

/// Start rank -> end rank, read directly from the strand endpoints.
inline Permutation endpoint_permutation(const PLBraid& b) {
  const auto starts = detail::order_at(b, 0);
  const auto ends = detail::order_at(b, 1);
  std::vector<std::size_t> start_rank(b.size()), end_rank(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    start_rank[starts[k]] = k;
    end_rank[ends[k]] = k;
  }
  std::vector<std::size_t> images(b.size());
  for (std::size_t s = 0; s < b.size(); ++s) images[start_rank[s]] = end_rank[s];
  return Permutation(std::move(images));
}

/// Transports a braid on X to one on Y along a bijection phi: X -> Y given by
/// image[k] = phi(start of strand k). With h the dogleg path taking each y to
/// phi^-1(y), the result is h, then f, then h backwards, relabelled so every
/// strand returns to Y.
inline PLBraid relabel_isomorphism(const PLBraid& f, std::span<const Point> image) {
  if (image.size() != f.size()) throw std::invalid_argument("relabel_isomorphism: cardinality mismatch");
  if (!f.is_closed()) throw std::invalid_argument("relabel_isomorphism needs a braid whose end set is its start set");
  detail::require_distinct(image, "image");
  const std::vector<Point> xs = f.start_points();
  PLBraid h = dogleg_connect(image, xs);
  return concatenate(concatenate(h, f), reverse(h));
}

}  // namespace infbraid
