#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace infbraid {

using Rational = boost::multiprecision::cpp_rational;

/// Exact point re + im*i of the complex plane.
struct Point {
  Rational re;
  Rational im;

  Point() = default;
  Point(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  friend Point operator+(const Point& a, const Point& b) { return {a.re + b.re, a.im + b.im}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.re - b.re, a.im - b.im}; }
  friend Point operator*(const Rational& s, const Point& a) { return {s * a.re, s * a.im}; }
  friend bool operator==(const Point& a, const Point& b) { return a.re == b.re && a.im == b.im; }

  /// Strand order: ascending real part, ties by ascending imaginary part.
  friend bool operator<(const Point& a, const Point& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

inline Rational cross(const Point& a, const Point& b) { return a.re * b.im - a.im * b.re; }
inline Rational dot(const Point& a, const Point& b) { return a.re * b.re + a.im * b.im; }

/// True iff the closed segment [a, b] contains the origin.
inline bool segment_hits_origin(const Point& a, const Point& b) {
  if (a == Point{} || b == Point{}) return true;
  return cross(a, b) == 0 && dot(a, b) < 0;
}

struct Breakpoint {
  Rational t;
  Point pos;
};

/// One strand: a piecewise-linear path t -> position, t from 0 to 1.
class Strand {
 public:
  explicit Strand(std::vector<Breakpoint> path) : path_(std::move(path)) {
    if (path_.size() < 2) throw std::invalid_argument("a strand needs at least two breakpoints");
    if (path_.front().t != 0 || path_.back().t != 1) throw std::invalid_argument("strand times must run from 0 to 1");
    for (std::size_t k = 1; k < path_.size(); ++k) {
      if (!(path_[k - 1].t < path_[k].t)) throw std::invalid_argument("strand times must be strictly increasing");
    }
  }

  const std::vector<Breakpoint>& path() const noexcept { return path_; }
  const Point& start() const noexcept { return path_.front().pos; }
  const Point& end() const noexcept { return path_.back().pos; }

  Point at(const Rational& t) const {
    if (t < 0 || t > 1) throw std::out_of_range("time outside [0, 1]");
    auto it = std::lower_bound(path_.begin(), path_.end(), t,
                               [](const Breakpoint& b, const Rational& v) { return b.t < v; });
    if (it->t == t) return it->pos;
    const Breakpoint& hi = *it;
    const Breakpoint& lo = *(it - 1);
    Rational s = (t - lo.t) / (hi.t - lo.t);
    return lo.pos + s * (hi.pos - lo.pos);
  }

 private:
  std::vector<Breakpoint> path_;
};

/// A finite family of pairwise distinct-start PL strands in C x [0, 1]; each
/// strand is labelled by its start point. Disjointness is certified
/// separately, see find_collision().
class PLBraid {
 public:
  explicit PLBraid(std::vector<Strand> strands) : strands_(std::move(strands)) {
    if (strands_.empty()) throw std::invalid_argument("a PL braid needs at least one strand");
  }

  const std::vector<Strand>& strands() const noexcept { return strands_; }
  std::size_t size() const noexcept { return strands_.size(); }

  std::vector<Point> start_points() const {
    std::vector<Point> out;
    for (const Strand& s : strands_) out.push_back(s.start());
    return out;
  }
  std::vector<Point> end_points() const {
    std::vector<Point> out;
    for (const Strand& s : strands_) out.push_back(s.end());
    return out;
  }

  /// End point set equals start point set, so this is an X-braid.
  bool is_closed() const {
    auto a = start_points();
    auto b = end_points();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

 private:
  std::vector<Strand> strands_;
};

/// Merged breakpoint times of two strands.
inline std::vector<Rational> merged_times(const Strand& a, const Strand& b) {
  std::vector<Rational> times;
  for (const auto& p : a.path()) times.push_back(p.t);
  for (const auto& p : b.path()) times.push_back(p.t);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

struct Collision {
  std::size_t first;
  std::size_t second;
  Rational time;
};

/// Exact disjointness certificate: on every common linear piece the difference
/// of two strands is a segment in C, and the strands meet iff it contains 0.
inline std::optional<Collision> find_collision(const Strand& a, const Strand& b) {
  auto times = merged_times(a, b);
  Point prev = a.at(times[0]) - b.at(times[0]);
  if (prev == Point{}) return Collision{0, 1, times[0]};
  for (std::size_t k = 1; k < times.size(); ++k) {
    Point cur = a.at(times[k]) - b.at(times[k]);
    if (segment_hits_origin(prev, cur)) {
      Rational s = 1;
      if (cur == Point{}) s = 1;
      else if (prev.re != cur.re) s = prev.re / (prev.re - cur.re);
      else s = prev.im / (prev.im - cur.im);
      return Collision{0, 1, times[k - 1] + s * (times[k] - times[k - 1])};
    }
    prev = cur;
  }
  return std::nullopt;
}

inline std::optional<Collision> find_collision(const PLBraid& b) {
  const auto& s = b.strands();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (auto c = find_collision(s[i], s[j])) return Collision{i, j, c->time};
    }
  }
  return std::nullopt;
}

inline bool certify_disjoint(const PLBraid& b) { return !find_collision(b).has_value(); }

/// Reparametrizes to [0,1/2] then [1/2,1]; each strand of `first` continues
/// with the strand of `second` that starts where it ends.
inline PLBraid concatenate(const PLBraid& first, const PLBraid& second) {
  std::vector<Strand> out;
  const Rational half(1, 2);
  for (const Strand& a : first.strands()) {
    auto it = std::find_if(second.strands().begin(), second.strands().end(),
                           [&](const Strand& b) { return b.start() == a.end(); });
    if (it == second.strands().end()) throw std::invalid_argument("concatenation: end points do not match start points");
    std::vector<Breakpoint> path;
    for (const auto& p : a.path()) path.push_back({half * p.t, p.pos});
    for (std::size_t k = 1; k < it->path().size(); ++k) {
      const auto& p = it->path()[k];
      path.push_back({half + half * p.t, p.pos});
    }
    out.emplace_back(std::move(path));
  }
  return PLBraid(std::move(out));
}

/// Runs every strand backwards in time.
inline PLBraid reverse(const PLBraid& b) {
  std::vector<Strand> out;
  for (const Strand& s : b.strands()) {
    std::vector<Breakpoint> path;
    for (auto it = s.path().rbegin(); it != s.path().rend(); ++it) path.push_back({1 - it->t, it->pos});
    out.emplace_back(std::move(path));
  }
  return PLBraid(std::move(out));
}

}  // namespace infbraid
