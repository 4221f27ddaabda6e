#pragma once

#include <cstddef>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "infbraid/braid_word.hpp"
#include "infbraid/geometry.hpp"
#include "infbraid/pl_braid.hpp"

namespace infbraid {

enum class RenderFormat { ascii, svg };

inline RenderFormat parse_render_format(std::string_view name) {
  if (name == "ascii") return RenderFormat::ascii;
  if (name == "svg") return RenderFormat::svg;
  throw std::invalid_argument("unsupported render format '" + std::string(name) + "'");
}

namespace detail {

// Time runs down the page; strand p sits in column 4p. Each letter takes three
// rows and the middle character shows which strand is on top.
inline std::string render_ascii(const BraidWord& w) {
  const std::size_t n = w.strands();
  const std::size_t width = 4 * (n - 1) + 1;
  auto straight = [&] {
    std::string row(width, ' ');
    for (std::size_t p = 0; p < n; ++p) row[4 * p] = '|';
    return row;
  };
  auto trim = [](std::string s) {
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
  };
  std::ostringstream os;
  os << trim(straight()) << '\n';
  for (const Letter& l : w.letters()) {
    const std::size_t c = 4 * l.index;
    std::string top = straight(), mid = straight(), bottom = straight();
    for (std::string* row : {&top, &mid, &bottom}) {
      (*row)[c] = ' ';
      (*row)[c + 4] = ' ';
    }
    top[c + 1] = '\\';
    top[c + 3] = '/';
    mid[c + 2] = l.sign > 0 ? '\\' : '/';
    bottom[c + 1] = '/';
    bottom[c + 3] = '\\';
    os << trim(top) << '\n' << trim(mid) << '\n' << trim(bottom) << '\n' << trim(straight()) << '\n';
  }
  return os.str();
}

inline std::string fixed3(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << v;
  return os.str();
}

// 100 x (40 * strands) units; time runs left to right and strand p sits at
// height 20 + 40p. The under strand of a crossing is drawn with a gap.
inline std::string render_svg(const BraidWord& w) {
  const std::size_t n = w.strands();
  const std::size_t height = 40 * n;
  const double column = 100.0 / static_cast<double>(w.empty() ? 1 : w.length());
  auto y = [](std::size_t p) { return 20.0 + 40.0 * static_cast<double>(p); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"100\" height=\"" << height << "\" viewBox=\"0 0 100 "
     << height << "\">\n";
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  auto line = [&](double x0, double y0, double x1, double y1) {
    os << "<line x1=\"" << fixed3(x0) << "\" y1=\"" << fixed3(y0) << "\" x2=\"" << fixed3(x1) << "\" y2=\""
       << fixed3(y1) << "\"/>\n";
  };
  if (w.empty()) {
    for (std::size_t p = 0; p < n; ++p) line(0, y(p), 100, y(p));
  }
  for (std::size_t k = 0; k < w.length(); ++k) {
    const Letter& l = w.letters()[k];
    const double x0 = column * static_cast<double>(k);
    const double x1 = column * static_cast<double>(k + 1);
    for (std::size_t p = 0; p < n; ++p) {
      if (p != l.index && p != l.index + 1) line(x0, y(p), x1, y(p));
    }
    // positive: the strand leaving position i is on top
    const double over_from = l.sign > 0 ? y(l.index) : y(l.index + 1);
    const double over_to = l.sign > 0 ? y(l.index + 1) : y(l.index);
    line(x0, over_from, x1, over_to);
    const double under_from = over_to;
    const double under_to = over_from;
    auto lerp = [](double a, double b, double s) { return a + (b - a) * s; };
    line(x0, under_from, lerp(x0, x1, 0.4), lerp(under_from, under_to, 0.4));
    line(lerp(x0, x1, 0.6), lerp(under_from, under_to, 0.6), x1, under_to);
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace detail

inline std::string render(const BraidWord& w, RenderFormat format) {
  return format == RenderFormat::ascii ? detail::render_ascii(w) : detail::render_svg(w);
}

/// Draws the crossing sequence read off `b`, one evenly spaced column per crossing.
inline std::string render(const PLBraid& b, RenderFormat format) { return render(pl_to_word(b).word(), format); }

}  // namespace infbraid
