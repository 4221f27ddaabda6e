#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "infbraid/braid_word.hpp"
#include "infbraid/pl_braid.hpp"

namespace infbraid {

/// Rationals are always written "p/q", q > 0.
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

/// "<re>+<im>i", e.g. "1/2+-1/2i".
inline std::string to_string(const Point& p) { return to_string(p.re) + "+" + to_string(p.im) + "i"; }

/// PL files:
///
///   PL strands=<m>
///   x=<point> : (t,pos);(t,pos);...
inline std::string to_pl_text(const PLBraid& b) {
  std::ostringstream os;
  os << "PL strands=" << b.size() << '\n';
  for (const Strand& s : b.strands()) {
    os << "x=" << to_string(s.start()) << " :";
    for (std::size_t k = 0; k < s.path().size(); ++k) {
      os << (k ? ";" : " ") << '(' << to_string(s.path()[k].t) << ',' << to_string(s.path()[k].pos) << ')';
    }
    os << '\n';
  }
  return os.str();
}

namespace detail {

inline Rational parse_rational(Cursor& cur) {
  const std::size_t at = cur.pos;
  bool negative = false;
  if (cur.peek() == '-') {
    negative = true;
    ++cur.pos;
  }
  const std::size_t digits_at = cur.pos;
  while (std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
  if (cur.pos == digits_at) throw ParseError("expected a rational", at);
  boost::multiprecision::cpp_int num(std::string(cur.text.substr(digits_at, cur.pos - digits_at)));
  boost::multiprecision::cpp_int den = 1;
  if (cur.peek() == '/') {
    ++cur.pos;
    const std::size_t den_at = cur.pos;
    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
    if (cur.pos == den_at) throw ParseError("expected a denominator", den_at);
    den = boost::multiprecision::cpp_int(std::string(cur.text.substr(den_at, cur.pos - den_at)));
    if (den == 0) throw ParseError("zero denominator", den_at);
  }
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

inline Point parse_point(Cursor& cur) {
  Rational re = parse_rational(cur);
  cur.expect('+', "'+'");
  Rational im = parse_rational(cur);
  cur.expect('i', "'i'");
  return Point(std::move(re), std::move(im));
}

}  // namespace detail

inline PLBraid parse_pl(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) lines.push_back(line);
  }
  if (lines.empty() || lines[0].rfind("PL strands=", 0) != 0) throw ParseError("expected 'PL strands=' header", 0);
  detail::Cursor head{lines[0]};
  head.pos = std::string_view("PL strands=").size();
  const std::size_t m = head.nat();
  if (lines.size() != m + 1) throw std::invalid_argument("PL strands=" + std::to_string(m) + " needs " + std::to_string(m) + " strand lines");

  std::vector<Strand> strands;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    detail::Cursor cur{lines[k]};
    if (!cur.consume("x=")) throw ParseError("expected 'x='", 0);
    Point label = detail::parse_point(cur);
    cur.skip_ws();
    cur.expect(':', "':'");
    cur.skip_ws();
    std::vector<Breakpoint> path;
    while (true) {
      cur.expect('(', "'('");
      Rational t = detail::parse_rational(cur);
      cur.expect(',', "','");
      Point pos = detail::parse_point(cur);
      cur.expect(')', "')'");
      path.push_back({std::move(t), std::move(pos)});
      cur.skip_ws();
      if (cur.at_end()) break;
      cur.expect(';', "';'");
      cur.skip_ws();
    }
    Strand s(std::move(path));
    if (!(s.start() == label)) throw std::invalid_argument("strand labelled " + to_string(label) + " does not start there");
    strands.push_back(std::move(s));
  }
  return PLBraid(std::move(strands));
}

}  // namespace infbraid
