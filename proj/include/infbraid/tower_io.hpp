#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "infbraid/omega_tower.hpp"

namespace infbraid {

namespace detail {

inline std::vector<std::string> nonblank_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

inline std::string header_field(const std::string& header, const std::string& key) {
  const std::string needle = " " + key + "=";
  auto at = header.find(needle);
  if (at == std::string::npos) throw ParseError("missing field '" + key + "'", header.size());
  auto begin = at + needle.size();
  auto end = header.find(' ', begin);
  return header.substr(begin, end == std::string::npos ? std::string::npos : end - begin);
}

inline std::size_t parse_count(const std::string& text, const char* what) {
  detail::Cursor cur{text};
  std::size_t v = cur.nat();
  if (!cur.at_end()) throw ParseError(std::string("malformed ") + what, cur.pos);
  return v;
}

}  // namespace detail

/// Tower files:
///
///   TOWER kind=<explicit|finsupp|rule:NAME> horizon=N
///   explicit: one line per level, "m | E | word"
///   finsupp:  one line holding the finite braid word
///   rule:     no body; NAME is "winding" or "identity"
inline OmegaBraidTower parse_tower(std::string_view text) {
  auto lines = detail::nonblank_lines(text);
  if (lines.empty() || lines[0].rfind("TOWER ", 0) != 0) throw ParseError("expected 'TOWER' header", 0);
  const std::string kind = detail::header_field(lines[0], "kind");
  const std::size_t horizon = detail::parse_count(detail::header_field(lines[0], "horizon"), "horizon");
  if (horizon == 0) throw std::invalid_argument("horizon must be at least 1");

  if (kind == "finsupp") {
    if (lines.size() != 2) throw std::invalid_argument("finsupp tower needs exactly one word line");
    return finitely_supported(parse_word(lines[1]), horizon);
  }
  if (kind == "rule:winding" || kind == "rule:identity") {
    if (lines.size() != 1) throw std::invalid_argument("rule towers have no body");
    return kind == "rule:winding" ? winding_tower(horizon) : identity_tower(horizon);
  }
  if (kind != "explicit") throw std::invalid_argument("unknown tower kind '" + kind + "'");

  std::vector<GeneralizedBraid> levels;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const std::string& line = lines[k];
    auto bar = line.find('|');
    if (bar == std::string::npos) throw ParseError("expected 'm | E | word' on line " + std::to_string(k + 1), 0);
    std::string m_text = line.substr(0, bar);
    m_text.erase(0, m_text.find_first_not_of(" \t"));
    m_text.erase(m_text.find_last_not_of(" \t") + 1);
    const std::size_t m = detail::parse_count(m_text, "level number");
    if (m != levels.size() + 1) {
      throw std::invalid_argument("explicit levels must be listed as 1, 2, 3, ...; got " + std::to_string(m));
    }
    levels.push_back(parse_generalized(line.substr(bar + 1)));
  }
  if (levels.size() < horizon) {
    throw std::invalid_argument("explicit tower lists " + std::to_string(levels.size()) +
                                " levels but declares horizon " + std::to_string(horizon));
  }
  return OmegaBraidTower::from_levels(std::move(levels)).with_horizon(horizon);
}

/// Writes `t` in the tower file format. Finitely supported and built-in rule
/// towers keep their kind; everything else is materialized up to its horizon.
inline std::string to_tower_text(const OmegaBraidTower& t) {
  std::ostringstream os;
  const std::string horizon = " horizon=" + std::to_string(t.horizon());
  if (t.kind() == TowerKind::finitely_supported) {
    os << "TOWER kind=finsupp" << horizon << '\n' << to_string(*t.generator()) << '\n';
    return os.str();
  }
  if (t.kind() == TowerKind::rule && (t.name() == "winding" || t.name() == "identity")) {
    os << "TOWER kind=rule:" << t.name() << horizon << '\n';
    return os.str();
  }
  os << "TOWER kind=explicit" << horizon << '\n';
  for (std::size_t m = 1; m <= t.horizon(); ++m) os << m << " | " << to_string(t.level(m)) << '\n';
  return os.str();
}

}  // namespace infbraid
