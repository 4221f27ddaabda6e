#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "infbraid/artin_action.hpp"
#include "infbraid/braid_word.hpp"
#include "infbraid/free_word.hpp"
#include "infbraid/generalized_braid.hpp"
#include "infbraid/omega_tower.hpp"

namespace infbraid {

/// U^-1 d_target U with U as short as possible.
struct ConjugateForm {
  std::size_t target = 0;
  FreeWord conjugator;
};

/// Reads off U and j when the reduced word `w` is exactly U^-1 d_j U.
/// The shortest conjugator is unique, so no tie-breaking is needed.
inline std::optional<ConjugateForm> conjugate_of_generator(const FreeWord& w) {
  const auto& l = w.letters();
  if (l.size() % 2 == 0) return std::nullopt;
  const std::size_t mid = l.size() / 2;
  if (l[mid].exponent != 1) return std::nullopt;
  for (std::size_t k = 0; k < mid; ++k) {
    if (l[k] != l[l.size() - 1 - k].inverse()) return std::nullopt;
  }
  return ConjugateForm{l[mid].generator, FreeWord(std::vector<FreeLetter>(l.begin() + static_cast<std::ptrdiff_t>(mid) + 1, l.end()))};
}

/// A truncated map h from the free group on d_0..d_{m-1} to the free group on
/// {d_e : e in E}, stored by generator images. When h has the (dagger) shape,
/// each image is U_i^-1 d_sigma(i) U_i and `sigma()` / `conjugators()` return
/// that data.
class DaggerAutomorphism {
 public:
  DaggerAutomorphism(std::vector<std::size_t> endpoints, std::vector<FreeWord> images)
      : endpoints_(std::move(endpoints)), images_(std::move(images)) {
    if (endpoints_.size() != images_.size()) {
      throw std::invalid_argument("a dagger map on m generators needs |E| = m");
    }
    for (std::size_t k = 1; k < endpoints_.size(); ++k) {
      if (endpoints_[k - 1] >= endpoints_[k]) throw std::invalid_argument("E must be strictly increasing");
    }
  }

  static DaggerAutomorphism from_conjugators(std::vector<std::size_t> endpoints,
                                             const std::vector<std::size_t>& sigma,
                                             const std::vector<FreeWord>& conjugators) {
    if (sigma.size() != conjugators.size()) throw std::invalid_argument("sigma and conjugators differ in size");
    std::vector<FreeWord> images;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      images.push_back(conjugators[i].inverse() * FreeWord::generator(sigma[i]) * conjugators[i]);
    }
    return DaggerAutomorphism(std::move(endpoints), std::move(images));
  }

  static DaggerAutomorphism identity(std::size_t m) {
    std::vector<std::size_t> e(m);
    std::vector<FreeWord> images;
    for (std::size_t i = 0; i < m; ++i) {
      e[i] = i;
      images.push_back(FreeWord::generator(i));
    }
    return DaggerAutomorphism(std::move(e), std::move(images));
  }

  std::size_t domain_size() const noexcept { return images_.size(); }
  const std::vector<std::size_t>& endpoints() const noexcept { return endpoints_; }
  const std::vector<FreeWord>& images() const noexcept { return images_; }
  const FreeWord& image(std::size_t i) const { return images_.at(i); }

  FreeMorphism as_morphism() const {
    FreeMorphism h;
    for (std::size_t i = 0; i < images_.size(); ++i) h.set(i, images_[i]);
    return h;
  }

  std::optional<std::vector<std::size_t>> sigma() const {
    std::vector<std::size_t> s;
    for (const FreeWord& w : images_) {
      auto form = conjugate_of_generator(w);
      if (!form) return std::nullopt;
      s.push_back(form->target);
    }
    return s;
  }

  std::optional<std::vector<FreeWord>> conjugators() const {
    std::vector<FreeWord> u;
    for (const FreeWord& w : images_) {
      auto form = conjugate_of_generator(w);
      if (!form) return std::nullopt;
      u.push_back(std::move(form->conjugator));
    }
    return u;
  }

  friend bool operator==(const DaggerAutomorphism&, const DaggerAutomorphism&) = default;

 private:
  std::vector<std::size_t> endpoints_;
  std::vector<FreeWord> images_;
};

/// The isomorphism induced by a (generalized) braid: Artin action on positions,
/// then position p renamed to d_{E[p]}.
inline DaggerAutomorphism induced_level_map(const GeneralizedBraid& f) {
  std::vector<FreeWord> images;
  const auto& e = f.endpoints();
  for (const FreeWord& w : artin_images(f.word())) {
    std::vector<FreeLetter> renamed;
    for (const FreeLetter& l : w.letters()) renamed.push_back({e[l.generator], l.exponent});
    images.emplace_back(renamed);
  }
  DaggerAutomorphism h(e, std::move(images));
  if (!h.sigma()) throw std::logic_error("braid-induced map is not of conjugate-of-generator form");
  return h;
}

inline DaggerAutomorphism induced_level_map(const BraidWord& f) { return induced_level_map(GeneralizedBraid(f)); }

/// Inverse of induced_level_map(f) as a map from {d_e : e in E} back to d_0..d_{m-1}.
inline FreeMorphism inverse_witness(const GeneralizedBraid& f) {
  FreeMorphism g;
  auto images = artin_images(inverse(f.word()));
  for (std::size_t p = 0; p < images.size(); ++p) g.set(f.endpoints()[p], std::move(images[p]));
  return g;
}

enum class IsomorphismEvidence { witness, reconstruction, unverified, refuted };

inline const char* to_string(IsomorphismEvidence e) {
  switch (e) {
    case IsomorphismEvidence::witness: return "isomorphism verified by inverse witness";
    case IsomorphismEvidence::reconstruction: return "isomorphism verified by braid reconstruction";
    case IsomorphismEvidence::unverified: return "unverified isomorphism";
    case IsomorphismEvidence::refuted: return "inverse witness refuted";
  }
  return "?";
}

struct DaggerReport {
  bool bijection = false;
  bool conjugate_form = false;
  bool product = false;
  IsomorphismEvidence isomorphism = IsomorphismEvidence::unverified;
  std::optional<BraidWord> reconstructed;
  std::vector<std::string> problems;

  bool structural() const noexcept { return bijection && conjugate_form && product; }
  bool passed() const noexcept {
    return structural() && (isomorphism == IsomorphismEvidence::witness ||
                            isomorphism == IsomorphismEvidence::reconstruction);
  }
};

inline constexpr std::size_t kDefaultMaxLength = 12;

inline std::optional<BraidWord> reconstruct_braid(const DaggerAutomorphism& h, std::size_t max_length);

namespace detail {

inline void check_structure(const DaggerAutomorphism& h, DaggerReport& r) {
  const std::size_t m = h.domain_size();
  r.conjugate_form = true;
  std::vector<std::size_t> sigma;
  for (std::size_t i = 0; i < m; ++i) {
    auto form = conjugate_of_generator(h.image(i));
    if (!form) {
      r.conjugate_form = false;
      r.problems.push_back("d" + std::to_string(i) + " -> " + to_string(h.image(i)) +
                           " is not a conjugate of a generator");
    } else {
      sigma.push_back(form->target);
    }
  }
  if (r.conjugate_form) {
    std::vector<std::size_t> sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    r.bijection = sorted == h.endpoints();
    if (!r.bijection) r.problems.push_back("sigma is not a bijection onto E = {" + join_naturals(h.endpoints()) + "}");
  }
  std::vector<std::size_t> domain(m);
  for (std::size_t i = 0; i < m; ++i) domain[i] = i;
  const FreeWord lhs = h.as_morphism()(ordered_product(domain));
  const FreeWord rhs = ordered_product(h.endpoints());
  r.product = lhs == rhs;
  if (!r.product) {
    r.problems.push_back("product of generators maps to " + to_string(lhs) + ", expected " + to_string(rhs));
  }
}

inline bool witness_inverts(const DaggerAutomorphism& h, const FreeMorphism& g) {
  const FreeMorphism hm = h.as_morphism();
  for (std::size_t i = 0; i < h.domain_size(); ++i) {
    if (g(hm.image(i)) != FreeWord::generator(i)) return false;
  }
  for (std::size_t e : h.endpoints()) {
    if (hm(g.image(e)) != FreeWord::generator(e)) return false;
  }
  return true;
}

}  // namespace detail

/// Checks the (dagger) property: conjugate-of-generator images, sigma a
/// bijection onto E, and d_0 ... d_{m-1} -> prod_{e in E} d_e. Isomorphism
/// needs evidence: an inverse witness when given, otherwise a braid found by
/// bounded search.
inline DaggerReport check_dagger(const DaggerAutomorphism& h, const FreeMorphism* witness = nullptr,
                                 std::size_t max_length = kDefaultMaxLength) {
  DaggerReport r;
  detail::check_structure(h, r);
  if (!r.structural()) return r;
  if (witness) {
    bool ok = false;
    try {
      ok = detail::witness_inverts(h, *witness);
    } catch (const std::out_of_range&) {
      ok = false;
    }
    r.isomorphism = ok ? IsomorphismEvidence::witness : IsomorphismEvidence::refuted;
    if (!ok) r.problems.push_back("the supplied inverse witness does not invert h");
    return r;
  }
  r.reconstructed = reconstruct_braid(h, max_length);
  r.isomorphism = r.reconstructed ? IsomorphismEvidence::reconstruction : IsomorphismEvidence::unverified;
  return r;
}

/// Breadth-first search for a braid word of length <= max_length inducing h.
/// Endpoints are renamed to their ranks first. Words are expanded in letter
/// order, so the first hit is the lexicographically least shortest witness.
inline std::optional<BraidWord> reconstruct_braid(const DaggerAutomorphism& h, std::size_t max_length) {
  const std::size_t m = h.domain_size();
  if (m == 0) return std::nullopt;
  std::vector<FreeWord> target;
  for (const FreeWord& w : h.images()) {
    std::vector<FreeLetter> renamed;
    for (const FreeLetter& l : w.letters()) {
      auto it = std::lower_bound(h.endpoints().begin(), h.endpoints().end(), l.generator);
      if (it == h.endpoints().end() || *it != l.generator) return std::nullopt;
      renamed.push_back({static_cast<std::size_t>(it - h.endpoints().begin()), l.exponent});
    }
    target.emplace_back(renamed);
  }

  struct Node {
    std::vector<FreeWord> images;
    std::size_t parent;
    Letter letter;
    std::size_t depth;
  };
  std::vector<Node> nodes;
  std::set<std::vector<FreeWord>> seen;
  std::vector<FreeWord> start;
  for (std::size_t i = 0; i < m; ++i) start.push_back(FreeWord::generator(i));
  seen.insert(start);
  nodes.push_back({std::move(start), 0, Letter{}, 0});

  std::vector<Letter> alphabet;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    alphabet.push_back(sigma_inv(i));
    alphabet.push_back(sigma(i));
  }

  auto word_of = [&](std::size_t k) {
    std::vector<Letter> letters;
    while (k != 0) {
      letters.push_back(nodes[k].letter);
      k = nodes[k].parent;
    }
    std::reverse(letters.begin(), letters.end());
    return BraidWord(m, std::move(letters));
  };

  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k].images == target) return word_of(k);
    if (nodes[k].depth == max_length) continue;
    for (const Letter& a : alphabet) {
      std::vector<FreeWord> next;
      next.reserve(m);
      for (const FreeWord& w : nodes[k].images) next.push_back(substitute(a, w));
      if (seen.insert(next).second) nodes.push_back({std::move(next), k, a, nodes[k].depth + 1});
    }
  }
  return std::nullopt;
}

/// Diagram commutativity p_{E_n} h_m = h_n p_n on every generator d_i, i < m.
inline bool check_diagram(const DaggerAutomorphism& upper, const DaggerAutomorphism& lower) {
  const std::size_t m = upper.domain_size();
  const std::size_t n = lower.domain_size();
  const auto& e_m = upper.endpoints();
  const auto& e_n = lower.endpoints();
  if (n > m || !std::includes(e_m.begin(), e_m.end(), e_n.begin(), e_n.end())) {
    throw std::invalid_argument("check_diagram needs n <= m and E_n contained in E_m");
  }
  for (std::size_t i = 0; i < m; ++i) {
    FreeWord lhs = project(upper.image(i), e_n);
    FreeWord rhs = i < n ? lower.image(i) : FreeWord{};
    if (lhs != rhs) return false;
  }
  return true;
}

/// Per-level maps h_1 .. h_N of an omega-braid.
struct AutomorphismTower {
  std::vector<DaggerAutomorphism> levels;  // levels[k] is h_{k+1}

  const DaggerAutomorphism& level(std::size_t m) const { return levels.at(m - 1); }
  std::size_t horizon() const noexcept { return levels.size(); }
};

inline AutomorphismTower induced_tower(const OmegaBraidTower& t, std::size_t horizon) {
  AutomorphismTower out;
  for (std::size_t m = 1; m <= horizon; ++m) out.levels.push_back(induced_level_map(t.level(m)));
  return out;
}

/// E_n inside E_m and the diagram for every n <= m (or adjacent levels only).
inline bool check_tower_diagrams(const AutomorphismTower& t, bool adjacent_only = true) {
  for (std::size_t m = 2; m <= t.horizon(); ++m) {
    for (std::size_t n = adjacent_only ? m - 1 : 1; n < m; ++n) {
      const auto& e_m = t.level(m).endpoints();
      const auto& e_n = t.level(n).endpoints();
      if (!std::includes(e_m.begin(), e_m.end(), e_n.begin(), e_n.end())) return false;
      if (!check_diagram(t.level(m), t.level(n))) return false;
    }
  }
  return true;
}

/// "DAGGER m=<m> E=<list>" followed by m lines "i -> <free word>".
inline std::string to_dagger_text(const DaggerAutomorphism& h) {
  std::ostringstream os;
  os << "DAGGER m=" << h.domain_size() << " E=" << join_naturals(h.endpoints()) << '\n';
  for (std::size_t i = 0; i < h.domain_size(); ++i) {
    os << i << " ->";
    if (!h.image(i).empty()) os << ' ' << to_string(h.image(i));
    os << '\n';
  }
  return os.str();
}

inline DaggerAutomorphism parse_dagger(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) lines.push_back(line);
  }
  if (lines.empty() || lines[0].rfind("DAGGER m=", 0) != 0) throw ParseError("expected 'DAGGER m=' header", 0);
  detail::Cursor cur{lines[0]};
  cur.pos = std::string_view("DAGGER m=").size();
  const std::size_t m = cur.nat();
  if (!cur.consume(" E=")) throw ParseError("expected ' E='", cur.pos);
  std::vector<std::size_t> endpoints = parse_naturals(std::string_view(lines[0]).substr(cur.pos));
  if (lines.size() != m + 1) {
    throw std::invalid_argument("DAGGER m=" + std::to_string(m) + " needs " + std::to_string(m) + " image lines");
  }
  std::vector<FreeWord> images(m);
  std::vector<bool> given(m, false);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto arrow = lines[k].find("->");
    if (arrow == std::string::npos) throw ParseError("expected '->' on line " + std::to_string(k + 1), 0);
    std::string idx = lines[k].substr(0, arrow);
    idx.erase(0, idx.find_first_not_of(" \t"));
    idx.erase(idx.find_last_not_of(" \t") + 1);
    detail::Cursor ic{idx};
    std::size_t i = ic.nat();
    if (!ic.at_end() || i >= m || given[i]) throw std::invalid_argument("bad generator index on line " + std::to_string(k + 1));
    given[i] = true;
    images[i] = parse_free_word(std::string_view(lines[k]).substr(arrow + 2));
  }
  return DaggerAutomorphism(std::move(endpoints), std::move(images));
}

}  // namespace infbraid
