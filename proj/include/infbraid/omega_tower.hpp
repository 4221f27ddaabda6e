#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "infbraid/braid_word.hpp"
#include "infbraid/equivalence.hpp"
#include "infbraid/generalized_braid.hpp"

namespace infbraid {

class UnsupportedRegime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IncoherentTower : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TowerKind { explicit_levels, finitely_supported, rule };

/// An omega-braid given by its restrictions to the first m strands, m >= 1.
///
/// Levels come from a rule and are memoized; copies share the cache, and
/// concurrent requests for one level all observe the first value stored.
/// Every check against a tower is bounded by an explicit horizon.
class OmegaBraidTower {
 public:
  using Rule = std::function<GeneralizedBraid(std::size_t)>;

  static OmegaBraidTower from_rule(std::string name, Rule rule, std::size_t horizon) {
    return OmegaBraidTower(TowerKind::rule, std::move(name), std::move(rule), horizon, std::nullopt);
  }

  /// levels[k] is level k+1.
  static OmegaBraidTower from_levels(std::vector<GeneralizedBraid> levels) {
    const std::size_t count = levels.size();
    auto shared = std::make_shared<const std::vector<GeneralizedBraid>>(std::move(levels));
    Rule rule = [shared](std::size_t m) -> GeneralizedBraid {
      if (m == 0 || m > shared->size()) {
        throw std::out_of_range("explicit tower has no level " + std::to_string(m));
      }
      return (*shared)[m - 1];
    };
    return OmegaBraidTower(TowerKind::explicit_levels, "explicit", std::move(rule), count, std::nullopt);
  }

  /// A finitely supported tower remembers the finite braid it pads.
  static OmegaBraidTower from_generator(BraidWord generator, Rule rule, std::size_t horizon) {
    return OmegaBraidTower(TowerKind::finitely_supported, "finsupp", std::move(rule), horizon,
                           std::move(generator));
  }

  TowerKind kind() const noexcept { return state_->kind; }
  const std::string& name() const noexcept { return state_->name; }
  std::size_t horizon() const noexcept { return state_->horizon; }
  const std::optional<BraidWord>& generator() const noexcept { return state_->generator; }

  OmegaBraidTower with_horizon(std::size_t horizon) const {
    OmegaBraidTower copy = *this;
    auto state = std::make_shared<State>(state_->kind, state_->name, state_->rule, horizon, state_->generator);
    state->parent = state_;
    copy.state_ = std::move(state);
    return copy;
  }

  const GeneralizedBraid& level(std::size_t m) const {
    if (m == 0) throw std::out_of_range("tower levels start at 1");
    return state_->root().get(m);
  }

 private:
  struct State {
    State(TowerKind k, std::string n, Rule r, std::size_t h, std::optional<BraidWord> g)
        : kind(k), name(std::move(n)), rule(std::move(r)), horizon(h), generator(std::move(g)) {}

    TowerKind kind;
    std::string name;
    Rule rule;
    std::size_t horizon;
    std::optional<BraidWord> generator;
    std::shared_ptr<State> parent;  // horizon-only copies share the parent's cache

    std::mutex mu;
    std::map<std::size_t, GeneralizedBraid> cache;

    State& root() { return parent ? parent->root() : *this; }

    const GeneralizedBraid& get(std::size_t m) {
      {
        std::lock_guard lock(mu);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
      }
      GeneralizedBraid value = rule(m);
      if (value.strands() != m) {
        throw IncoherentTower("level " + std::to_string(m) + " has " + std::to_string(value.strands()) +
                              " strands");
      }
      std::lock_guard lock(mu);
      return cache.try_emplace(m, std::move(value)).first->second;
    }
  };

  OmegaBraidTower(TowerKind kind, std::string name, Rule rule, std::size_t horizon,
                  std::optional<BraidWord> generator)
      : state_(std::make_shared<State>(kind, std::move(name), std::move(rule), horizon, std::move(generator))) {}

  std::shared_ptr<State> state_;
};

inline constexpr std::size_t kDefaultHorizon = 8;

/// The direct-limit embedding of B_n: pad with straight strands above n,
/// delete top strands below n.
inline OmegaBraidTower finitely_supported(const BraidWord& f, std::size_t horizon = kDefaultHorizon) {
  const std::size_t n = f.strands();
  // Restrictions below n are computed once, top strand first.
  auto below = std::make_shared<std::vector<GeneralizedBraid>>();
  GeneralizedBraid current(f);
  for (std::size_t m = n; m > 1; --m) {
    current = delete_strand(current, m - 1);
    below->push_back(current);
  }
  OmegaBraidTower::Rule rule = [f, n, below](std::size_t m) -> GeneralizedBraid {
    if (m >= n) return GeneralizedBraid(pad(f, m));
    return (*below)[n - 1 - m];
  };
  return OmegaBraidTower::from_generator(f, std::move(rule), horizon);
}

inline OmegaBraidTower identity_tower(std::size_t horizon = kDefaultHorizon) {
  return OmegaBraidTower::from_rule(
      "identity", [](std::size_t m) { return GeneralizedBraid(identity_word(m)); }, horizon);
}

/// Pure generator A_{0,k}: strand k winds once around strand 0.
inline std::vector<Letter> winding_block(std::size_t k) {
  std::vector<Letter> out;
  for (std::size_t j = k - 1; j >= 1; --j) out.push_back(sigma(j));
  out.push_back(sigma(0));
  out.push_back(sigma(0));
  for (std::size_t j = 1; j < k; ++j) out.push_back(sigma_inv(j));
  return out;
}

/// Strand 0 stays straight and every other strand winds around it once:
/// level m is A_{0,1} A_{0,2} ... A_{0,m-1}.
inline OmegaBraidTower winding_tower(std::size_t horizon = kDefaultHorizon) {
  return OmegaBraidTower::from_rule(
      "winding",
      [](std::size_t m) {
        std::vector<Letter> letters;
        for (std::size_t k = 1; k < m; ++k) {
          auto block = winding_block(k);
          letters.insert(letters.end(), block.begin(), block.end());
        }
        return GeneralizedBraid(BraidWord(m, std::move(letters)));
      },
      horizon);
}

enum class CoherenceViolation { cardinality, endpoint_nesting, deletion_mismatch };

inline const char* to_string(CoherenceViolation v) {
  switch (v) {
    case CoherenceViolation::cardinality: return "cardinality";
    case CoherenceViolation::endpoint_nesting: return "endpoint nesting";
    case CoherenceViolation::deletion_mismatch: return "deletion mismatch";
  }
  return "?";
}

struct CoherenceFailure {
  std::size_t level;
  CoherenceViolation violation;
  std::string detail;
};

struct CoherenceReport {
  std::size_t horizon = 0;
  std::vector<CoherenceFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Checks |E_m| = m, E_m inside E_{m+1}, and delete_strand(level(m+1), m) ~ level(m)
/// for all levels up to N. Failures are reported against the lower level.
inline CoherenceReport validate_coherence(const OmegaBraidTower& t, std::size_t horizon) {
  if (horizon == 0) throw std::invalid_argument("horizon must be at least 1");
  CoherenceReport report;
  report.horizon = horizon;
  for (std::size_t m = 1; m <= horizon; ++m) {
    const GeneralizedBraid* lower = nullptr;
    try {
      lower = &t.level(m);
    } catch (const IncoherentTower& e) {
      report.failures.push_back({m, CoherenceViolation::cardinality, e.what()});
      continue;
    }
    if (m == horizon) break;
    const GeneralizedBraid* upper = nullptr;
    try {
      upper = &t.level(m + 1);
    } catch (const IncoherentTower&) {
      continue;  // reported at m+1
    }
    const auto& small = lower->endpoints();
    const auto& big = upper->endpoints();
    if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) {
      report.failures.push_back({m, CoherenceViolation::endpoint_nesting,
                                 "E_" + std::to_string(m) + " = {" + join_naturals(small) +
                                     "} is not contained in E_" + std::to_string(m + 1) + " = {" +
                                     join_naturals(big) + "}"});
    }
    GeneralizedBraid restricted = delete_strand(*upper, m);
    if (!equivalent(restricted, *lower)) {
      report.failures.push_back({m, CoherenceViolation::deletion_mismatch,
                                 "deleting strand " + std::to_string(m) + " of level " +
                                     std::to_string(m + 1) + " gives " + to_string(restricted) +
                                     ", expected " + to_string(*lower)});
    }
  }
  return report;
}

/// Union of E_m for m <= N. Surjectivity onto omega is only semi-decidable:
/// callers compare against the lower set they expect.
inline std::set<std::size_t> validate_surjectivity(const OmegaBraidTower& t, std::size_t horizon) {
  std::set<std::size_t> hit;
  for (std::size_t m = 1; m <= horizon; ++m) {
    const auto& e = t.level(m).endpoints();
    hit.insert(e.begin(), e.end());
  }
  return hit;
}

inline void require_coherent(const OmegaBraidTower& t, std::size_t horizon) {
  CoherenceReport r = validate_coherence(t, horizon);
  if (!r.ok()) {
    const auto& f = r.failures.front();
    throw IncoherentTower("tower is incoherent at level " + std::to_string(f.level) + " (" +
                          to_string(f.violation) + ")");
  }
}

/// First level m <= N at which the towers differ, if any. Both towers must be
/// coherent up to N.
inline std::optional<std::size_t> first_inequivalent_level(const OmegaBraidTower& s,
                                                           const OmegaBraidTower& t,
                                                           std::size_t horizon) {
  require_coherent(s, horizon);
  require_coherent(t, horizon);
  for (std::size_t m = 1; m <= horizon; ++m) {
    if (!equivalent(s.level(m), t.level(m))) return m;
  }
  return std::nullopt;
}

/// Equivalence up to level N. A `false` is definitive; a `true` is a bounded
/// confirmation only.
inline bool towers_equivalent(const OmegaBraidTower& s, const OmegaBraidTower& t, std::size_t horizon) {
  return !first_inequivalent_level(s, t, horizon).has_value();
}

inline bool is_pure_up_to(const OmegaBraidTower& t, std::size_t horizon) {
  for (std::size_t m = 1; m <= horizon; ++m) {
    if (!t.level(m).is_pure()) return false;
  }
  return true;
}

namespace detail {

inline const GeneralizedBraid& pure_level(const OmegaBraidTower& t, std::size_t m) {
  const GeneralizedBraid& level = t.level(m);
  if (!level.is_pure()) {
    throw UnsupportedRegime("level " + std::to_string(m) + " of the tower is not pure");
  }
  return level;
}

// Levels >= n come from `upper`; the rest are restrictions of level n.
inline OmegaBraidTower with_restrictions_below(std::string name, std::size_t n,
                                               std::function<GeneralizedBraid(std::size_t)> upper,
                                               std::size_t horizon) {
  auto below = std::make_shared<std::vector<GeneralizedBraid>>();
  auto once = std::make_shared<std::once_flag>();
  OmegaBraidTower::Rule rule = [n, upper, below, once](std::size_t m) -> GeneralizedBraid {
    if (m >= n) return upper(m);
    std::call_once(*once, [&] {
      GeneralizedBraid current = upper(n);
      for (std::size_t k = n; k > 1; --k) {
        current = delete_strand(current, k - 1);
        below->push_back(current);
      }
    });
    return (*below)[n - 1 - m];
  };
  return OmegaBraidTower::from_rule(std::move(name), std::move(rule), horizon);
}

}  // namespace detail

/// Levelwise product s # t. Supported when s is finitely supported (its end
/// permutation fixes everything above its support) or pure up to the
/// horizon; anything else needs an infinite relabeling and is rejected.
inline OmegaBraidTower tower_compose(const OmegaBraidTower& s, const OmegaBraidTower& t) {
  const std::size_t horizon = std::min(s.horizon(), t.horizon());
  if (s.kind() == TowerKind::finitely_supported) {
    const BraidWord& f = *s.generator();
    if (t.kind() == TowerKind::finitely_supported) {
      const BraidWord& g = *t.generator();
      const std::size_t n = std::max(f.strands(), g.strands());
      return finitely_supported(compose(pad(f, n), pad(g, n)), horizon);
    }
    return detail::with_restrictions_below(
        "compose", f.strands(),
        [f, t](std::size_t m) {
          const GeneralizedBraid& right = t.level(m);
          return GeneralizedBraid(compose(pad(f, m), right.word()), right.endpoints());
        },
        horizon);
  }
  if (!is_pure_up_to(s, s.horizon())) {
    throw UnsupportedRegime(
        "tower_compose needs a pure or finitely supported left factor; the relabeling by an "
        "infinite permutation is not levelwise computable");
  }
  return OmegaBraidTower::from_rule(
      "compose",
      [s, t](std::size_t m) {
        const GeneralizedBraid& left = detail::pure_level(s, m);
        const GeneralizedBraid& right = t.level(m);
        return GeneralizedBraid(compose(left.word(), right.word()), right.endpoints());
      },
      horizon);
}

inline OmegaBraidTower tower_inverse(const OmegaBraidTower& t) {
  if (t.kind() == TowerKind::finitely_supported) return finitely_supported(inverse(*t.generator()), t.horizon());
  if (!is_pure_up_to(t, t.horizon())) {
    throw UnsupportedRegime("tower_inverse needs a pure or finitely supported tower");
  }
  return OmegaBraidTower::from_rule(
      "inverse", [t](std::size_t m) { return GeneralizedBraid(inverse(detail::pure_level(t, m).word())); },
      t.horizon());
}

inline OmegaBraidTower tower_power(const OmegaBraidTower& t, int exponent) {
  OmegaBraidTower base = exponent < 0 ? tower_inverse(t) : t;
  OmegaBraidTower out = identity_tower(t.horizon());
  if (t.kind() == TowerKind::finitely_supported) {
    out = finitely_supported(identity_word(1), t.horizon());
  }
  for (int k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) out = tower_compose(out, base);
  return out;
}

/// True iff the m-th power is trivial at every level up to N.
inline bool torsion_check(const OmegaBraidTower& t, int exponent, std::size_t horizon) {
  if (exponent < 2) throw std::invalid_argument("torsion exponent must be at least 2");
  if (t.kind() != TowerKind::finitely_supported && !is_pure_up_to(t, horizon)) {
    throw UnsupportedRegime("torsion_check needs a pure or finitely supported tower");
  }
  OmegaBraidTower p = tower_power(t.with_horizon(horizon), exponent);
  for (std::size_t m = 1; m <= horizon; ++m) {
    const GeneralizedBraid& level = p.level(m);
    if (!level.has_standard_endpoints() || !is_trivial(level.word())) return false;
  }
  return true;
}

/// Replaces a pure braid on n+1 strands by (s_{n-1}^2)^k, k = exponent_sum / 2:
/// a pure braid that keeps strands 0..n-2 straight and has the same image in
/// the abelianization.
inline BraidWord abelianization_push(const BraidWord& f) {
  if (!is_pure(f)) throw std::invalid_argument("abelianization_push needs a pure braid");
  const long sum = exponent_sum(f);
  if (sum % 2 != 0) throw std::logic_error("pure braid with odd exponent sum");
  if (f.strands() < 2) return identity_word(f.strands());
  const Letter letter{f.strands() - 2, sum < 0 ? -1 : 1};
  std::vector<Letter> letters(static_cast<std::size_t>(sum < 0 ? -sum : sum), letter);
  return BraidWord(f.strands(), std::move(letters));
}

}  // namespace infbraid
