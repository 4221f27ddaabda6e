#pragma once

#include <stdexcept>

#include "infbraid/braid_word.hpp"
#include "infbraid/garside.hpp"
#include "infbraid/handle_reduction.hpp"

namespace infbraid {

/// Raised when the two word-problem engines disagree. Never expected; it
/// means one of them is wrong.
class EngineDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Decides triviality with both handle reduction and the Garside normal form.
inline bool is_trivial(const BraidWord& f) {
  const bool by_handles = handle_reduce(f).empty();
  const bool by_garside = garside_normal_form(f).is_identity();
  if (by_handles != by_garside) {
    throw EngineDisagreement("handle reduction and Garside normal form disagree on " + to_string(f));
  }
  return by_handles;
}

inline bool equivalent(const BraidWord& f, const BraidWord& g) {
  require_same_strands(f, g);
  if (exponent_sum(f) != exponent_sum(g)) return false;
  return is_trivial(compose(f, inverse(g)));
}

}  // namespace infbraid
