#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "infbraid/infbraid.hpp"

namespace braidtool {

enum Exit : int { kYes = 0, kNo = 1, kUsage = 2, kInternal = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool looks_inline(const std::string& arg, std::initializer_list<const char*> headers) {
  if (arg.find('\n') != std::string::npos) return true;
  for (const char* h : headers) {
    if (arg.rfind(h, 0) == 0) return true;
  }
  return false;
}

// An argument is either the text itself or a path to a file holding it.
inline std::string load(const std::string& arg, std::initializer_list<const char*> headers) {
  if (looks_inline(arg, headers)) return arg;
  std::ifstream in(arg);
  if (!in) throw UsageError("cannot read '" + arg + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline infbraid::BraidWord load_word(const std::string& arg) {
  std::string text = load(arg, {"B"});
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return infbraid::parse_word(text);
}

inline infbraid::GeneralizedBraid load_generalized(const std::string& arg) {
  if (arg.find('|') != std::string::npos) return infbraid::parse_generalized(arg);
  return infbraid::GeneralizedBraid(load_word(arg));
}

inline infbraid::OmegaBraidTower load_tower(const std::string& arg) {
  return infbraid::parse_tower(load(arg, {"TOWER"}));
}

inline infbraid::DaggerAutomorphism load_dagger(const std::string& arg) {
  return infbraid::parse_dagger(load(arg, {"DAGGER"}));
}

inline infbraid::PLBraid load_pl(const std::string& arg) { return infbraid::parse_pl(load(arg, {"PL "})); }

struct Options {
  std::size_t horizon = infbraid::kDefaultHorizon;
  std::size_t max_length = infbraid::kDefaultMaxLength;
  std::uint64_t seed = 1;
  std::string format = "ascii";
  std::vector<std::string> args;
  std::string pl;
  std::string witness;
  std::size_t random = 0;
};

inline void expect_args(const Options& o, std::size_t n, const char* verb) {
  if (o.args.size() != n) {
    throw UsageError(std::string(verb) + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
  }
}

inline int cmd_nf(const Options& o, std::ostream& out) {
  expect_args(o, 1, "nf");
  out << infbraid::to_string(infbraid::garside_normal_form(load_word(o.args[0]))) << '\n';
  return kYes;
}

inline int cmd_eq(const Options& o, std::ostream& out) {
  expect_args(o, 2, "eq");
  const bool eq = infbraid::equivalent(load_word(o.args[0]), load_word(o.args[1]));
  out << (eq ? "equivalent" : "not equivalent") << '\n';
  return eq ? kYes : kNo;
}

inline int cmd_perm(const Options& o, std::ostream& out) {
  expect_args(o, 1, "perm");
  out << infbraid::underlying_permutation(load_word(o.args[0])).cycle_string() << '\n';
  return kYes;
}

inline int cmd_expsum(const Options& o, std::ostream& out) {
  expect_args(o, 1, "expsum");
  out << infbraid::exponent_sum(load_word(o.args[0])) << '\n';
  return kYes;
}

inline int cmd_delete(const Options& o, std::ostream& out) {
  expect_args(o, 2, "delete");
  std::size_t index = 0;
  try {
    std::size_t used = 0;
    index = std::stoul(o.args[1], &used);
    if (used != o.args[1].size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw UsageError("strand index must be a natural number");
  }
  out << infbraid::to_string(infbraid::delete_strand(load_generalized(o.args[0]), index)) << '\n';
  return kYes;
}

inline int cmd_tower_check(const Options& o, std::ostream& out) {
  expect_args(o, 1, "tower-check");
  auto t = load_tower(o.args[0]);
  auto report = infbraid::validate_coherence(t, o.horizon);
  for (const auto& f : report.failures) {
    out << "level " << f.level << ": " << infbraid::to_string(f.violation) << ": " << f.detail << '\n';
  }
  if (!report.ok()) {
    out << "incoherent up to level " << o.horizon << '\n';
    return kNo;
  }
  auto hit = infbraid::validate_surjectivity(t, o.horizon);
  out << "endpoints up to level " << o.horizon << ": "
      << infbraid::join_naturals(std::vector<std::size_t>(hit.begin(), hit.end())) << '\n';
  out << "coherent up to level " << o.horizon << '\n';
  return kYes;
}

inline int cmd_tower_eq(const Options& o, std::ostream& out) {
  expect_args(o, 2, "tower-eq");
  auto s = load_tower(o.args[0]);
  auto t = load_tower(o.args[1]);
  auto level = infbraid::first_inequivalent_level(s, t, o.horizon);
  if (level) {
    out << "not equivalent (levels differ at " << *level << ")\n";
    return kNo;
  }
  out << "equivalent up to level " << o.horizon << '\n';
  return kYes;
}

inline int cmd_act(const Options& o, std::ostream& out) {
  expect_args(o, 2, "act");
  out << infbraid::to_string(infbraid::artin_action(load_word(o.args[0]), infbraid::parse_free_word(o.args[1])))
      << '\n';
  return kYes;
}

inline int cmd_dagger_check(const Options& o, std::ostream& out) {
  expect_args(o, 1, "dagger-check");
  auto h = load_dagger(o.args[0]);
  std::optional<infbraid::FreeMorphism> witness;
  if (!o.witness.empty()) witness = load_dagger(o.witness).as_morphism();
  auto r = infbraid::check_dagger(h, witness ? &*witness : nullptr, o.max_length);
  out << "bijection: " << (r.bijection ? "yes" : "no") << '\n';
  out << "conjugate form: " << (r.conjugate_form ? "yes" : "no") << '\n';
  out << "product condition: " << (r.product ? "yes" : "no") << '\n';
  for (const auto& p : r.problems) out << "problem: " << p << '\n';
  if (r.structural()) {
    out << infbraid::to_string(r.isomorphism);
    if (r.isomorphism == infbraid::IsomorphismEvidence::reconstruction) out << " (" << infbraid::to_string(*r.reconstructed) << ")";
    if (r.isomorphism == infbraid::IsomorphismEvidence::unverified) out << " (no braid of length <= " << o.max_length << ")";
    out << '\n';
  }
  out << (r.passed() ? "pass" : "fail") << '\n';
  return r.passed() ? kYes : kNo;
}

inline int cmd_diagram_check(const Options& o, std::ostream& out) {
  if (o.args.size() == 1) {
    auto t = load_tower(o.args[0]);
    infbraid::require_coherent(t, o.horizon);
    const bool ok = infbraid::check_tower_diagrams(infbraid::induced_tower(t, o.horizon));
    out << (ok ? "commutes" : "does not commute") << " up to level " << o.horizon << '\n';
    return ok ? kYes : kNo;
  }
  expect_args(o, 2, "diagram-check");
  const bool ok = infbraid::check_diagram(load_dagger(o.args[0]), load_dagger(o.args[1]));
  out << (ok ? "commutes" : "does not commute") << '\n';
  return ok ? kYes : kNo;
}

inline int cmd_reconstruct(const Options& o, std::ostream& out) {
  expect_args(o, 1, "reconstruct");
  auto found = infbraid::reconstruct_braid(load_dagger(o.args[0]), o.max_length);
  if (!found) {
    out << "no braid of length <= " << o.max_length << '\n';
    return kNo;
  }
  out << infbraid::to_string(*found) << '\n';
  return kYes;
}

inline int cmd_roundtrip(const Options& o, std::ostream& out) {
  if (!o.pl.empty()) {
    expect_args(o, 0, "roundtrip --pl");
    auto b = load_pl(o.pl);
    if (!infbraid::certify_disjoint(b)) {
      out << "strands collide\n";
      return kNo;
    }
    auto g = infbraid::pl_to_word(b);
    const bool perm_ok = infbraid::underlying_permutation(g.word()) == infbraid::endpoint_permutation(b);
    out << infbraid::to_string(g.word()) << '\n';
    out << "permutation " << (perm_ok ? "matches" : "does not match") << " endpoints\n";
    return perm_ok ? kYes : kNo;
  }
  if (o.random > 0) {
    expect_args(o, 0, "roundtrip --random");
    std::mt19937_64 rng(o.seed);
    std::size_t good = 0;
    for (std::size_t k = 0; k < o.random; ++k) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
      const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 10)(rng);
      std::vector<infbraid::Letter> letters;
      for (std::size_t j = 0; j < len; ++j) {
        letters.push_back({std::uniform_int_distribution<std::size_t>(0, n - 2)(rng),
                           std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1});
      }
      infbraid::BraidWord f(n, std::move(letters));
      auto b = infbraid::word_to_pl(f);
      if (infbraid::certify_disjoint(b) && infbraid::equivalent(infbraid::pl_to_word(b).word(), f)) ++good;
    }
    out << good << "/" << o.random << " round trips equivalent (seed " << o.seed << ")\n";
    return good == o.random ? kYes : kNo;
  }
  expect_args(o, 1, "roundtrip");
  auto f = load_word(o.args[0]);
  auto b = infbraid::word_to_pl(f);
  const bool disjoint = infbraid::certify_disjoint(b);
  auto g = infbraid::pl_to_word(b).word();
  const bool eq = disjoint && infbraid::equivalent(f, g);
  out << infbraid::to_string(g) << '\n';
  out << (eq ? "equivalent" : "not equivalent") << '\n';
  return eq ? kYes : kNo;
}

inline int cmd_render(const Options& o, std::ostream& out) {
  const auto format = infbraid::parse_render_format(o.format);
  if (!o.pl.empty()) {
    expect_args(o, 0, "render --pl");
    out << infbraid::render(load_pl(o.pl), format);
    return kYes;
  }
  expect_args(o, 1, "render");
  out << infbraid::render(load_word(o.args[0]), format);
  return kYes;
}

inline int cmd_push(const Options& o, std::ostream& out) {
  expect_args(o, 1, "push");
  out << infbraid::to_string(infbraid::abelianization_push(load_word(o.args[0]))) << '\n';
  return kYes;
}

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braid words, omega-braid towers and free-group automorphisms", "braidtool"};
  app.require_subcommand(1);
  Options o;

  struct Verb {
    const char* name;
    const char* usage;
    int (*fn)(const Options&, std::ostream&);
  };
  const std::vector<Verb> verbs = {
      {"nf", "nf WORD: Garside normal form", cmd_nf},
      {"eq", "eq WORD WORD: decide equivalence", cmd_eq},
      {"perm", "perm WORD: underlying permutation", cmd_perm},
      {"expsum", "expsum WORD: exponent sum", cmd_expsum},
      {"delete", "delete WORD|'E | WORD' INDEX: delete the strand starting at INDEX", cmd_delete},
      {"tower-check", "tower-check TOWER [--horizon N]: coherence and endpoint union", cmd_tower_check},
      {"tower-eq", "tower-eq TOWER TOWER [--horizon N]: equivalence up to level N", cmd_tower_eq},
      {"act", "act WORD FREEWORD: Artin action", cmd_act},
      {"dagger-check", "dagger-check DAGGER [--witness DAGGER] [--max-length L]: (dagger) property", cmd_dagger_check},
      {"diagram-check", "diagram-check DAGGER DAGGER | TOWER [--horizon N]: diagram commutativity", cmd_diagram_check},
      {"reconstruct", "reconstruct DAGGER [--max-length L]: bounded search for a braid", cmd_reconstruct},
      {"roundtrip", "roundtrip WORD | --pl FILE | --random K [--seed S]: geometry round trip", cmd_roundtrip},
      {"render", "render WORD | --pl FILE [--format ascii|svg]: draw a diagram", cmd_render},
      {"push", "push WORD: abelianization push of a pure braid", cmd_push},
  };

  std::vector<std::pair<CLI::App*, const Verb*>> subs;
  for (const Verb& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.usage);
    sub->add_option("args", o.args, "words, literals or file paths");
    sub->add_option("--horizon", o.horizon, "level bound")->check(CLI::PositiveNumber);
    sub->add_option("--max-length", o.max_length, "search bound");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--format", o.format, "ascii or svg");
    sub->add_option("--pl", o.pl, "PL braid file");
    sub->add_option("--witness", o.witness, "inverse witness, as a DAGGER file");
    sub->add_option("--random", o.random, "number of random round trips");
    subs.emplace_back(sub, &v);
  }

  auto grammar = [&](std::ostream& os) {
    os << "usage: braidtool VERB ARGS...\n";
    for (const Verb& v : verbs) os << "  " << v.usage << '\n';
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    grammar(out);
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    grammar(err);
    return kUsage;
  }

  for (const auto& [sub, verb] : subs) {
    if (!sub->parsed()) continue;
    try {
      return verb->fn(o, out);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n' << "usage: braidtool " << verb->usage << '\n';
      return kUsage;
    } catch (const infbraid::EngineDisagreement& e) {
      err << "internal error: " << e.what() << '\n';
      return kInternal;
    } catch (const infbraid::BudgetExceeded& e) {
      err << "internal error: " << e.what() << '\n';
      return kInternal;
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const std::out_of_range& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << '\n';
      return kInternal;
    }
  }
  grammar(err);
  return kUsage;
}

}  // namespace braidtool
