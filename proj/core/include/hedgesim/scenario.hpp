#pragma once

// Scenario files and end-to-end runs.
//
// A scenario is a line-oriented `key = value` file with three sections:
//
//   [series]            # either a forced march ...
//   n = 5
//   flip.S = 4
//   flip.L = 2
//   # ... or: canonical = true
//
//   [game]
//   delta = 0.7         # required, (0, 1)
//   gamma = 0.2         # required, [0, 1)
//   tau = 0.5           # (0, 1)
//   epsilon = 0.01      # [0, 0.5)
//   hesitation = 0.5    # (0, 1]
//   payoff.S.ab = 0     # u(S plays a, other plays b), >= 0
//
//   [run]
//   speaker = S         # required
//   world = w2          # required
//   steps = 50          # >= 4
//   tolerance = 1e-6    # > 0
//
// `#` starts a comment. Keys are case-sensitive; unknown keys, sections and
// duplicate keys are errors.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hedgesim/assertion.hpp"
#include "hedgesim/game.hpp"
#include "hedgesim/hedging.hpp"
#include "hedgesim/semantics.hpp"
#include "hedgesim/worlds.hpp"

namespace hedgesim {

struct PayoffEntry {
  std::string agent;
  Action own = Action::a;
  Action other = Action::a;
  double value = 0;
  friend bool operator==(const PayoffEntry&, const PayoffEntry&) = default;
};

struct Scenario {
  struct Series {
    bool canonical = false;
    std::size_t n = 0;
    std::vector<SoritesSeries::Flip> flips;
    friend bool operator==(const Series& a, const Series& b) {
      if (a.canonical != b.canonical || a.n != b.n || a.flips.size() != b.flips.size())
        return false;
      for (std::size_t i = 0; i < a.flips.size(); ++i)
        if (a.flips[i].agent != b.flips[i].agent || a.flips[i].index != b.flips[i].index)
          return false;
      return true;
    }
  };
  struct Game {
    double delta = 0;
    double gamma = 0;
    double tau = 0.5;
    double epsilon = 0.01;
    double hesitation = 0.5;
    std::vector<PayoffEntry> payoffs;
    friend bool operator==(const Game&, const Game&) = default;
  };
  struct Run {
    std::string speaker;
    std::string world;
    std::size_t steps = 50;
    double tolerance = 1e-6;
    friend bool operator==(const Run&, const Run&) = default;
  };

  Series series;
  Game game;
  Run run;

  friend bool operator==(const Scenario&, const Scenario&) = default;

  /// The forced march this scenario describes.
  SoritesSeries forced_march() const;
  /// Agent label playing each role; the later flipper is the late flipper.
  std::string agent_for(Player role) const;
  Player role_of(std::string_view agent) const;
  GameConfig game_config() const;
};

/// Throws ParseError (syntax, with line number) or RangeError (value out of
/// range, naming the key).
Scenario parse_scenario(std::string_view text);

/// Canonical text form; parse_scenario(render_scenario(s)) == s.
std::string render_scenario(const Scenario& s);

/// One row of the dialogue: the common ground after `time` assertions and the
/// listener's distribution over it.
struct DialogueStep {
  std::size_t time = 0;
  std::optional<Formula> signal;  // none at time 0
  WorldSet live;
  WorldDistribution posterior;
};

struct RunReport {
  Scenario scenario;
  std::shared_ptr<const PooledModel> pooled;
  AgentId speaker = 0;
  WorldId actual = 0;
  Formula signal = Formula::phi();
  std::vector<DialogueStep> dialogue;
  /// Common belief, at the actual world and within the final common ground,
  /// that every agent judges q (resp. not q).
  bool public_q = false;
  bool public_not_q = false;
  EquilibriumReport equilibrium;
  HedgingTrace hedging;

  const WorldModel& model() const { return pooled->model; }
};

/// pool -> speaker signal -> update -> posterior -> equilibrium -> hedging.
RunReport run_scenario(const Scenario& s);

/// Self-consistency problems of a report; empty when it is sound.
std::vector<std::string> audit(const RunReport& report);

}  // namespace hedgesim
