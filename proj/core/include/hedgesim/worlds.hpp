#pragma once

// Possible-worlds models built from Sorites forced marches, and the doxastic
// operators (thinks, everyone-thinks, common belief) over agent partitions.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hedgesim/world_set.hpp"

namespace hedgesim {

using AgentId = std::size_t;

/// The two answers an agent may give at a forced-march state.
enum class Judgment { q, not_q };

/// A linearly ordered series of states t_1..t_n over which every agent issues
/// a total judgment. Each agent judges `q` strictly before its flip index and
/// `not_q` from the flip index on.
class SoritesSeries {
 public:
  struct Flip {
    std::string agent;
    std::size_t index;  // 1-based state index, in [2, n]
  };

  SoritesSeries(std::size_t n, std::vector<Flip> flips);

  std::size_t size() const noexcept { return n_; }
  const std::vector<Flip>& flips() const noexcept { return flips_; }
  std::size_t agent_count() const noexcept { return flips_.size(); }

  /// `state` is 1-based.
  Judgment judgment(AgentId agent, std::size_t state) const;
  std::vector<Judgment> judgment_vector(std::size_t state) const;

  std::size_t min_flip() const;
  std::size_t max_flip() const;

 private:
  std::size_t n_;
  std::vector<Flip> flips_;
};

/// Validates and builds a forced march. Throws ModelError when n < 3, a flip
/// lies outside [2, n], no agent is given, or an agent label repeats.
SoritesSeries build_forced_march(std::size_t n, std::vector<SoritesSeries::Flip> flips);

/// Agents, worlds, one partition per agent and the extensions of the atom
/// pair phi / not-phi. Immutable once constructed.
class WorldModel {
 public:
  /// Throws ModelError if a partition is not disjoint and exhaustive, has an
  /// empty cell, or if the atom extensions overlap.
  WorldModel(std::vector<std::string> agents, std::vector<std::string> worlds,
             std::vector<std::vector<WorldSet>> partitions, WorldSet phi,
             WorldSet not_phi);

  const std::vector<std::string>& agents() const noexcept { return agents_; }
  const std::vector<std::string>& worlds() const noexcept { return worlds_; }
  std::size_t world_count() const noexcept { return worlds_.size(); }
  std::size_t agent_count() const noexcept { return agents_.size(); }

  AgentId agent(std::string_view label) const;
  WorldId world(std::string_view label) const;
  std::optional<AgentId> find_agent(std::string_view label) const;
  std::optional<WorldId> find_world(std::string_view label) const;

  const std::vector<WorldSet>& partition(AgentId agent) const;
  /// pi_i(w): the cell of `agent`'s partition containing `w`.
  const WorldSet& cell(AgentId agent, WorldId w) const;

  const WorldSet& phi_extension() const noexcept { return phi_; }
  const WorldSet& not_phi_extension() const noexcept { return not_phi_; }

  WorldSet all_worlds() const { return WorldSet::full(worlds_.size()); }

  /// Renders a world set as "{w1,w2}".
  std::string format(const WorldSet& set) const;

 private:
  void check_agent(AgentId agent) const;
  void check_world(WorldId w) const;

  std::vector<std::string> agents_;
  std::vector<std::string> worlds_;
  std::vector<std::vector<WorldSet>> partitions_;
  std::vector<std::vector<std::size_t>> cell_index_;  // [agent][world] -> cell
  WorldSet phi_;
  WorldSet not_phi_;
};

/// Where an agent judges q (or not-q) across the pooled worlds.
struct JudgmentProposition {
  AgentId agent;
  Judgment polarity;
  WorldSet extension;
};

/// The result of pooling a forced march into uber-states.
struct PooledModel {
  WorldModel model;
  /// 1-based forced-march states making up each world, in world order.
  std::vector<std::vector<std::size_t>> members;
  /// judgments[agent] = {q extension, not-q extension}.
  std::vector<std::pair<JudgmentProposition, JudgmentProposition>> judgments;

  const WorldSet& judges_q(AgentId agent) const { return judgments.at(agent).first.extension; }
  const WorldSet& judges_not_q(AgentId agent) const {
    return judgments.at(agent).second.extension;
  }
  /// Worlds where every agent judges not-q.
  WorldSet all_not_q() const;
  /// Worlds where every agent judges q.
  WorldSet all_q() const;
};

/// Pools a forced march into the uber-states
///   w1 = {t : t < min flip},  w2 = {t : min flip <= t <= max flip},
///   w3 = {t : max flip < t}.
/// w3 is omitted when the latest flip is at t_n. Each agent's judgment at an
/// uber-state is its judgment at the uber-state's first member; partitions
/// group uber-states with equal judgment. phi holds where all agents judge q,
/// not-phi where all judge not-q, and both are gaps elsewhere.
PooledModel pool_states(const SoritesSeries& series);

/// The two-agent model of the signalling game under uncertainty: agent "S"
/// flips later and cannot tell w1 from w2, agent "L" flips earlier and cannot
/// tell w2 from w3.
PooledModel canonical_model();

/// True iff pi_agent(w) is a subset of `prop`.
bool thinks(const WorldModel& model, AgentId agent, const WorldSet& prop, WorldId w);

/// {w in restriction : for every agent, pi_i(w) & restriction is within prop}.
WorldSet everyone_thinks(const WorldModel& model, const WorldSet& prop,
                         const WorldSet& restriction);

/// Greatest fixpoint of everyone_thinks below `prop`: the worlds of
/// `restriction` at which `prop` is public.
WorldSet common_belief(const WorldModel& model, const WorldSet& prop,
                       const WorldSet& restriction);

/// True iff some agent's cell at `w` contains `w2`.
bool accessible(const WorldModel& model, WorldId w, WorldId w2);

}  // namespace hedgesim
