#include "hedgesim/worlds.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hedgesim/errors.hpp"

namespace hedgesim {

// ---------------------------------------------------------------------------
// SoritesSeries

SoritesSeries::SoritesSeries(std::size_t n, std::vector<Flip> flips)
    : n_(n), flips_(std::move(flips)) {
  if (n_ < 3) throw ModelError("forced march needs at least 3 states, got " + std::to_string(n_));
  if (flips_.empty()) throw ModelError("forced march needs at least one agent");
  std::set<std::string> seen;
  for (const auto& f : flips_) {
    if (f.agent.empty()) throw ModelError("empty agent label");
    if (!seen.insert(f.agent).second) throw ModelError("duplicate agent '" + f.agent + "'");
    if (f.index < 2 || f.index > n_)
      throw ModelError("flip for agent '" + f.agent + "' is " + std::to_string(f.index) +
                       ", must be in [2, " + std::to_string(n_) + "]");
  }
}

Judgment SoritesSeries::judgment(AgentId agent, std::size_t state) const {
  if (agent >= flips_.size()) throw LookupError("agent index out of range");
  if (state < 1 || state > n_) throw LookupError("state index out of range");
  return state < flips_[agent].index ? Judgment::q : Judgment::not_q;
}

std::vector<Judgment> SoritesSeries::judgment_vector(std::size_t state) const {
  std::vector<Judgment> v;
  v.reserve(flips_.size());
  for (AgentId a = 0; a < flips_.size(); ++a) v.push_back(judgment(a, state));
  return v;
}

std::size_t SoritesSeries::min_flip() const {
  return std::min_element(flips_.begin(), flips_.end(),
                          [](const Flip& a, const Flip& b) { return a.index < b.index; })
      ->index;
}

std::size_t SoritesSeries::max_flip() const {
  return std::max_element(flips_.begin(), flips_.end(),
                          [](const Flip& a, const Flip& b) { return a.index < b.index; })
      ->index;
}

SoritesSeries build_forced_march(std::size_t n, std::vector<SoritesSeries::Flip> flips) {
  return SoritesSeries(n, std::move(flips));
}

// ---------------------------------------------------------------------------
// WorldModel

WorldModel::WorldModel(std::vector<std::string> agents, std::vector<std::string> worlds,
                       std::vector<std::vector<WorldSet>> partitions, WorldSet phi,
                       WorldSet not_phi)
    : agents_(std::move(agents)),
      worlds_(std::move(worlds)),
      partitions_(std::move(partitions)),
      phi_(std::move(phi)),
      not_phi_(std::move(not_phi)) {
  const std::size_t m = worlds_.size();
  if (m == 0) throw ModelError("model has no worlds");
  if (agents_.empty()) throw ModelError("model has no agents");
  if (partitions_.size() != agents_.size())
    throw ModelError("need exactly one partition per agent");
  if (std::set<std::string>(agents_.begin(), agents_.end()).size() != agents_.size())
    throw ModelError("duplicate agent label");
  if (std::set<std::string>(worlds_.begin(), worlds_.end()).size() != m)
    throw ModelError("duplicate world label");

  cell_index_.assign(agents_.size(), std::vector<std::size_t>(m, 0));
  for (AgentId a = 0; a < agents_.size(); ++a) {
    std::vector<int> covered(m, 0);
    for (std::size_t c = 0; c < partitions_[a].size(); ++c) {
      const WorldSet& cell = partitions_[a][c];
      if (cell.universe() != m)
        throw ModelError("partition cell of '" + agents_[a] + "' has the wrong universe");
      if (cell.empty()) throw ModelError("partition of '" + agents_[a] + "' has an empty cell");
      for (WorldId w : cell.members()) {
        if (covered[w]++)
          throw ModelError("partition of '" + agents_[a] + "' is not disjoint at " + worlds_[w]);
        cell_index_[a][w] = c;
      }
    }
    for (WorldId w = 0; w < m; ++w)
      if (!covered[w])
        throw ModelError("partition of '" + agents_[a] + "' does not cover " + worlds_[w]);
  }

  if (phi_.universe() != m || not_phi_.universe() != m)
    throw ModelError("atom extension has the wrong universe");
  if (phi_.intersects(not_phi_)) throw ModelError("phi and not-phi extensions overlap");
}

std::optional<AgentId> WorldModel::find_agent(std::string_view label) const {
  for (AgentId a = 0; a < agents_.size(); ++a)
    if (agents_[a] == label) return a;
  return std::nullopt;
}

std::optional<WorldId> WorldModel::find_world(std::string_view label) const {
  for (WorldId w = 0; w < worlds_.size(); ++w)
    if (worlds_[w] == label) return w;
  return std::nullopt;
}

AgentId WorldModel::agent(std::string_view label) const {
  if (auto a = find_agent(label)) return *a;
  throw LookupError("unknown agent '" + std::string(label) + "'");
}

WorldId WorldModel::world(std::string_view label) const {
  if (auto w = find_world(label)) return *w;
  throw LookupError("unknown world '" + std::string(label) + "'");
}

void WorldModel::check_agent(AgentId agent) const {
  if (agent >= agents_.size()) throw LookupError("unknown agent index " + std::to_string(agent));
}

void WorldModel::check_world(WorldId w) const {
  if (w >= worlds_.size()) throw LookupError("unknown world index " + std::to_string(w));
}

const std::vector<WorldSet>& WorldModel::partition(AgentId agent) const {
  check_agent(agent);
  return partitions_[agent];
}

const WorldSet& WorldModel::cell(AgentId agent, WorldId w) const {
  check_agent(agent);
  check_world(w);
  return partitions_[agent][cell_index_[agent][w]];
}

std::string WorldModel::format(const WorldSet& set) const {
  std::string out = "{";
  bool first = true;
  for (WorldId w : set.members()) {
    if (!first) out += ',';
    out += worlds_.at(w);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Pooling

WorldSet PooledModel::all_q() const {
  WorldSet s = model.all_worlds();
  for (const auto& j : judgments) s = s & j.first.extension;
  return s;
}

WorldSet PooledModel::all_not_q() const {
  WorldSet s = model.all_worlds();
  for (const auto& j : judgments) s = s & j.second.extension;
  return s;
}

PooledModel pool_states(const SoritesSeries& series) {
  const std::size_t lo = series.min_flip();
  const std::size_t hi = series.max_flip();
  const std::size_t n = series.size();

  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> members;
  auto add_range = [&](std::string name, std::size_t first, std::size_t last) {
    if (first > last) return;
    std::vector<std::size_t> states;
    for (std::size_t t = first; t <= last; ++t) states.push_back(t);
    names.push_back(std::move(name));
    members.push_back(std::move(states));
  };
  add_range("w1", 1, lo - 1);
  add_range("w2", lo, hi);
  add_range("w3", hi + 1, n);

  const std::size_t m = names.size();
  const std::size_t k = series.agent_count();

  // Judgment vector of each uber-state, read at its first member.
  std::vector<std::vector<Judgment>> vectors;
  for (const auto& states : members) vectors.push_back(series.judgment_vector(states.front()));

  std::vector<std::string> agents;
  std::vector<std::vector<WorldSet>> partitions;
  std::vector<std::pair<JudgmentProposition, JudgmentProposition>> judgments;
  for (AgentId a = 0; a < k; ++a) {
    agents.push_back(series.flips()[a].agent);
    JudgmentProposition yes{a, Judgment::q, WorldSet(m)};
    JudgmentProposition no{a, Judgment::not_q, WorldSet(m)};
    for (WorldId w = 0; w < m; ++w)
      (vectors[w][a] == Judgment::q ? yes : no).extension.insert(w);
    std::vector<WorldSet> cells;
    if (!yes.extension.empty()) cells.push_back(yes.extension);
    if (!no.extension.empty()) cells.push_back(no.extension);
    partitions.push_back(std::move(cells));
    judgments.emplace_back(std::move(yes), std::move(no));
  }

  WorldSet phi(m), not_phi(m);
  for (WorldId w = 0; w < m; ++w) {
    const auto& v = vectors[w];
    if (std::all_of(v.begin(), v.end(), [](Judgment j) { return j == Judgment::q; }))
      phi.insert(w);
    else if (std::all_of(v.begin(), v.end(), [](Judgment j) { return j == Judgment::not_q; }))
      not_phi.insert(w);
  }

  return PooledModel{
      WorldModel(std::move(agents), std::move(names), std::move(partitions), std::move(phi),
                 std::move(not_phi)),
      std::move(members), std::move(judgments)};
}

PooledModel canonical_model() {
  return pool_states(build_forced_march(5, {{"S", 4}, {"L", 2}}));
}

// ---------------------------------------------------------------------------
// Doxastic operators

bool thinks(const WorldModel& model, AgentId agent, const WorldSet& prop, WorldId w) {
  return model.cell(agent, w).subset_of(prop);
}

WorldSet everyone_thinks(const WorldModel& model, const WorldSet& prop,
                         const WorldSet& restriction) {
  WorldSet out(model.world_count());
  for (WorldId w : restriction.members()) {
    bool all = true;
    for (AgentId a = 0; a < model.agent_count() && all; ++a)
      all = (model.cell(a, w) & restriction).subset_of(prop);
    if (all) out.insert(w);
  }
  return out;
}

WorldSet common_belief(const WorldModel& model, const WorldSet& prop,
                       const WorldSet& restriction) {
  WorldSet current = prop & restriction;
  for (;;) {
    WorldSet next = everyone_thinks(model, current, restriction) & current;
    if (next == current) return current;
    current = std::move(next);
  }
}

bool accessible(const WorldModel& model, WorldId w, WorldId w2) {
  for (AgentId a = 0; a < model.agent_count(); ++a)
    if (model.cell(a, w).contains(w2)) return true;
  return false;
}

}  // namespace hedgesim
