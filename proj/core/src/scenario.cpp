#include "hedgesim/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "hedgesim/errors.hpp"
#include "hedgesim/numfmt.hpp"

namespace hedgesim {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text, std::size_t line, const std::string& key) {
  double value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value))
    throw ParseError(line, "'" + key + "' expects a number, got '" + std::string(text) + "'");
  return value;
}

std::size_t parse_count(std::string_view text, std::size_t line, const std::string& key) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(line,
                     "'" + key + "' expects a non-negative integer, got '" + std::string(text) + "'");
  return value;
}

bool parse_bool(std::string_view text, std::size_t line, const std::string& key) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw ParseError(line, "'" + key + "' expects true or false, got '" + std::string(text) + "'");
}

bool valid_label(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-';
  });
}

void require(bool ok, const std::string& key, const std::string& what) {
  if (!ok) throw RangeError(key, what);
}

void validate(const Scenario& s) {
  const auto& series = s.series;
  std::set<std::string> agents;
  if (series.canonical) {
    agents = {"S", "L"};
  } else {
    require(series.n >= 3, "n", "forced march needs at least 3 states");
    require(series.flips.size() == 2, "series", "the game needs exactly two agents");
    for (const auto& f : series.flips) {
      require(f.index >= 2 && f.index <= series.n, "flip." + f.agent,
              "flip must lie in [2, n]");
      agents.insert(f.agent);
    }
  }

  const auto& g = s.game;
  require(g.delta > 0 && g.delta < 1, "delta", "must lie in (0, 1)");
  require(g.gamma >= 0 && g.gamma < 1, "gamma", "must lie in [0, 1); gamma = 1 makes misalignment certain");
  require(g.tau > 0 && g.tau < 1, "tau", "must lie in (0, 1)");
  require(g.epsilon >= 0 && g.epsilon < 0.5, "epsilon", "must lie in [0, 0.5)");
  require(g.hesitation > 0 && g.hesitation <= 1, "hesitation", "must lie in (0, 1]");
  for (const auto& p : g.payoffs) {
    const std::string key = "payoff." + p.agent + "." + to_string(p.own) + to_string(p.other);
    require(agents.count(p.agent) != 0, key, "unknown agent '" + p.agent + "'");
    require(p.value >= 0, key, "payoffs must be non-negative");
  }

  require(agents.count(s.run.speaker) != 0, "speaker",
          "unknown agent '" + s.run.speaker + "'");
  require(s.run.steps >= 4, "steps", "hedging needs at least 4 steps");
  require(s.run.tolerance > 0, "tolerance", "must be positive");
  const PooledModel pooled = pool_states(s.forced_march());
  require(pooled.model.find_world(s.run.world).has_value(), "world",
          "no world '" + s.run.world + "' in the pooled model " +
              pooled.model.format(pooled.model.all_worlds()));
}

}  // namespace

SoritesSeries Scenario::forced_march() const {
  if (series.canonical) return build_forced_march(5, {{"S", 4}, {"L", 2}});
  return build_forced_march(series.n, series.flips);
}

std::string Scenario::agent_for(Player role) const {
  const SoritesSeries march = forced_march();
  const auto& f = march.flips();
  if (f.size() != 2) throw ModelError("the game needs exactly two agents");
  // Ties go to the first listed agent.
  const std::size_t late = f[1].index > f[0].index ? 1 : 0;
  return f[role == Player::late_flipper ? late : 1 - late].agent;
}

Player Scenario::role_of(std::string_view agent) const {
  if (agent_for(Player::late_flipper) == agent) return Player::late_flipper;
  if (agent_for(Player::early_flipper) == agent) return Player::early_flipper;
  throw LookupError("unknown agent '" + std::string(agent) + "'");
}

GameConfig Scenario::game_config() const {
  PayoffMatrix u = PayoffMatrix::coordination();
  for (const auto& p : game.payoffs) u.set(role_of(p.agent), p.own, p.other, p.value);
  return GameConfig(game.delta, game.gamma, game.tau, game.epsilon, u, game.hesitation);
}

Scenario parse_scenario(std::string_view text) {
  Scenario s;
  std::string section;
  std::set<std::string> seen;
  std::set<std::string> sections_seen;
  bool have_n = false;
  bool have_delta = false, have_gamma = false, have_speaker = false, have_world = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "series" && section != "game" && section != "run")
        throw ParseError(line_no, "unknown section [" + section + "]");
      if (!sections_seen.insert(section).second)
        throw ParseError(line_no, "duplicate section [" + section + "]");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "missing key before '='");
    if (value.empty()) throw ParseError(line_no, "missing value for '" + key + "'");
    if (section.empty()) throw ParseError(line_no, "'" + key + "' appears before any section");
    if (!seen.insert(section + "." + key).second)
      throw ParseError(line_no, "duplicate key '" + key + "'");

    if (section == "series") {
      if (key == "n") {
        s.series.n = parse_count(value, line_no, key);
        have_n = true;
      } else if (key == "canonical") {
        s.series.canonical = parse_bool(value, line_no, key);
      } else if (key.rfind("flip.", 0) == 0) {
        std::string agent = key.substr(5);
        if (!valid_label(agent)) throw ParseError(line_no, "bad agent label in '" + key + "'");
        s.series.flips.push_back({agent, parse_count(value, line_no, key)});
      } else {
        throw ParseError(line_no, "unknown key '" + key + "' in [series]");
      }
    } else if (section == "game") {
      if (key == "delta") {
        s.game.delta = parse_real(value, line_no, key);
        have_delta = true;
      } else if (key == "gamma") {
        s.game.gamma = parse_real(value, line_no, key);
        have_gamma = true;
      } else if (key == "tau") {
        s.game.tau = parse_real(value, line_no, key);
      } else if (key == "epsilon") {
        s.game.epsilon = parse_real(value, line_no, key);
      } else if (key == "hesitation") {
        s.game.hesitation = parse_real(value, line_no, key);
      } else if (key.rfind("payoff.", 0) == 0) {
        // payoff.<agent>.<own><other>
        const std::string rest = key.substr(7);
        const auto dot = rest.rfind('.');
        const std::string agent = dot == std::string::npos ? "" : rest.substr(0, dot);
        const std::string actions = dot == std::string::npos ? "" : rest.substr(dot + 1);
        const auto is_action = [](char c) { return c == 'a' || c == 'b'; };
        if (!valid_label(agent) || actions.size() != 2 || !is_action(actions[0]) ||
            !is_action(actions[1]))
          throw ParseError(line_no, "payoff keys look like 'payoff.<agent>.ab', got '" + key + "'");
        s.game.payoffs.push_back({agent, actions[0] == 'a' ? Action::a : Action::b,
                                  actions[1] == 'a' ? Action::a : Action::b,
                                  parse_real(value, line_no, key)});
      } else {
        throw ParseError(line_no, "unknown key '" + key + "' in [game]");
      }
    } else {
      if (key == "speaker") {
        if (!valid_label(value)) throw ParseError(line_no, "bad agent label '" + std::string(value) + "'");
        s.run.speaker = std::string(value);
        have_speaker = true;
      } else if (key == "world") {
        if (!valid_label(value)) throw ParseError(line_no, "bad world label '" + std::string(value) + "'");
        s.run.world = std::string(value);
        have_world = true;
      } else if (key == "steps") {
        s.run.steps = parse_count(value, line_no, key);
      } else if (key == "tolerance") {
        s.run.tolerance = parse_real(value, line_no, key);
      } else {
        throw ParseError(line_no, "unknown key '" + key + "' in [run]");
      }
    }
  }

  if (s.series.canonical && (have_n || !s.series.flips.empty()))
    throw ParseError(0, "[series]: 'canonical = true' excludes 'n' and 'flip.*'");
  if (!s.series.canonical) {
    if (!have_n) throw ParseError(0, "[series]: missing required key 'n'");
    if (s.series.flips.empty()) throw ParseError(0, "[series]: missing 'flip.<agent>' keys");
  }
  if (!have_delta) throw ParseError(0, "[game]: missing required key 'delta'");
  if (!have_gamma) throw ParseError(0, "[game]: missing required key 'gamma'");
  if (!have_speaker) throw ParseError(0, "[run]: missing required key 'speaker'");
  if (!have_world) throw ParseError(0, "[run]: missing required key 'world'");

  validate(s);
  return s;
}

std::string render_scenario(const Scenario& s) {
  std::ostringstream out;
  out << "[series]\n";
  if (s.series.canonical) {
    out << "canonical = true\n";
  } else {
    out << "n = " << s.series.n << "\n";
    for (const auto& f : s.series.flips) out << "flip." << f.agent << " = " << f.index << "\n";
  }
  out << "\n[game]\n";
  out << "delta = " << format_exact(s.game.delta) << "\n";
  out << "gamma = " << format_exact(s.game.gamma) << "\n";
  out << "tau = " << format_exact(s.game.tau) << "\n";
  out << "epsilon = " << format_exact(s.game.epsilon) << "\n";
  out << "hesitation = " << format_exact(s.game.hesitation) << "\n";
  for (const auto& p : s.game.payoffs)
    out << "payoff." << p.agent << "." << to_string(p.own) << to_string(p.other) << " = "
        << format_exact(p.value) << "\n";
  out << "\n[run]\n";
  out << "speaker = " << s.run.speaker << "\n";
  out << "world = " << s.run.world << "\n";
  out << "steps = " << s.run.steps << "\n";
  out << "tolerance = " << format_exact(s.run.tolerance) << "\n";
  return out.str();
}

RunReport run_scenario(const Scenario& s) {
  auto pooled = std::make_shared<const PooledModel>(pool_states(s.forced_march()));
  // Aliasing pointer: the common ground keeps the whole pooled model alive.
  std::shared_ptr<const WorldModel> model(pooled, &pooled->model);

  const AgentId speaker = model->agent(s.run.speaker);
  const WorldId actual = model->world(s.run.world);
  const GameConfig config = s.game_config();

  const CommonGround cg0 = CommonGround::initial(model);
  const Formula signal = speaker_signal(*model, speaker, actual);
  const CommonGround cg1 = update(cg0, signal);
  const SignalLikelihoods lik = truthful_likelihoods(cg1, speaker, config.epsilon());

  std::vector<DialogueStep> dialogue;
  dialogue.push_back({cg0.time(), std::nullopt, cg0.live(), base_rate(cg0)});
  dialogue.push_back({cg1.time(), signal, cg1.live(), listener_posterior(cg1, signal, lik)});

  const bool public_q = common_belief(*model, pooled->all_q(), cg1.live()).contains(actual);
  const bool public_not_q =
      common_belief(*model, pooled->all_not_q(), cg1.live()).contains(actual);

  return RunReport{s,
                   pooled,
                   speaker,
                   actual,
                   signal,
                   std::move(dialogue),
                   public_q,
                   public_not_q,
                   equilibrium_region(config),
                   run_hedging(config, s.run.steps, s.run.tolerance)};
}

std::vector<std::string> audit(const RunReport& r) {
  std::vector<std::string> problems;
  const WorldModel& m = r.model();
  if (evaluate(m, r.signal, r.actual) != TruthValue::true_)
    problems.push_back("signal '" + to_string(r.signal) + "' is not true at the actual world");
  for (std::size_t i = 1; i < r.dialogue.size(); ++i) {
    const DialogueStep& prev = r.dialogue[i - 1];
    const DialogueStep& step = r.dialogue[i];
    if (!step.live.subset_of(prev.live))
      problems.push_back("common ground grew at time " + std::to_string(step.time));
    if (step.signal && !step.live.subset_of(extension(m, *step.signal)))
      problems.push_back("a surviving world falsifies the signal at time " +
                         std::to_string(step.time));
  }
  for (const DialogueStep& step : r.dialogue) {
    double total = 0;
    for (WorldId w = 0; w < step.posterior.size(); ++w) {
      total += step.posterior[w];
      if (step.posterior[w] > 0 && !step.live.contains(w))
        problems.push_back("posterior mass outside the common ground at time " +
                           std::to_string(step.time));
    }
    if (std::abs(total - 1.0) > 1e-12)
      problems.push_back("posterior does not sum to 1 at time " + std::to_string(step.time));
  }
  return problems;
}

}  // namespace hedgesim
