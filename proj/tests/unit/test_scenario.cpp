#include "doctest.h"

#include <random>

#include "hedgesim/errors.hpp"
#include "hedgesim/numfmt.hpp"
#include "hedgesim/scenario.hpp"

using namespace hedgesim;

namespace {

const char* kCanonical = R"(
[series]
n = 5
flip.S = 4
flip.L = 2
[game]
delta = 0.7
gamma = 0.2
[run]
speaker = S
world = w2
)";

std::string with_game(const std::string& game_lines, const std::string& run = "speaker = S\nworld = w2\n") {
  return "[series]\ncanonical = true\n[game]\n" + game_lines + "[run]\n" + run;
}

}  // namespace

TEST_CASE("parses the canonical scenario with defaults") {
  const Scenario s = parse_scenario(kCanonical);
  CHECK_FALSE(s.series.canonical);
  CHECK(s.series.n == 5);
  REQUIRE(s.series.flips.size() == 2);
  CHECK(s.series.flips[0].agent == "S");
  CHECK(s.series.flips[0].index == 4);
  CHECK(s.game.delta == 0.7);
  CHECK(s.game.gamma == 0.2);
  CHECK(s.game.tau == 0.5);
  CHECK(s.game.epsilon == 0.01);
  CHECK(s.run.steps == 50);
  CHECK(s.run.tolerance == 1e-6);
  CHECK(s.run.speaker == "S");
  CHECK(s.run.world == "w2");
  CHECK(s.agent_for(Player::late_flipper) == "S");
  CHECK(s.role_of("L") == Player::early_flipper);
}

TEST_CASE("comments, blank lines and spacing") {
  const Scenario s = parse_scenario(
      "# header\n\n  [series]  \ncanonical=true # inline\n[game]\ndelta=+0.25\ngamma =0\r\n"
      "payoff.S.aa = 2\n[run]\nspeaker= L\nworld =w1\nsteps = 8\ntolerance = 1e-3\n");
  CHECK(s.series.canonical);
  CHECK(s.game.delta == 0.25);
  CHECK(s.run.steps == 8);
  REQUIRE(s.game.payoffs.size() == 1);
  CHECK(s.game.payoffs[0] == PayoffEntry{"S", Action::a, Action::a, 2.0});
  CHECK(s.game_config().payoffs()(Player::late_flipper, Action::a, Action::a) == 2.0);
}

TEST_CASE("missing required keys name the key") {
  try {
    parse_scenario("[series]\ncanonical = true\n[game]\n[run]\nspeaker = S\nworld = w2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("delta") != std::string::npos);
  }
  CHECK_THROWS_WITH_AS(parse_scenario(with_game("delta = 0.5\n")), doctest::Contains("gamma"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_scenario(with_game("delta = 0.5\ngamma = 0\n", "world = w1\n")),
                       doctest::Contains("speaker"), ParseError);
  CHECK_THROWS_WITH_AS(parse_scenario("[game]\ndelta=0.5\ngamma=0\n[run]\nspeaker=S\nworld=w1\n"),
                       doctest::Contains("'n'"), ParseError);
}

TEST_CASE("range errors name the key") {
  auto key_of = [](const std::string& text) {
    try {
      parse_scenario(text);
    } catch (const RangeError& e) {
      return e.key();
    }
    return std::string("<none>");
  };
  CHECK(key_of(with_game("delta = 0.5\ngamma = 1.0\n")) == "gamma");
  CHECK(key_of(with_game("delta = 1\ngamma = 0\n")) == "delta");
  CHECK(key_of(with_game("delta = 0.5\ngamma = 0\ntau = 1\n")) == "tau");
  CHECK(key_of(with_game("delta = 0.5\ngamma = 0\nepsilon = 0.5\n")) == "epsilon");
  CHECK(key_of(with_game("delta = 0.5\ngamma = 0\nhesitation = 0\n")) == "hesitation");
  CHECK(key_of(with_game("delta = 0.5\ngamma = 0\npayoff.S.ab = -1\n")) == "payoff.S.ab");
  CHECK(key_of(with_game("delta = 0.5\ngamma = 0\npayoff.Q.ab = 1\n")) == "payoff.Q.ab");
  CHECK(key_of(with_game("delta = 0.5\ngamma = 0\n", "speaker = Q\nworld = w1\n")) == "speaker");
  CHECK(key_of(with_game("delta = 0.5\ngamma = 0\n", "speaker = S\nworld = w9\n")) == "world");
  CHECK(key_of(with_game("delta = 0.5\ngamma = 0\n", "speaker = S\nworld = w1\nsteps = 3\n")) == "steps");
  CHECK(key_of(with_game("delta = 0.5\ngamma = 0\n", "speaker = S\nworld = w1\ntolerance = 0\n")) ==
        "tolerance");
  CHECK(key_of("[series]\nn = 2\nflip.S = 2\nflip.L = 2\n[game]\ndelta=0.5\ngamma=0\n[run]\nspeaker=S\nworld=w1\n") == "n");
  CHECK(key_of("[series]\nn = 5\nflip.S = 6\nflip.L = 2\n[game]\ndelta=0.5\ngamma=0\n[run]\nspeaker=S\nworld=w1\n") == "flip.S");
  CHECK(key_of("[series]\nn = 5\nflip.S = 3\n[game]\ndelta=0.5\ngamma=0\n[run]\nspeaker=S\nworld=w1\n") == "series");
  // With the latest flip at t_n there is no w3.
  CHECK(key_of("[series]\nn = 5\nflip.S = 5\nflip.L = 2\n[game]\ndelta=0.5\ngamma=0\n[run]\nspeaker=S\nworld=w3\n") == "world");
}

TEST_CASE("syntax errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_scenario(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 999;
  };
  CHECK(line_of("[series]\ncanonical = true\n[bogus]\n") == 3);
  CHECK(line_of("[series]\ncanonical = true\n[game\n") == 3);
  CHECK(line_of("delta = 0.5\n") == 1);
  CHECK(line_of("[series]\ncanonical\n") == 2);
  CHECK(line_of("[series]\ncanonical = maybe\n") == 2);
  CHECK(line_of("[series]\nn = five\n") == 2);
  CHECK(line_of("[series]\nn = -5\n") == 2);
  CHECK(line_of("[series]\ncolour = red\n") == 2);
  CHECK(line_of("[series]\nn = 5\nn = 6\n") == 3);
  CHECK(line_of("[series]\ncanonical = true\n[game]\ndelta = 0.5x\n") == 4);
  CHECK(line_of("[series]\ncanonical = true\n[game]\ndelta = nan\n") == 4);
  CHECK(line_of("[series]\ncanonical = true\n[game]\npayoff.S.ac = 1\n") == 4);
  CHECK(line_of("[series]\ncanonical = true\n[game]\ndelta =\n") == 4);
  CHECK(line_of("[series]\ncanonical = true\n[series]\n") == 3);
  CHECK(line_of("[series]\nflip.S S = 3\n") == 2);
  CHECK(line_of("[series]\ncanonical = true\nn = 5\n[game]\ndelta=0.5\ngamma=0\n[run]\nspeaker=S\nworld=w1\n") == 0);
}

TEST_CASE("render and re-parse is the identity") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> unit(1e-9, 1.0 - 1e-9);
  std::uniform_int_distribution<std::size_t> n_dist(3, 60);
  for (int trial = 0; trial < 300; ++trial) {
    Scenario s;
    if (trial % 3 == 0) {
      s.series.canonical = true;
    } else {
      s.series.n = n_dist(rng);
      std::uniform_int_distribution<std::size_t> flip(2, s.series.n - 1);
      s.series.flips = {{"Shiv", flip(rng)}, {"Logan_2", flip(rng)}};
    }
    s.game.delta = unit(rng);
    s.game.gamma = unit(rng);
    s.game.tau = unit(rng);
    s.game.epsilon = unit(rng) * 0.49;
    s.game.hesitation = unit(rng);
    if (trial % 2)
      s.game.payoffs.push_back({s.series.canonical ? "L" : "Logan_2", Action::b, Action::a, unit(rng) * 3});
    s.run.speaker = s.series.canonical ? "S" : "Shiv";
    s.run.world = trial % 4 == 0 ? "w1" : "w2";
    s.run.steps = 4 + trial;
    s.run.tolerance = unit(rng) * 1e-3;
    const std::string text = render_scenario(s);
    const Scenario back = parse_scenario(text);
    CHECK(back == s);
    CHECK(render_scenario(back) == text);
  }
}

TEST_CASE("run_scenario: hedge at the borderline world") {
  const RunReport r = run_scenario(parse_scenario(kCanonical));
  const WorldModel& m = r.model();
  CHECK(r.signal == Formula::might_phi());
  REQUIRE(r.dialogue.size() == 2);
  CHECK(m.format(r.dialogue[0].live) == "{w1,w2,w3}");
  CHECK(m.format(r.dialogue[1].live) == "{w1,w2}");
  CHECK(std::abs(r.dialogue[1].posterior[m.world("w2")] - 0.99) <= 1e-12);
  CHECK_FALSE(r.public_not_q);
  CHECK_FALSE(r.public_q);
  CHECK(r.equilibrium.region == Region::AA);
  CHECK(r.hedging.summary.even_tail == doctest::Approx(0.5916).epsilon(1e-3));
  CHECK(audit(r).empty());
}

TEST_CASE("run_scenario: not-phi from w3 becomes public") {
  Scenario s = parse_scenario(kCanonical);
  s.run.world = "w3";
  const RunReport r = run_scenario(s);
  const WorldModel& m = r.model();
  CHECK(r.signal == Formula::not_phi());
  CHECK(m.format(r.dialogue[1].live) == "{w3}");
  CHECK(r.dialogue[1].posterior[m.world("w3")] == 1.0);
  CHECK(r.public_not_q);
  CHECK(audit(r).empty());
}

TEST_CASE("run_scenario: the listener at w1 asserts phi") {
  Scenario s = parse_scenario(kCanonical);
  s.run.world = "w1";
  s.run.speaker = "L";
  const RunReport r = run_scenario(s);
  CHECK(r.signal == Formula::phi());
  CHECK(r.model().format(r.dialogue[1].live) == "{w1}");
  CHECK(r.public_q);
  CHECK(audit(r).empty());
}

TEST_CASE("audit catches tampered reports") {
  RunReport r = run_scenario(parse_scenario(kCanonical));
  r.dialogue[1].posterior[r.model().world("w3")] = 0.5;
  r.signal = Formula::not_phi();
  CHECK(audit(r).size() >= 2);
}
