#include "hedgesim/game.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "hedgesim/errors.hpp"

namespace hedgesim {

std::string to_string(Action a) { return a == Action::a ? "a" : "b"; }

std::string to_string(Player p) {
  return p == Player::late_flipper ? "late_flipper" : "early_flipper";
}

std::string to_string(Region r) {
  switch (r) {
    case Region::AA: return "AA";
    case Region::BB: return "BB";
    case Region::None: return "None";
  }
  return "None";
}

PayoffMatrix PayoffMatrix::coordination() {
  PayoffMatrix m;
  for (Player p : {Player::late_flipper, Player::early_flipper}) {
    m.set(p, Action::a, Action::a, 1.0);
    m.set(p, Action::b, Action::b, 1.0);
    m.set(p, Action::a, Action::b, 0.0);
    m.set(p, Action::b, Action::a, 0.0);
  }
  return m;
}

void PayoffMatrix::set(Player p, Action own, Action other, double value) {
  u_[index(p)][index(own)][index(other)] = value;
}

GameConfig::GameConfig(double delta, double gamma, double tau, double epsilon,
                       PayoffMatrix payoffs, double hesitation)
    : delta_(delta),
      gamma_(gamma),
      tau_(tau),
      epsilon_(epsilon),
      payoffs_(payoffs),
      hesitation_(hesitation) {
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
  if (!(gamma >= 0.0 && gamma < 1.0)) throw ConfigError("gamma must lie in [0, 1)");
  if (!(tau > 0.0 && tau < 1.0)) throw ConfigError("tau must lie in (0, 1)");
  if (!(epsilon >= 0.0 && epsilon < 0.5)) throw ConfigError("epsilon must lie in [0, 0.5)");
  if (!(hesitation > 0.0 && hesitation <= 1.0))
    throw ConfigError("hesitation must lie in (0, 1]");
  for (Player p : {Player::late_flipper, Player::early_flipper})
    for (Action x : {Action::a, Action::b})
      for (Action y : {Action::a, Action::b}) {
        double v = payoffs(p, x, y);
        if (!std::isfinite(v) || v < 0.0) throw ConfigError("payoffs must be finite and >= 0");
      }
}

WorldPrior world_priors(const GameConfig& config) {
  const double d = config.delta();
  const double g = config.gamma();
  return WorldPrior{{d * (1.0 - g), g, (1.0 - d) * (1.0 - g)}};
}

double expected_utility(const GameConfig& config, Player player, Action action) {
  const WorldPrior prior = world_priors(config);
  // Joint judgment events; the profile (not q_S, q_L) has no world.
  const double both_q = prior.p[0];
  const double late_q_early_not = prior.p[1];
  const double both_not = prior.p[2];
  const double late_not_early_q = 0.0;

  const PayoffMatrix& u = config.payoffs();
  const Action other_action = action == Action::a ? Action::b : Action::a;

  double agree = 0;     // p(own judgment & other's matches)
  double disagree = 0;  // p(own judgment & other's differs)
  if (action == Action::a) {
    agree = both_q;
    disagree = player == Player::late_flipper ? late_q_early_not : late_not_early_q;
  } else {
    agree = both_not;
    disagree = player == Player::late_flipper ? late_not_early_q : late_q_early_not;
  }
  return agree * u(player, action, action) + disagree * u(player, action, other_action);
}

double brute_force_eu(const GameConfig& config, Player player, Action action) {
  const WorldPrior prior = world_priors(config);
  double total = 0.0;
  for (std::size_t w = 0; w < 3; ++w) {
    // late flipper judges q at w1 and w2; early flipper only at w1
    const bool late_q = w <= 1;
    const bool early_q = w == 0;
    const Action late_act = late_q ? Action::a : Action::b;
    const Action early_act = early_q ? Action::a : Action::b;
    const Action own = player == Player::late_flipper ? late_act : early_act;
    const Action theirs = player == Player::late_flipper ? early_act : late_act;
    if (own != action) continue;
    total += prior.p[w] * config.payoffs()(player, own, theirs);
  }
  return total;
}

double conditional_q_given_late_q(const GameConfig& config) {
  const WorldPrior prior = world_priors(config);
  return prior.p[0] / (prior.p[0] + prior.p[1]);
}

EquilibriumReport equilibrium_region(const GameConfig& config) {
  const double d = config.delta();
  const double g = config.gamma();
  const double tau = config.tau();
  EquilibriumReport r;
  r.eu_a = expected_utility(config, Player::late_flipper, Action::a);
  r.eu_b = expected_utility(config, Player::late_flipper, Action::b);
  r.gamma_bound_a = 1.0 - tau / d;
  r.gamma_bound_b = 1.0 - tau / (1.0 - d);
  if (d > 1.0 - d && d * (1.0 - g) > tau)
    r.region = Region::AA;
  else if (1.0 - d > d && (1.0 - d) * (1.0 - g) > tau)
    r.region = Region::BB;
  return r;
}

std::vector<double> interior_grid(std::size_t k) {
  std::vector<double> grid;
  grid.reserve(k);
  for (std::size_t i = 1; i <= k; ++i)
    grid.push_back(static_cast<double>(i) / static_cast<double>(k + 1));
  return grid;
}

namespace {

SweepRow sweep_cell(double delta, double gamma, double tau) {
  const GameConfig config(delta, gamma, tau);
  const EquilibriumReport eq = equilibrium_region(config);
  SweepRow row;
  row.delta = delta;
  row.gamma = gamma;
  row.prior = world_priors(config);
  row.eu_a = eq.eu_a;
  row.eu_b = eq.eu_b;
  row.conditional = conditional_q_given_late_q(config);
  row.region = eq.region;
  return row;
}

}  // namespace

std::vector<SweepRow> threshold_sweep(const std::vector<double>& delta_grid,
                                      const std::vector<double>& gamma_grid, double tau,
                                      unsigned threads) {
  // Validate every grid value up front so worker threads never throw.
  for (double d : delta_grid) GameConfig(d, 0.0, tau);
  for (double g : gamma_grid) GameConfig(0.5, g, tau);

  const std::size_t cols = gamma_grid.size();
  const std::size_t cells = delta_grid.size() * cols;
  std::vector<SweepRow> rows(cells);
  if (cells == 0) return rows;

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, delta_grid.size()));

  auto work = [&](std::size_t first_row, std::size_t stride) {
    for (std::size_t i = first_row; i < delta_grid.size(); i += stride)
      for (std::size_t j = 0; j < cols; ++j)
        rows[i * cols + j] = sweep_cell(delta_grid[i], gamma_grid[j], tau);
  };

  if (threads <= 1) {
    work(0, 1);
    return rows;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  pool.clear();  // joins
  return rows;
}

}  // namespace hedgesim
