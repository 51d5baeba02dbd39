#pragma once

// The two-player coordination game played over the pooled three-world model,
// its prior over worlds, expected utilities and the confidence-threshold
// classification of coordination equilibria.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace hedgesim {

enum class Action { a, b };

/// Roles in the two-agent pooled model. The late flipper judges q at the
/// borderline world w2 (it cannot tell w1 from w2); the early flipper judges
/// not-q there (it cannot tell w2 from w3).
enum class Player { late_flipper, early_flipper };

std::string to_string(Action a);
std::string to_string(Player p);

inline constexpr Player other(Player p) {
  return p == Player::late_flipper ? Player::early_flipper : Player::late_flipper;
}

/// u(player, own action, other's action).
class PayoffMatrix {
 public:
  /// Pure coordination: 1 for matching actions, 0 otherwise.
  static PayoffMatrix coordination();

  double operator()(Player p, Action own, Action other) const {
    return u_[index(p)][index(own)][index(other)];
  }
  void set(Player p, Action own, Action other, double value);

  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;

 private:
  static constexpr std::size_t index(Player p) { return p == Player::late_flipper ? 0 : 1; }
  static constexpr std::size_t index(Action a) { return a == Action::a ? 0 : 1; }

  std::array<std::array<std::array<double, 2>, 2>, 2> u_{};
};

/// Prior and decision parameters of one game. Construction validates ranges
/// and throws ConfigError:
///   delta in (0, 1), gamma in [0, 1), tau in (0, 1), epsilon in [0, 1/2),
///   hesitation in (0, 1], payoffs finite and non-negative.
class GameConfig {
 public:
  explicit GameConfig(double delta, double gamma, double tau = 0.5, double epsilon = 0.01,
                      PayoffMatrix payoffs = PayoffMatrix::coordination(),
                      double hesitation = 0.5);

  double delta() const noexcept { return delta_; }
  double gamma() const noexcept { return gamma_; }
  /// Probability mass two agents must jointly assign before acting.
  double tau() const noexcept { return tau_; }
  /// Likelihood a listener assigns to an unexpected signal.
  double epsilon() const noexcept { return epsilon_; }
  /// Listener's propensity for action a right after a hedge.
  double hesitation() const noexcept { return hesitation_; }
  const PayoffMatrix& payoffs() const noexcept { return payoffs_; }

  friend bool operator==(const GameConfig&, const GameConfig&) = default;

 private:
  double delta_;
  double gamma_;
  double tau_;
  double epsilon_;
  PayoffMatrix payoffs_;
  double hesitation_;
};

/// p(w1) = delta(1-gamma), p(w2) = gamma, p(w3) = (1-delta)(1-gamma).
struct WorldPrior {
  std::array<double, 3> p{};
  double sum() const noexcept { return p[0] + p[1] + p[2]; }
};

WorldPrior world_priors(const GameConfig& config);

/// Closed form: p(q_i & q_j) u_i(x,x) + p(q_i & not q_j) u_i(x,y), with the
/// joint judgment events read off the pooled model (q_S&q_L = w1,
/// q_S&not q_L = w2, not q_S & not q_L = w3).
double expected_utility(const GameConfig& config, Player player, Action action);

/// Enumerates the three worlds, derives each player's judgment and action
/// ("choose a iff you judge q") and accumulates prior-weighted payoffs.
/// Independent oracle for expected_utility.
double brute_force_eu(const GameConfig& config, Player player, Action action);

/// p(q_L | q_S) = delta(1-gamma) / (delta(1-gamma) + gamma).
double conditional_q_given_late_q(const GameConfig& config);

enum class Region { AA, BB, None };

std::string to_string(Region r);

struct EquilibriumReport {
  Region region = Region::None;
  double eu_a = 0;
  double eu_b = 0;
  /// gamma must stay below these for (a,a) resp. (b,b): 1 - tau/delta and
  /// 1 - tau/(1-delta).
  double gamma_bound_a = 0;
  double gamma_bound_b = 0;
};

/// AA iff delta > 1-delta and delta(1-gamma) > tau; BB iff 1-delta > delta
/// and (1-delta)(1-gamma) > tau; None otherwise.
EquilibriumReport equilibrium_region(const GameConfig& config);

struct SweepRow {
  double delta = 0;
  double gamma = 0;
  WorldPrior prior;
  double eu_a = 0;
  double eu_b = 0;
  double conditional = 0;  // p(q_L | q_S)
  Region region = Region::None;
};

/// {1/(k+1), ..., k/(k+1)}: k interior points of the unit interval.
std::vector<double> interior_grid(std::size_t k);

/// One row per (delta, gamma), delta-major, in grid order. Cells are
/// evaluated on up to `threads` worker threads (0 = hardware concurrency);
/// the output order does not depend on scheduling.
std::vector<SweepRow> threshold_sweep(const std::vector<double>& delta_grid,
                                      const std::vector<double>& gamma_grid, double tau,
                                      unsigned threads = 0);

}  // namespace hedgesim
