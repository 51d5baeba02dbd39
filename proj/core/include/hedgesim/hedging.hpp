#pragma once

// Iterated expectation building after a hedge ("might phi") at the
// borderline world: speaker and listener alternately renormalise their
// propensity for action a against the other's, and the expected utility of
// coordinating gains a correction proportional to the chance both pick the
// same action.

#include <cstddef>
#include <vector>

#include "hedgesim/game.hpp"

namespace hedgesim {

/// f(0) = 1, f(1) = hesitation, f(n) = f(n-2) / (f(n-1) + f(n-2)).
/// Even indices are the speaker's propensity for a, odd the listener's.
double hedge_recurrence(std::size_t n, double hesitation = 0.5);

/// f(0), ..., f(count-1).
std::vector<double> hedge_sequence(std::size_t count, double hesitation = 0.5);

struct Propensities {
  double speaker_a = 0;
  double listener_a = 0;
  double speaker_b() const noexcept { return 1.0 - speaker_a; }
  double listener_b() const noexcept { return 1.0 - listener_a; }
};

/// Step 0 is (1, 0): each acts on its own judgment. From step 1 on the
/// speaker holds f at the largest even index <= n and the listener f at the
/// largest odd index <= n.
Propensities propensities_at_step(std::size_t n, double hesitation = 0.5);

/// eu(x) + gamma * p_speaker(x) * p_listener(x) * u(x, x), with the b
/// propensities taken as complements of the a propensities.
double stepwise_eu(const GameConfig& config, Player player, std::size_t n, Action action);

struct HedgingStep {
  std::size_t n = 0;
  double p_speaker_a = 0;
  double p_listener_a = 0;
  double eu_a = 0;
  double eu_b = 0;
};

struct HedgingSummary {
  double even_tail = 0;  // f at the last even index reached
  double odd_tail = 0;   // f at the last odd index reached
  double last_pair_sum = 0;
  /// |f(N-1) + f(N) - 1| <= tolerance at the last step N.
  bool pair_sum_converged = false;
  /// f(n) + f(n+1) >= 1 and non-increasing over 2 <= n < N.
  bool pair_sums_monotone = false;
  /// eu at step 0 <= eu at every recorded step, both actions.
  bool eu_dominates_step0 = false;
};

struct HedgingTrace {
  GameConfig config;
  Player player;
  double tolerance;
  std::vector<HedgingStep> steps;  // n = 0 .. max_steps
  HedgingSummary summary;
};

/// Records steps 0..max_steps for `player` (the hedging speaker by default).
/// Throws ConfigError when max_steps < 4.
HedgingTrace run_hedging(const GameConfig& config, std::size_t max_steps, double tolerance,
                         Player player = Player::late_flipper);

}  // namespace hedgesim
