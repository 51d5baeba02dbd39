#include "hedgesim/hedging.hpp"

#include <cmath>
#include <limits>

#include "hedgesim/errors.hpp"

namespace hedgesim {

std::vector<double> hedge_sequence(std::size_t count, double hesitation) {
  std::vector<double> f;
  f.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    if (n == 0)
      f.push_back(1.0);
    else if (n == 1)
      f.push_back(hesitation);
    else
      f.push_back(f[n - 2] / (f[n - 1] + f[n - 2]));
  }
  return f;
}

double hedge_recurrence(std::size_t n, double hesitation) {
  double older = 1.0;
  double newer = hesitation;
  if (n == 0) return older;
  for (std::size_t i = 2; i <= n; ++i) {
    const double next = older / (newer + older);
    older = newer;
    newer = next;
  }
  return newer;
}

Propensities propensities_at_step(std::size_t n, double hesitation) {
  if (n == 0) return {1.0, 0.0};
  const std::size_t even = n % 2 == 0 ? n : n - 1;
  const std::size_t odd = n % 2 == 1 ? n : n - 1;
  return {hedge_recurrence(even, hesitation), hedge_recurrence(odd, hesitation)};
}

double stepwise_eu(const GameConfig& config, Player player, std::size_t n, Action action) {
  const Propensities p = propensities_at_step(n, config.hesitation());
  const double joint = action == Action::a ? p.speaker_a * p.listener_a
                                           : p.speaker_b() * p.listener_b();
  return expected_utility(config, player, action) +
         config.gamma() * joint * config.payoffs()(player, action, action);
}

HedgingTrace run_hedging(const GameConfig& config, std::size_t max_steps, double tolerance,
                         Player player) {
  if (max_steps < 4) throw ConfigError("hedging needs at least 4 steps");

  HedgingTrace trace{config, player, tolerance, {}, {}};
  trace.steps.reserve(max_steps + 1);
  for (std::size_t n = 0; n <= max_steps; ++n) {
    const Propensities p = propensities_at_step(n, config.hesitation());
    trace.steps.push_back({n, p.speaker_a, p.listener_a, stepwise_eu(config, player, n, Action::a),
                           stepwise_eu(config, player, n, Action::b)});
  }

  const std::vector<double> f = hedge_sequence(max_steps + 1, config.hesitation());
  HedgingSummary& s = trace.summary;
  s.even_tail = f[max_steps % 2 == 0 ? max_steps : max_steps - 1];
  s.odd_tail = f[max_steps % 2 == 1 ? max_steps : max_steps - 1];
  s.last_pair_sum = f[max_steps - 1] + f[max_steps];
  s.pair_sum_converged = std::abs(s.last_pair_sum - 1.0) <= tolerance;

  // Sums settle at 1 up to rounding; allow a few ulps of slack.
  const double slack = 4 * std::numeric_limits<double>::epsilon();
  s.pair_sums_monotone = true;
  for (std::size_t n = 2; n + 1 <= max_steps; ++n) {
    const double sum = f[n] + f[n + 1];
    if (sum < 1.0 - slack) s.pair_sums_monotone = false;
    if (n + 2 <= max_steps && f[n + 1] + f[n + 2] > sum + slack) s.pair_sums_monotone = false;
  }

  s.eu_dominates_step0 = true;
  const HedgingStep& first = trace.steps.front();
  for (const HedgingStep& step : trace.steps)
    if (step.eu_a < first.eu_a || step.eu_b < first.eu_b) s.eu_dominates_step0 = false;
  return trace;
}

}  // namespace hedgesim
