#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library code path they check.

#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracle {

// Hedging recurrence values computed once at 60 significant digits
// (mpmath) and frozen here.
inline constexpr double fa2 = 0.666666666666666666666666666667;
inline constexpr double fa3 = 0.428571428571428571428571428571;
inline constexpr double fa4 = 0.608695652173913043478260869565;
inline constexpr double fa5 = 0.413173652694610778443113772455;
inline constexpr double fa10 = 0.591830533436393;
inline constexpr double fa11 = 0.408473161039517;
inline constexpr double fa_even_limit = 0.591593623481763;
inline constexpr double fa_odd_limit = 0.408406376518237;

/// The recurrence iterated in long double over a full table.
inline std::vector<long double> recurrence_table(std::size_t count, long double hesitation = 0.5L) {
  std::vector<long double> f(count);
  for (std::size_t n = 0; n < count; ++n)
    f[n] = n == 0 ? 1.0L : n == 1 ? hesitation : f[n - 2] / (f[n - 1] + f[n - 2]);
  return f;
}

/// Pooled-world label ("w1", "w2", "w3") of forced-march state t under the
/// closed-interval rule, straight from the set definitions.
inline std::string uber_state_of(std::size_t t, std::size_t min_flip, std::size_t max_flip) {
  if (t < min_flip) return "w1";
  if (t <= max_flip) return "w2";
  return "w3";
}

/// Judgment vector at state t: true = q.
inline std::vector<bool> judgments_at(std::size_t t, const std::vector<std::size_t>& flips) {
  std::vector<bool> v;
  for (std::size_t f : flips) v.push_back(t < f);
  return v;
}

/// Hand-rolled generator of forced marches: n in [3, max_n], agents in
/// [min_agents, max_agents], flips uniform in [2, n].
struct MarchSpec {
  std::size_t n;
  std::vector<std::size_t> flips;
};

inline MarchSpec random_march(std::mt19937& rng, std::size_t max_n, std::size_t min_agents,
                              std::size_t max_agents) {
  std::uniform_int_distribution<std::size_t> n_dist(3, max_n);
  std::uniform_int_distribution<std::size_t> k_dist(min_agents, max_agents);
  MarchSpec spec{n_dist(rng), {}};
  std::uniform_int_distribution<std::size_t> flip_dist(2, spec.n);
  const std::size_t k = k_dist(rng);
  for (std::size_t i = 0; i < k; ++i) spec.flips.push_back(flip_dist(rng));
  return spec;
}

}  // namespace oracle
