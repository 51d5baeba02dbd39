#pragma once

// Common-ground dynamics: assertion as elimination of worlds, the speaker's
// choice of a truthful signal and the listener's Bayesian reading of it.

#include <memory>
#include <optional>
#include <vector>

#include "hedgesim/semantics.hpp"
#include "hedgesim/worlds.hpp"

namespace hedgesim {

/// Probability per world of the model, indexed by WorldId.
using WorldDistribution = std::vector<double>;

/// The worlds still treated as live after `time` assertions.
class CommonGround {
 public:
  /// cg(0): every world of the model is live.
  static CommonGround initial(std::shared_ptr<const WorldModel> model);

  /// Throws ModelError if `live` is empty or over the wrong universe.
  CommonGround(std::shared_ptr<const WorldModel> model, std::size_t time, WorldSet live);

  const WorldModel& model() const noexcept { return *model_; }
  const std::shared_ptr<const WorldModel>& model_ptr() const noexcept { return model_; }
  std::size_t time() const noexcept { return time_; }
  const WorldSet& live() const noexcept { return live_; }

  friend bool operator==(const CommonGround& a, const CommonGround& b) {
    return a.model_ == b.model_ && a.time_ == b.time_ && a.live_ == b.live_;
  }

 private:
  std::shared_ptr<const WorldModel> model_;
  std::size_t time_;
  WorldSet live_;
};

/// Uniform over live worlds, zero elsewhere.
WorldDistribution base_rate(const CommonGround& cg);

/// live' = live & extension(f), time + 1. Throws AbsurdUpdate when the
/// intersection is empty.
CommonGround update(const CommonGround& cg, Formula f);

/// Strongest formula (phi > not phi > might phi > might not phi) that is true
/// at every world of the speaker's cell at `w`. Throws ModelError if none is.
Formula speaker_signal(const WorldModel& model, AgentId speaker, WorldId w);

/// The signal the listener expects at `w`: the atom that is true at `w` when
/// there is one (the speaker would then be in a position to assert it),
/// otherwise speaker_signal.
Formula expected_signal(const WorldModel& model, AgentId speaker, WorldId w);

/// Signal a speaker sends when only phi / not phi are available: phi iff the
/// speaker judges q at `w`.
Formula bare_signal(const PooledModel& pooled, AgentId speaker, WorldId w);

/// p(signal | world) for the signals a truthful speaker could send somewhere
/// in a common ground.
class SignalLikelihoods {
 public:
  SignalLikelihoods(std::size_t world_count, std::vector<Formula> signals, double epsilon);

  const std::vector<Formula>& signals() const noexcept { return signals_; }
  double epsilon() const noexcept { return epsilon_; }

  /// 0 for signals outside signals().
  double operator()(Formula signal, WorldId w) const;
  void set(Formula signal, WorldId w, double p);

 private:
  std::optional<std::size_t> index(Formula signal) const;

  std::size_t world_count_;
  std::vector<Formula> signals_;
  double epsilon_;
  std::vector<std::vector<double>> table_;  // [signal][world]
};

/// Likelihood rows over the live worlds of `cg`. The available signals are
/// the expected signals of the live worlds, strongest first. Each row puts
/// 1 - epsilon on the world's expected signal and splits epsilon evenly over
/// the other available signals (a single available signal gets 1).
SignalLikelihoods truthful_likelihoods(const CommonGround& cg, AgentId speaker, double epsilon);

/// Bayes rule with prior base_rate(cg). Throws UnexpectedSignal when the
/// observed signal has zero marginal probability.
WorldDistribution listener_posterior(const CommonGround& cg, Formula observed,
                                     const SignalLikelihoods& lik);

}  // namespace hedgesim
