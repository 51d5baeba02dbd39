#include "hedgesim/assertion.hpp"

#include <algorithm>

#include "hedgesim/errors.hpp"

namespace hedgesim {

CommonGround CommonGround::initial(std::shared_ptr<const WorldModel> model) {
  if (!model) throw ModelError("common ground needs a model");
  WorldSet all = model->all_worlds();
  return CommonGround(std::move(model), 0, std::move(all));
}

CommonGround::CommonGround(std::shared_ptr<const WorldModel> model, std::size_t time,
                           WorldSet live)
    : model_(std::move(model)), time_(time), live_(std::move(live)) {
  if (!model_) throw ModelError("common ground needs a model");
  if (live_.universe() != model_->world_count())
    throw ModelError("common ground over the wrong universe");
  if (live_.empty()) throw ModelError("common ground must not be empty");
}

WorldDistribution base_rate(const CommonGround& cg) {
  WorldDistribution p(cg.model().world_count(), 0.0);
  const double share = 1.0 / static_cast<double>(cg.live().size());
  for (WorldId w : cg.live().members()) p[w] = share;
  return p;
}

CommonGround update(const CommonGround& cg, Formula f) {
  WorldSet next = cg.live() & extension(cg.model(), f);
  if (next.empty())
    throw AbsurdUpdate("asserting '" + to_string(f) + "' eliminates every world of " +
                       cg.model().format(cg.live()));
  return CommonGround(cg.model_ptr(), cg.time() + 1, std::move(next));
}

Formula speaker_signal(const WorldModel& model, AgentId speaker, WorldId w) {
  const WorldSet& cell = model.cell(speaker, w);
  for (Formula f : all_formulas)
    if (cell.subset_of(extension(model, f))) return f;
  throw ModelError("no formula is assertable by '" + model.agents().at(speaker) + "' at " +
                   model.worlds().at(w));
}

Formula expected_signal(const WorldModel& model, AgentId speaker, WorldId w) {
  for (Formula f : {Formula::phi(), Formula::not_phi()})
    if (evaluate(model, f, w) == TruthValue::true_) return f;
  return speaker_signal(model, speaker, w);
}

Formula bare_signal(const PooledModel& pooled, AgentId speaker, WorldId w) {
  return pooled.judges_q(speaker).contains(w) ? Formula::phi() : Formula::not_phi();
}

// ---------------------------------------------------------------------------

SignalLikelihoods::SignalLikelihoods(std::size_t world_count, std::vector<Formula> signals,
                                     double epsilon)
    : world_count_(world_count),
      signals_(std::move(signals)),
      epsilon_(epsilon),
      table_(signals_.size(), std::vector<double>(world_count, 0.0)) {}

std::optional<std::size_t> SignalLikelihoods::index(Formula signal) const {
  auto it = std::find(signals_.begin(), signals_.end(), signal);
  if (it == signals_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - signals_.begin());
}

double SignalLikelihoods::operator()(Formula signal, WorldId w) const {
  auto i = index(signal);
  if (!i || w >= world_count_) return 0.0;
  return table_[*i][w];
}

void SignalLikelihoods::set(Formula signal, WorldId w, double p) {
  auto i = index(signal);
  if (!i) throw LookupError("signal '" + to_string(signal) + "' is not available");
  if (w >= world_count_) throw LookupError("unknown world index " + std::to_string(w));
  table_[*i][w] = p;
}

SignalLikelihoods truthful_likelihoods(const CommonGround& cg, AgentId speaker, double epsilon) {
  const WorldModel& model = cg.model();
  std::vector<Formula> signals;
  for (WorldId w : cg.live().members()) {
    Formula f = expected_signal(model, speaker, w);
    if (std::find(signals.begin(), signals.end(), f) == signals.end()) signals.push_back(f);
  }
  std::sort(signals.begin(), signals.end(),
            [](Formula a, Formula b) { return a.strength_rank() < b.strength_rank(); });

  SignalLikelihoods lik(model.world_count(), signals, epsilon);
  const std::size_t k = signals.size();
  for (WorldId w : cg.live().members()) {
    const Formula expected = expected_signal(model, speaker, w);
    for (Formula f : signals) {
      double p = 1.0;
      if (k > 1) p = f == expected ? 1.0 - epsilon : epsilon / static_cast<double>(k - 1);
      lik.set(f, w, p);
    }
  }
  return lik;
}

WorldDistribution listener_posterior(const CommonGround& cg, Formula observed,
                                     const SignalLikelihoods& lik) {
  const WorldDistribution prior = base_rate(cg);
  WorldDistribution post(prior.size(), 0.0);
  double marginal = 0.0;
  for (WorldId w : cg.live().members()) {
    post[w] = lik(observed, w) * prior[w];
    marginal += post[w];
  }
  if (!(marginal > 0.0))
    throw UnexpectedSignal("signal '" + to_string(observed) +
                           "' has zero probability in common ground " +
                           cg.model().format(cg.live()));
  for (double& p : post) p /= marginal;
  return post;
}

}  // namespace hedgesim
