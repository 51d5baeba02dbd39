#include "hedgesim/report.hpp"

#include <string>

#include "json.hpp"

#include "hedgesim/numfmt.hpp"

namespace hedgesim {

namespace {

using json = nlohmann::ordered_json;

json num(double v) { return round12(v); }

std::string join_worlds(const WorldModel& m, const WorldSet& s) {
  std::string out;
  for (WorldId w : s.members()) {
    if (!out.empty()) out += ' ';
    out += m.worlds()[w];
  }
  return out;
}

json world_list(const WorldModel& m, const WorldSet& s) {
  json arr = json::array();
  for (WorldId w : s.members()) arr.push_back(m.worlds()[w]);
  return arr;
}

json posterior_object(const WorldModel& m, const WorldSet& live, const WorldDistribution& p) {
  json obj = json::object();
  for (WorldId w : live.members()) obj[m.worlds()[w]] = num(p[w]);
  return obj;
}

json config_json(const GameConfig& c) {
  json u = json::object();
  for (Player p : {Player::late_flipper, Player::early_flipper}) {
    json row = json::object();
    for (Action x : {Action::a, Action::b})
      for (Action y : {Action::a, Action::b})
        row[to_string(x) + to_string(y)] = num(c.payoffs()(p, x, y));
    u[to_string(p)] = row;
  }
  return json{{"delta", num(c.delta())},     {"gamma", num(c.gamma())},
              {"tau", num(c.tau())},         {"epsilon", num(c.epsilon())},
              {"hesitation", num(c.hesitation())}, {"payoffs", u}};
}

json summary_json(const HedgingSummary& s) {
  return json{{"even_tail", num(s.even_tail)},
              {"odd_tail", num(s.odd_tail)},
              {"last_pair_sum", num(s.last_pair_sum)},
              {"pair_sum_converged", s.pair_sum_converged},
              {"pair_sums_monotone", s.pair_sums_monotone},
              {"eu_dominates_step0", s.eu_dominates_step0}};
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "delta,gamma,p_w1,p_w2,p_w3,eu_a,eu_b,region\n";
  for (const SweepRow& r : rows)
    out << format_number(r.delta) << ',' << format_number(r.gamma) << ','
        << format_number(r.prior.p[0]) << ',' << format_number(r.prior.p[1]) << ','
        << format_number(r.prior.p[2]) << ',' << format_number(r.eu_a) << ','
        << format_number(r.eu_b) << ',' << to_string(r.region) << '\n';
}

void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const SweepRow& r : rows)
    arr.push_back(json{{"delta", num(r.delta)},
                       {"gamma", num(r.gamma)},
                       {"p_w1", num(r.prior.p[0])},
                       {"p_w2", num(r.prior.p[1])},
                       {"p_w3", num(r.prior.p[2])},
                       {"eu_a", num(r.eu_a)},
                       {"eu_b", num(r.eu_b)},
                       {"p_qL_given_qS", num(r.conditional)},
                       {"region", to_string(r.region)}});
  out << arr.dump(2) << '\n';
}

void write_hedging_csv(std::ostream& out, const HedgingTrace& trace) {
  out << "n,p_speaker_a,p_listener_a,eu_a,eu_b\n";
  for (const HedgingStep& s : trace.steps)
    out << s.n << ',' << format_number(s.p_speaker_a) << ',' << format_number(s.p_listener_a)
        << ',' << format_number(s.eu_a) << ',' << format_number(s.eu_b) << '\n';
}

void write_hedging_json(std::ostream& out, const HedgingTrace& trace) {
  json steps = json::array();
  for (const HedgingStep& s : trace.steps)
    steps.push_back(json{{"n", s.n},
                         {"p_speaker_a", num(s.p_speaker_a)},
                         {"p_listener_a", num(s.p_listener_a)},
                         {"eu_a", num(s.eu_a)},
                         {"eu_b", num(s.eu_b)}});
  json doc{{"config", config_json(trace.config)},
           {"player", to_string(trace.player)},
           {"tolerance", num(trace.tolerance)},
           {"steps", steps},
           {"summary", summary_json(trace.summary)}};
  out << doc.dump(2) << '\n';
}

void write_dialogue_csv(std::ostream& out, const RunReport& report) {
  const WorldModel& m = report.model();
  out << "time,signal,live,posterior\n";
  for (const DialogueStep& step : report.dialogue) {
    std::string post;
    for (WorldId w : step.live.members()) {
      if (!post.empty()) post += ' ';
      post += m.worlds()[w] + "=" + format_number(step.posterior[w]);
    }
    out << step.time << ',' << (step.signal ? to_string(*step.signal) : "") << ','
        << join_worlds(m, step.live) << ',' << post << '\n';
  }
}

void write_run_jsonl(std::ostream& out, const RunReport& report) {
  const WorldModel& m = report.model();
  for (const DialogueStep& step : report.dialogue) {
    json rec{{"record", "step"},
             {"time", step.time},
             {"signal", step.signal ? json(to_string(*step.signal)) : json(nullptr)},
             {"live", world_list(m, step.live)},
             {"posterior", posterior_object(m, step.live, step.posterior)}};
    out << rec.dump() << '\n';
  }

  json partitions = json::object();
  for (AgentId a = 0; a < m.agent_count(); ++a) {
    json cells = json::array();
    for (const WorldSet& c : m.partition(a)) cells.push_back(world_list(m, c));
    partitions[m.agents()[a]] = cells;
  }
  const FrameReport frame = check_frame(m);
  const EquilibriumReport& eq = report.equilibrium;
  json rec{
      {"record", "report"},
      {"model",
       json{{"worlds", m.worlds()},
            {"partitions", partitions},
            {"phi", world_list(m, m.phi_extension())},
            {"not_phi", world_list(m, m.not_phi_extension())},
            {"frame", describe(m, frame)}}},
      {"speaker", m.agents()[report.speaker]},
      {"world", m.worlds()[report.actual]},
      {"signal", to_string(report.signal)},
      {"public_q", report.public_q},
      {"public_not_q", report.public_not_q},
      {"equilibrium",
       json{{"region", to_string(eq.region)},
            {"eu_a", num(eq.eu_a)},
            {"eu_b", num(eq.eu_b)},
            {"gamma_bound_a", num(eq.gamma_bound_a)},
            {"gamma_bound_b", num(eq.gamma_bound_b)}}},
      {"hedging", summary_json(report.hedging.summary)},
      {"hedging_steps", report.hedging.steps.size() - 1}};
  out << rec.dump() << '\n';
}

void write_frame_csv(std::ostream& out, const WorldModel& model, const FrameReport& frame) {
  out << "reflexive,symmetric,transitive,witness\n";
  out << (frame.reflexive ? "true" : "false") << ',' << (frame.symmetric ? "true" : "false")
      << ',' << (frame.transitive ? "true" : "false") << ',';
  if (frame.transitivity_witness) {
    const auto& w = *frame.transitivity_witness;
    out << model.worlds()[w[0]] << ' ' << model.worlds()[w[1]] << ' ' << model.worlds()[w[2]];
  }
  out << '\n';
}

void write_frame_json(std::ostream& out, const WorldModel& model, const FrameReport& frame) {
  json witness = nullptr;
  if (frame.transitivity_witness) {
    const auto& w = *frame.transitivity_witness;
    witness = json::array({model.worlds()[w[0]], model.worlds()[w[1]], model.worlds()[w[2]]});
  }
  json doc{{"reflexive", frame.reflexive},
           {"symmetric", frame.symmetric},
           {"transitive", frame.transitive},
           {"witness", witness},
           {"summary", describe(model, frame)}};
  out << doc.dump(2) << '\n';
}

}  // namespace hedgesim
