#pragma once

// CSV and JSON renderings of sweeps, hedging traces, runs and frame checks.
// All numbers use format_number (12 significant digits); JSON numbers are
// rounded to the same precision so both formats carry identical values.

#include <ostream>
#include <vector>

#include "hedgesim/game.hpp"
#include "hedgesim/hedging.hpp"
#include "hedgesim/scenario.hpp"
#include "hedgesim/semantics.hpp"

namespace hedgesim {

/// delta,gamma,p_w1,p_w2,p_w3,eu_a,eu_b,region
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
/// Array of row objects; also carries p(q_L | q_S) as "p_qL_given_qS".
void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows);

/// n,p_speaker_a,p_listener_a,eu_a,eu_b
void write_hedging_csv(std::ostream& out, const HedgingTrace& trace);
/// {"config":..., "steps":[...], "summary":...}
void write_hedging_json(std::ostream& out, const HedgingTrace& trace);

/// time,signal,live,posterior — live is "w1 w2", posterior "w1=0.5 w2=0.5".
void write_dialogue_csv(std::ostream& out, const RunReport& report);
/// JSON lines: one {"record":"step",...} per dialogue step, then one
/// {"record":"report",...} with model, equilibrium and hedging summary.
void write_run_jsonl(std::ostream& out, const RunReport& report);

/// reflexive,symmetric,transitive,witness
void write_frame_csv(std::ostream& out, const WorldModel& model, const FrameReport& frame);
void write_frame_json(std::ostream& out, const WorldModel& model, const FrameReport& frame);

}  // namespace hedgesim
