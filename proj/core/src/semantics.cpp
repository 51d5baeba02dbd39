#include "hedgesim/semantics.hpp"

#include "hedgesim/errors.hpp"

#include <algorithm>
#include <cctype>

namespace hedgesim {

std::string to_string(Formula f) {
  std::string out = f.is_modal() ? "might " : "";
  out += f.polarity() == Polarity::negative ? "not phi" : "phi";
  return out;
}

std::optional<Formula> parse_formula(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Formula f : all_formulas)
    if (lowered == to_string(f)) return f;
  return std::nullopt;
}

std::string to_string(TruthValue v) {
  switch (v) {
    case TruthValue::true_: return "true";
    case TruthValue::false_: return "false";
    case TruthValue::gap: return "gap";
  }
  return "gap";
}

namespace {

TruthValue evaluate_atom(const WorldModel& model, Polarity p, WorldId w) {
  const WorldSet& yes = p == Polarity::positive ? model.phi_extension() : model.not_phi_extension();
  const WorldSet& no = p == Polarity::positive ? model.not_phi_extension() : model.phi_extension();
  if (yes.contains(w)) return TruthValue::true_;
  if (no.contains(w)) return TruthValue::false_;
  return TruthValue::gap;
}

}  // namespace

TruthValue evaluate(const WorldModel& model, Formula f, WorldId w) {
  if (w >= model.world_count()) throw LookupError("unknown world index " + std::to_string(w));
  if (!f.is_modal()) return evaluate_atom(model, f.polarity(), w);
  for (WorldId v = 0; v < model.world_count(); ++v)
    if (accessible(model, w, v) && evaluate_atom(model, f.polarity(), v) == TruthValue::true_)
      return TruthValue::true_;
  return TruthValue::false_;
}

WorldSet extension(const WorldModel& model, Formula f) {
  WorldSet out(model.world_count());
  for (WorldId w = 0; w < model.world_count(); ++w)
    if (evaluate(model, f, w) == TruthValue::true_) out.insert(w);
  return out;
}

WorldSet anti_extension(const WorldModel& model, Formula f) {
  WorldSet out(model.world_count());
  for (WorldId w = 0; w < model.world_count(); ++w)
    if (evaluate(model, f, w) == TruthValue::false_) out.insert(w);
  return out;
}

FrameReport check_frame(const WorldModel& model) {
  const std::size_t m = model.world_count();
  std::vector<std::vector<char>> rel(m, std::vector<char>(m, 0));
  for (WorldId a = 0; a < m; ++a)
    for (WorldId b = 0; b < m; ++b) rel[a][b] = accessible(model, a, b) ? 1 : 0;

  FrameReport r;
  r.reflexive = true;
  r.symmetric = true;
  for (WorldId a = 0; a < m; ++a) {
    if (!rel[a][a]) r.reflexive = false;
    for (WorldId b = 0; b < m; ++b)
      if (rel[a][b] != rel[b][a]) r.symmetric = false;
  }
  for (WorldId a = 0; a < m && !r.transitivity_witness; ++a)
    for (WorldId b = 0; b < m && !r.transitivity_witness; ++b)
      for (WorldId c = 0; c < m && !r.transitivity_witness; ++c)
        if (rel[a][b] && rel[b][c] && !rel[a][c]) r.transitivity_witness = {a, b, c};
  r.transitive = !r.transitivity_witness.has_value();
  return r;
}

std::string describe(const WorldModel& model, const FrameReport& report) {
  std::string out;
  out += report.reflexive ? "reflexive" : "non-reflexive";
  out += report.symmetric ? " symmetric" : " non-symmetric";
  out += report.transitive ? " transitive" : " non-transitive";
  if (report.transitivity_witness) {
    const auto& w = *report.transitivity_witness;
    const auto& names = model.worlds();
    out += ", witness (" + names[w[0]] + "," + names[w[1]] + "," + names[w[2]] + ")";
  }
  return out;
}

}  // namespace hedgesim
