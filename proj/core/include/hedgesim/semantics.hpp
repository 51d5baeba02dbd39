#pragma once

// The four-sentence signal language {phi, not phi, might phi, might not phi}
// and its evaluation over a WorldModel. "might" quantifies over the cells of
// every participant's partition.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "hedgesim/worlds.hpp"

namespace hedgesim {

enum class Polarity { positive, negative };

/// An atom (phi / not phi) or an atom under a single "might".
class Formula {
 public:
  static constexpr Formula phi() { return Formula(Polarity::positive, false); }
  static constexpr Formula not_phi() { return Formula(Polarity::negative, false); }
  static constexpr Formula might_phi() { return Formula(Polarity::positive, true); }
  static constexpr Formula might_not_phi() { return Formula(Polarity::negative, true); }

  constexpr Polarity polarity() const noexcept { return polarity_; }
  constexpr bool is_modal() const noexcept { return modal_; }
  /// The atom under the modal, or the formula itself for atoms.
  constexpr Formula atom() const noexcept { return Formula(polarity_, false); }

  /// Position in the assertion-strength order phi > not phi > might phi >
  /// might not phi; 0 is strongest.
  constexpr int strength_rank() const noexcept {
    return (modal_ ? 2 : 0) + (polarity_ == Polarity::negative ? 1 : 0);
  }

  friend constexpr bool operator==(const Formula&, const Formula&) = default;

 private:
  constexpr Formula(Polarity p, bool modal) : polarity_(p), modal_(modal) {}

  Polarity polarity_;
  bool modal_;
};

/// Every formula, strongest first.
inline constexpr std::array<Formula, 4> all_formulas = {
    Formula::phi(), Formula::not_phi(), Formula::might_phi(), Formula::might_not_phi()};

/// "phi", "not phi", "might phi" or "might not phi".
std::string to_string(Formula f);

/// Case-insensitive; words separated by single spaces.
std::optional<Formula> parse_formula(std::string_view text);

enum class TruthValue { true_, false_, gap };

std::string to_string(TruthValue v);

TruthValue evaluate(const WorldModel& model, Formula f, WorldId w);

/// {w : evaluate(model, f, w) == true_}.
WorldSet extension(const WorldModel& model, Formula f);

/// {w : evaluate(model, f, w) == false_}.
WorldSet anti_extension(const WorldModel& model, Formula f);

struct FrameReport {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  /// First (a, b, c) in lexicographic order with a~b, b~c but not a~c.
  std::optional<std::array<WorldId, 3>> transitivity_witness;
};

/// Exhaustive check of the accessibility relation induced by the partitions.
FrameReport check_frame(const WorldModel& model);

/// "reflexive symmetric non-transitive, witness (w1,w2,w3)" and similar.
std::string describe(const WorldModel& model, const FrameReport& report);

}  // namespace hedgesim
