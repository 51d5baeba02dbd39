#include "doctest.h"

#include <random>

#include "hedgesim/semantics.hpp"
#include "oracles.hpp"

using namespace hedgesim;

namespace {

WorldSet ws(const WorldModel& m, std::initializer_list<const char*> labels) {
  WorldSet s(m.world_count());
  for (const char* l : labels) s.insert(m.world(l));
  return s;
}

PooledModel pool(std::size_t n, const std::vector<std::size_t>& flips) {
  std::vector<SoritesSeries::Flip> f;
  for (std::size_t i = 0; i < flips.size(); ++i) f.push_back({"a" + std::to_string(i), flips[i]});
  return pool_states(build_forced_march(n, f));
}

}  // namespace

TEST_CASE("formula syntax") {
  for (Formula f : all_formulas) CHECK(parse_formula(to_string(f)) == f);
  CHECK(parse_formula("MIGHT Not PHI") == Formula::might_not_phi());
  CHECK_FALSE(parse_formula("might  phi").has_value());
  CHECK_FALSE(parse_formula("not might phi").has_value());
  CHECK_FALSE(parse_formula("").has_value());
  CHECK(Formula::might_phi().atom() == Formula::phi());
}

TEST_CASE("evaluation on the canonical model") {
  const PooledModel p = canonical_model();
  const WorldModel& m = p.model;
  const WorldId w1 = m.world("w1"), w2 = m.world("w2"), w3 = m.world("w3");
  CHECK(evaluate(m, Formula::might_phi(), w1) == TruthValue::true_);
  CHECK(evaluate(m, Formula::might_phi(), w2) == TruthValue::true_);
  CHECK(evaluate(m, Formula::might_phi(), w3) == TruthValue::false_);
  CHECK(evaluate(m, Formula::phi(), w2) == TruthValue::gap);
  CHECK(evaluate(m, Formula::not_phi(), w2) == TruthValue::gap);
  CHECK(evaluate(m, Formula::not_phi(), w1) == TruthValue::false_);
  CHECK(evaluate(m, Formula::might_not_phi(), w2) == TruthValue::true_);

  CHECK(extension(m, Formula::might_phi()) == ws(m, {"w1", "w2"}));
  CHECK(extension(m, Formula::phi()) == ws(m, {"w1"}));
  CHECK(extension(m, Formula::not_phi()) == ws(m, {"w3"}));
  CHECK(extension(m, Formula::might_not_phi()) == ws(m, {"w2", "w3"}));
  CHECK(anti_extension(m, Formula::might_phi()) == ws(m, {"w3"}));
}

TEST_CASE("frame check") {
  SUBCASE("canonical model") {
    const PooledModel p = canonical_model();
    const FrameReport r = check_frame(p.model);
    CHECK(r.reflexive);
    CHECK(r.symmetric);
    CHECK_FALSE(r.transitive);
    REQUIRE(r.transitivity_witness.has_value());
    CHECK(*r.transitivity_witness == std::array<WorldId, 3>{0, 1, 2});
    CHECK(describe(p.model, r) == "reflexive symmetric non-transitive, witness (w1,w2,w3)");
  }
  SUBCASE("single world") {
    const WorldModel m({"i"}, {"w"}, {{WorldSet(1, {0})}}, WorldSet(1, {0}), WorldSet(1));
    const FrameReport r = check_frame(m);
    CHECK((r.reflexive && r.symmetric && r.transitive));
  }
  SUBCASE("identical flips") {
    const FrameReport r = check_frame(pool(5, {3, 3}).model);
    CHECK(r.transitive);
    CHECK_FALSE(r.transitivity_witness.has_value());
  }
  SUBCASE("singleton cells reduce accessibility to identity") {
    const WorldSet a(3, {0}), b(3, {1}), c(3, {2});
    const WorldModel m({"i", "j"}, {"u", "v", "x"}, {{a, b, c}, {c, b, a}}, a, c);
    const FrameReport r = check_frame(m);
    CHECK((r.reflexive && r.symmetric && r.transitive));
    CHECK(describe(m, r) == "reflexive symmetric transitive");
  }
}

TEST_CASE("modal properties over random pooled models") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const auto spec = oracle::random_march(rng, 50, 1, 5);
    const PooledModel p = pool(spec.n, spec.flips);
    const WorldModel& m = p.model;
    const Formula atoms[] = {Formula::phi(), Formula::not_phi()};
    for (Formula a : atoms) {
      const Formula might = a == Formula::phi() ? Formula::might_phi() : Formula::might_not_phi();
      // Factivity direction via reflexivity.
      CHECK(extension(m, a).subset_of(extension(m, might)));
      // Bivalence of the modal.
      for (WorldId w = 0; w < m.world_count(); ++w)
        CHECK(evaluate(m, might, w) != TruthValue::gap);
      for (Formula b : atoms) {
        const Formula might_b =
            b == Formula::phi() ? Formula::might_phi() : Formula::might_not_phi();
        if (extension(m, a).subset_of(extension(m, b)))
          CHECK(extension(m, might).subset_of(extension(m, might_b)));
      }
    }
    // might phi holds exactly where some agent thinks q.
    for (WorldId w = 0; w < m.world_count(); ++w) {
      bool someone = false;
      for (AgentId i = 0; i < m.agent_count(); ++i)
        someone = someone || thinks(m, i, p.judges_q(i), w);
      CHECK((evaluate(m, Formula::might_phi(), w) == TruthValue::true_) == someone);
    }
  }
}
