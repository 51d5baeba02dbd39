#include "doctest.h"

#include <random>
#include <stdexcept>

#include "hedgesim/world_set.hpp"

using hedgesim::WorldSet;

TEST_CASE("basic membership and size") {
  WorldSet s(4, {0, 2});
  CHECK(s.size() == 2);
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(1));
  CHECK_FALSE(s.contains(17));
  s.erase(0);
  CHECK(s.members() == std::vector<std::size_t>{2});
  CHECK_THROWS_AS(s.insert(4), std::out_of_range);
}

TEST_CASE("mixing universes is rejected") {
  CHECK_THROWS_AS((void)(WorldSet(3) & WorldSet(4)), std::invalid_argument);
}

TEST_CASE("set algebra laws on random subsets") {
  std::mt19937 rng(7);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + trial % 9;
    auto draw = [&] {
      WorldSet s(m);
      for (std::size_t w = 0; w < m; ++w)
        if (coin(rng)) s.insert(w);
      return s;
    };
    const WorldSet a = draw(), b = draw();
    CHECK((a & b).subset_of(a));
    CHECK(a.subset_of(a | b));
    CHECK(((a - b) & b).empty());
    CHECK(((a & b) | (a - b)) == a);
    CHECK((a.complement() | a) == WorldSet::full(m));
    CHECK(a.intersects(b) == !(a & b).empty());
  }
}
