#include <doctest.h>

#include <map>

#include "bacomp/emptiness.hpp"
#include "bacomp/oracle.hpp"
#include "fixtures.hpp"

using namespace bacomp;
using namespace fixtures;

TEST_CASE("hand-run fixtures") {
  CHECK_FALSE(is_empty(sgra_e1()));
  CHECK(is_empty(sgra_e2()));
  CHECK_FALSE(is_empty(sgra_e3()));
  CHECK_FALSE(is_empty_oracle(sgra_e1()));
  CHECK(is_empty_oracle(sgra_e2()));
  CHECK_FALSE(is_empty_oracle(sgra_e3()));
}

TEST_CASE("k = 1 needs a non-trivial cycle") {
  Sgra cyc(sigma_a(), 2, {0}, {{0, 0, 1, ColorSet{}}, {1, 0, 1, ColorSet{}}}, 1, false);
  CHECK_FALSE(is_empty(cyc));
  CHECK_FALSE(is_empty_oracle(cyc));
  Sgra path(sigma_a(), 2, {0}, {{0, 0, 1, ColorSet{}}}, 1, false);
  CHECK(is_empty(path));
  CHECK(is_empty_oracle(path));
  Sgra no_init(sigma_a(), 1, {}, {{0, 0, 0, ColorSet{}}}, 1, false);
  CHECK(is_empty(no_init));
}

TEST_CASE("generalized colors must meet in one SCC") {
  Sgra split(sigma_a(), 3, {0},
             {{0, 0, 0, ColorSet::single(1)}, {0, 0, 1, ColorSet{}}, {1, 0, 1, ColorSet::single(2)}}, 3, false);
  CHECK(is_empty(split));
  Sgra joint(sigma_a(), 2, {0}, {{0, 0, 1, ColorSet::single(1)}, {1, 0, 0, ColorSet::single(2)}}, 3, false);
  CHECK_FALSE(is_empty(joint));
}

TEST_CASE("a Fin edge splits an SCC") {
  // 0 -{1}-> 1 -{0}-> 0, 1 -{}-> 2 -{}-> 1: the good cycle avoids color 0 only if it skips 0.
  Sgra a(sigma_a(), 3, {0},
         {{0, 0, 1, ColorSet::single(1)}, {1, 0, 0, ColorSet::single(0)}, {1, 0, 2, ColorSet{}},
          {2, 0, 1, ColorSet{}}},
         2, true);
  CHECK(is_empty(a));
  CHECK(is_empty_oracle(a));
  Sgra b(sigma_a(), 3, {0},
         {{0, 0, 1, ColorSet{}}, {1, 0, 0, ColorSet::single(0)}, {1, 0, 2, ColorSet{}},
          {2, 0, 1, ColorSet::single(1)}},
         2, true);
  CHECK_FALSE(is_empty(b));
  CHECK_FALSE(is_empty_oracle(b));
}

TEST_CASE("random differential against the SCC oracle") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Sgra a = random_sgra({seed, 8, 3, 4});
    EmptinessStats st;
    CHECK_MESSAGE(is_empty(a, &st) == is_empty_oracle(a), "seed " << seed);
    CHECK(st.explored_transitions <= a.transitions().size());
  }
}

namespace {

// Infinite chain n -> n+1; node 5 also has an accepting self-loop, listed
// first. Only nodes that are expanded exist.
class Unbounded final : public ImplicitSgra {
 public:
  unsigned num_colors() const override { return 2; }
  std::vector<NodeId> initial() override { return {0}; }
  const std::vector<ImplicitEdge>& outgoing(NodeId n) override {
    auto [it, fresh] = cache_.try_emplace(n);
    if (fresh) {
      if (n == target_) it->second.push_back({0, n, ColorSet::single(1)});
      it->second.push_back({0, n + 1, ColorSet{}});
    }
    return it->second;
  }
  NodeId target_ = 5;
  std::map<NodeId, std::vector<ImplicitEdge>> cache_;
};

}  // namespace

TEST_CASE("search is lazy on implicit automata") {
  Unbounded g;
  EmptinessStats st;
  CHECK_FALSE(is_empty(g, &st));
  // Exactly the path 0..5 plus the loop is explored.
  CHECK(g.cache_.size() == 6);
  CHECK(st.explored_transitions == 6);
  CHECK(st.peak_stack_depth >= 6);
}

TEST_CASE("explicit view") {
  ExplicitView v(sgra_e3());
  CHECK(v.num_colors() == 2);
  CHECK(v.initial() == std::vector<NodeId>{0});
  REQUIRE(v.outgoing(0).size() == 1);
  CHECK(v.outgoing(0)[0].target == 1);
  CHECK(v.outgoing(0)[0].colors == ColorSet::single(0));
}
