#include <doctest.h>

#include <algorithm>

#include "bacomp/automaton.hpp"
#include "bacomp/error.hpp"
#include "bacomp/oracle.hpp"
#include "fixtures.hpp"

using namespace bacomp;
using namespace fixtures;

TEST_CASE("acceptance formula") {
  CHECK(acceptance_formula(Sgra(sigma_a(), 1, {0}, {}, 3, true)) == "Fin(0) & Inf(1) & Inf(2)");
  CHECK(acceptance_formula(aut_loop()) == "Inf(1)");
  CHECK(acceptance_formula(Sgra(sigma_a(), 1, {0}, {}, 1, false)) == "t");
}

TEST_CASE("constructor validates and sorts") {
  Sgra a = Sgra::buchi(sigma_ab(), 2, {1, 0, 1}, {{1, 0, 0, kNone}, {0, 1, 1, kAcc}, {0, 1, 1, kAcc}});
  CHECK(a.initial() == StateSet{0, 1});
  REQUIRE(a.transitions().size() == 2);
  CHECK(a.transitions()[0].src == 0);
  CHECK(a.outgoing(0, 1).size() == 1);
  CHECK(a.outgoing(0, 0).empty());

  CHECK_THROWS_AS(Sgra::buchi(sigma_a(), 1, {1}, {}), Error);
  CHECK_THROWS_AS(Sgra::buchi(sigma_a(), 1, {0}, {{0, 1, 0, kNone}}), Error);
  // color 0 needs fin_used
  CHECK_THROWS_AS(Sgra::buchi(sigma_a(), 1, {0}, {{0, 0, 0, ColorSet::single(0)}}), Error);
  CHECK_THROWS_AS(Sgra(sigma_a(), 1, {0}, {}, 65, false), Error);
  CHECK_THROWS_AS(Alphabet::from_labels({}), Error);
  CHECK_THROWS_AS(Alphabet::from_labels({"a", "a"}), Error);
}

TEST_CASE("ap alphabets enumerate valuations") {
  Alphabet s = Alphabet::from_aps({"p", "q"});
  REQUIRE(s.size() == 4);
  CHECK(s.label(0) == "!p&!q");
  CHECK(s.label(1) == "p&!q");
  CHECK(s.label(3) == "p&q");
  CHECK(s.find("!p&q") == 2u);
  CHECK_FALSE(s.find("r").has_value());
}

TEST_CASE("normalize_colors drops inter-SCC colors") {
  Sgra a = Sgra::buchi(sigma_a(), 2, {0}, {{0, 0, 1, kAcc}, {1, 0, 1, kAcc}});
  Sgra n = normalize_colors(a);
  CHECK(n.transitions()[0].colors.empty());
  CHECK(n.transitions()[1].colors == kAcc);
  CHECK(normalize_colors(aut_fin_a()) == aut_fin_a());
}

TEST_CASE("push_state_acceptance") {
  // state 1 accepting, loops on a and b
  StateMarkedAutomaton m{sigma_ab(), 2, {0},
                         {{0, 0, 1, kNone}, {1, 0, 1, kNone}, {1, 1, 1, kNone}},
                         {kNone, kAcc}, 2, false};
  Sgra p = push_state_acceptance(m);
  for (const Transition& t : p.outgoing(1)) CHECK(t.colors == kAcc);
  CHECK(p.outgoing(0)[0].colors.empty());

  m.state_marks = {kNone, kNone};
  for (const Transition& t : push_state_acceptance(m).transitions()) CHECK(t.colors.empty());

  m.state_marks = {kNone};
  CHECK_THROWS_AS(push_state_acceptance(m), Error);
}

TEST_CASE("push_state_acceptance preserves the language") {
  // State-based: state 1 is "last letter was a", F = {1}. Language: infinitely many a.
  StateMarkedAutomaton m{sigma_ab(), 2, {0},
                         {{0, 0, 1, kNone}, {0, 1, 0, kNone}, {1, 0, 1, kNone}, {1, 1, 0, kNone}},
                         {kNone, kAcc}, 2, false};
  Sgra p = push_state_acceptance(m);
  std::size_t n = 0;
  for (const LassoWord& w : enumerate_lassos(2, 3, 3)) {
    const bool inf_a = std::find(w.period.begin(), w.period.end(), 0u) != w.period.end();
    CHECK(member(p, w) == inf_a);
    ++n;
  }
  CHECK(n == 15u * 14u);
}

TEST_CASE("restrict") {
  Sgra a = aut_iwac();
  CHECK(restrict(a, {0, 1}).transitions().size() == a.transitions().size());
  CHECK(restrict(a, {}).transitions().empty());
  Sgra q = restrict(a, {1});
  REQUIRE(q.transitions().size() == 1);
  CHECK(q.transitions()[0] == Transition{1, 0, 1, kAcc});
  CHECK_THROWS_AS(restrict(a, {5}), Error);
}

TEST_CASE("as_buchi") {
  CHECK(as_buchi(aut_loop()) == aut_loop());
  Sgra all = as_buchi(Sgra(sigma_a(), 1, {0}, {{0, 0, 0, kNone}}, 1, false));
  CHECK(all.is_buchi());
  CHECK(all.transitions()[0].colors == kAcc);
  CHECK_THROWS_AS(as_buchi(sgra_e1()), Error);
}

TEST_CASE("relabel") {
  Alphabet ba = Alphabet::from_labels({"b", "a"});
  Sgra r = relabel(aut_fin_a(), ba);
  CHECK(r.alphabet() == ba);
  CHECK(r.outgoing(0, 1)[0].colors == kAcc);  // a is now letter 1
  CHECK_THROWS_AS(relabel(aut_fin_a(), sigma_a()), Error);
}

TEST_CASE("post and reachability") {
  Sgra a = aut_iwac();
  CHECK(post(a, {0}, 0) == StateSet{0, 1});
  CHECK(post(a, {1}, 0) == StateSet{1});
  CHECK(post(a, {}, 0).empty());
  Sgra b = Sgra::buchi(sigma_a(), 3, {0}, {{0, 0, 1, kNone}});
  CHECK(reachable_states(b) == std::vector<bool>{true, true, false});
}

TEST_CASE("canonical_form renumbers by BFS") {
  Sgra a = Sgra::buchi(sigma_a(), 3, {2}, {{2, 0, 0, kNone}, {0, 0, 0, kAcc}});
  Sgra c = canonical_form(a);
  CHECK(c.num_states() == 2);
  CHECK(c.initial() == StateSet{0});
  CHECK(c.transitions()[0] == Transition{0, 0, 1, kNone});
  CHECK(c.transitions()[1] == Transition{1, 0, 1, kAcc});
}

TEST_CASE("set helpers") {
  StateSet s{3, 1, 3, 2};
  normalize_set(s);
  CHECK(s == StateSet{1, 2, 3});
  CHECK(set_contains(s, 2));
  CHECK_FALSE(set_contains(s, 0));
  CHECK(set_union({1, 3}, {2, 3}) == StateSet{1, 2, 3});
  CHECK(set_intersection({1, 3}, {2, 3}) == StateSet{3});
  CHECK(set_difference({1, 3}, {2, 3}) == StateSet{1});
  CHECK(set_is_subset({1}, {1, 2}));
  CHECK_FALSE(set_is_subset({0}, {1, 2}));
}

TEST_CASE("color sets") {
  ColorSet c = ColorSet::range(1, 4);
  CHECK(c.size() == 3);
  CHECK(c.bound() == 4);
  CHECK(c.to_string() == "{1,2,3}");
  CHECK(c.includes(ColorSet::single(2)));
  CHECK_FALSE(c.contains(0));
  CHECK(ColorSet{}.bound() == 0);
}

TEST_CASE("error prefixes") {
  CHECK(std::string(error_prefix(ErrorKind::UnsupportedAcceptance)) == "unsupported-acceptance");
  CHECK(std::string(error_prefix(ErrorKind::Capacity)) == "capacity");
}
