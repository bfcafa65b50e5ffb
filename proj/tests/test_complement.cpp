#include <doctest.h>

#include "bacomp/complement.hpp"
#include "bacomp/emptiness.hpp"
#include "bacomp/error.hpp"
#include "bacomp/oracle.hpp"
#include "fixtures.hpp"

using namespace bacomp;
using namespace fixtures;

namespace {

LassoWord lw(std::vector<LetterId> u, std::vector<LetterId> v) { return {std::move(u), std::move(v)}; }

ComplementOptions checked(NacAlgorithm nac = NacAlgorithm::Slice) {
  ComplementOptions o;
  o.check_invariants = true;
  o.nac = nac;
  return o;
}

// Number of lassos (|u| <= 3, |v| <= 4) on which a and c are not complementary.
std::size_t violations(const Sgra& a, const Sgra& c) {
  std::size_t bad = 0;
  for_each_lasso(a.num_letters(), 3, 4, [&](const LassoWord& w) {
    if (member(a, w) == member(c, w)) ++bad;
  });
  return bad;
}

}  // namespace

TEST_CASE("initial macrostates") {
  ComplementEngine fin(prepare_buchi(aut_fin_a()), ComplementEngine::Mode::Modular, {});
  auto init = fin.initial();
  REQUIRE(init.size() == 1);
  CHECK(init[0] == Macrostate{{0}, {IadacMacro{{0}}}});

  Sgra plain = Sgra::buchi(sigma_a(), 1, {0}, {{0, 0, 0, kNone}});
  ComplementEngine none(prepare_buchi(plain), ComplementEngine::Mode::Modular, {});
  REQUIRE(none.initial().size() == 1);
  CHECK(none.initial()[0] == Macrostate{{0}, {}});

  ComplementEngine iwac(prepare_buchi(aut_iwac()), ComplementEngine::Mode::Modular, {});
  REQUIRE(iwac.initial().size() == 1);
  CHECK(iwac.initial()[0] == Macrostate{{0}, {MhMacro{{}}}});
}

TEST_CASE("successor colors") {
  ComplementEngine e(prepare_buchi(aut_fin_a()), ComplementEngine::Mode::Modular, {});
  Macrostate m = e.initial()[0];
  std::vector<std::pair<Macrostate, ColorSet>> out;
  e.successors(m, 0, out);
  REQUIRE(out.size() == 1);
  CHECK(out[0].second == ColorSet::single(0));
  out.clear();
  e.successors(m, 1, out);
  REQUIRE(out.size() == 1);
  CHECK(out[0].second.empty());

  Sgra plain = Sgra::buchi(sigma_a(), 2, {0}, {{0, 0, 1, kNone}, {1, 0, 1, kNone}});
  ComplementEngine none(prepare_buchi(plain), ComplementEngine::Mode::Modular, {});
  out.clear();
  none.successors(none.initial()[0], 0, out);
  REQUIRE(out.size() == 1);
  CHECK(out[0].first.reached == StateSet{1});
  CHECK(out[0].second.empty());
}

TEST_CASE("color plan") {
  ColorPlan fin = make_color_plan({{BlockKind::Iadac, {0}}});
  CHECK(fin.has_fin);
  CHECK(fin.num_colors == 1);
  CHECK(fin.block_color == std::vector<unsigned>{0});

  ColorPlan mixed = make_color_plan({{BlockKind::Iadac, {0}}, {BlockKind::Iwac, {1}}, {BlockKind::Nac, {2}}});
  CHECK(mixed.block_color == std::vector<unsigned>{0, 1, 2});
  CHECK(mixed.num_colors == 3);

  ColorPlan empty = make_color_plan({});
  CHECK_FALSE(empty.has_fin);
  CHECK(empty.num_colors == 1);
}

TEST_CASE("complement of AUT_FIN_A") {
  Sgra c = complement(aut_fin_a(), checked());
  CHECK(c.num_states() == 1);
  CHECK(acceptance_formula(c) == "Fin(0)");
  REQUIRE(c.transitions().size() == 2);
  CHECK(c.outgoing(0, 0)[0].colors == ColorSet::single(0));
  CHECK(c.outgoing(0, 1)[0].colors.empty());
  CHECK(member(c, lw({}, {1})));
  CHECK_FALSE(member(c, lw({}, {0})));
  CHECK(member(c, lw({0}, {1})));
  CHECK(violations(aut_fin_a(), c) == 0);
}

TEST_CASE("complements of universal and empty languages") {
  for (NacAlgorithm nac : {NacAlgorithm::Slice, NacAlgorithm::Rank}) {
    CHECK(is_empty(complement(aut_loop(), checked(nac))));
    CHECK(is_empty(complement(aut_nac(), checked(nac))));
    CHECK(is_empty(complement_mono_nac(aut_loop(), checked(nac))));
    CHECK(is_empty(complement_mono_nac(aut_nac(), checked(nac))));
  }
  Sgra none = Sgra::buchi(sigma_ab(), 1, {0}, {{0, 0, 0, kNone}});
  Sgra u = complement(none, checked());
  std::size_t accepted = 0;
  for_each_lasso(2, 3, 4, [&](const LassoWord& w) { accepted += member(u, w) ? 1 : 0; });
  CHECK(accepted == 450);
  CHECK(violations(none, complement_mono_nac(none, checked())) == 0);
}

TEST_CASE("mono-NAC pipeline agrees on the fixtures") {
  for (const Sgra& a : {aut_fin_a(), aut_iwac(), aut_nac(), aut_loop()}) {
    CHECK(violations(a, complement(a, checked())) == 0);
    CHECK(violations(a, complement_mono_nac(a, checked())) == 0);
    CHECK(violations(a, complement_mono_nac(a, checked(NacAlgorithm::Rank))) == 0);
  }
}

TEST_CASE("block kinds reported in stats") {
  ComplementStats st;
  complement(aut_iwac(), {}, &st);
  CHECK(st.iwac_blocks == 1);
  CHECK(st.iadac_blocks + st.dac_blocks + st.nac_blocks == 0);
  CHECK(st.in_states == 2);
  complement_mono_nac(aut_iwac(), {}, &st);
  CHECK(st.nac_blocks == 1);
}

TEST_CASE("postprocess toggle") {
  ComplementOptions raw;
  raw.postprocess = false;
  ComplementStats st;
  Sgra untrimmed = complement(aut_loop(), raw, &st);
  CHECK(untrimmed.num_states() == st.macrostates);
  CHECK(untrimmed.num_states() > 0);
  CHECK(complement(aut_loop()).num_states() == 0);
}

TEST_CASE("capacity") {
  ComplementOptions tight;
  tight.max_macrostates = 1;
  try {
    complement(aut_nac(), tight);
    FAIL("expected a capacity error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Capacity);
  }
}

TEST_CASE("non-Buchi input is rejected") {
  try {
    complement(sgra_e1());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedAcceptance);
  }
}

TEST_CASE("encoding separates macrostates") {
  Macrostate a{{0}, {MhMacro{{0}}}};
  Macrostate b{{0}, {IadacMacro{{0}}}};
  Macrostate c{{0}, {SliceMacro{{{{0}, SliceMacro::Label::Die, true}}, true}}};
  Macrostate d{{0}, {SliceMacro{{{{0}, SliceMacro::Label::Die, false}}, true}}};
  CHECK(encode(a) != encode(b));
  CHECK(encode(c) != encode(d));
  CHECK(encode(a) == encode(Macrostate{{0}, {MhMacro{{0}}}}));
}

namespace {

// A deterministic BA behind a new start state that loops on every letter and
// also jumps into it: the jump keeps the start state's own SCC among the
// targets, so the accepting SCCs lose IADAC and fall into IWAC or DAC.
Sgra behind_nondeterministic_start(const Sgra& det) {
  const auto n = static_cast<StateId>(det.num_states());
  std::vector<Transition> ts;
  for (const Transition& t : det.transitions()) ts.push_back({t.src + 1, t.letter, t.dst + 1, t.colors});
  for (LetterId l = 0; l < det.num_letters(); ++l) {
    ts.push_back({0, l, 0, kNone});
    ts.push_back({0, l, 1 + l % n, kNone});
  }
  return Sgra::buchi(det.alphabet(), n + 1, {0}, std::move(ts));
}

}  // namespace

TEST_CASE("elevator automata: CSB and MH blocks stay sound") {
  std::size_t dac = 0;
  std::size_t iwac = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Sgra a = behind_nondeterministic_start(random_deterministic_ba(seed, 2 + seed % 5, 2, 0.9, 0.4));
    ComplementStats st;
    Sgra c = complement(a, checked(), &st);
    CHECK(st.nac_blocks == 0);
    dac += st.dac_blocks;
    iwac += st.iwac_blocks;
    CHECK_MESSAGE(violations(a, c) == 0, "seed " << seed);
  }
  CHECK(dac > 20);
  CHECK(iwac > 20);
}
