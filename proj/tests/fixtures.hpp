#pragma once

// Small hand-written automata shared by the unit and acceptance tests.

#include "bacomp/automaton.hpp"

namespace fixtures {

using bacomp::Alphabet;
using bacomp::ColorSet;
using bacomp::Sgra;

inline const ColorSet kNone{};
inline const ColorSet kAcc = ColorSet::single(1);

inline Alphabet sigma_a() { return Alphabet::from_labels({"a"}); }
inline Alphabet sigma_ab() { return Alphabet::from_labels({"a", "b"}); }

// 0 -a{1}-> 0
inline Sgra aut_loop() { return Sgra::buchi(sigma_a(), 1, {0}, {{0, 0, 0, kAcc}}); }

// Infinitely many a: 0 -a{1}-> 0, 0 -b-> 0.
inline Sgra aut_fin_a() { return Sgra::buchi(sigma_ab(), 1, {0}, {{0, 0, 0, kAcc}, {0, 1, 0, kNone}}); }

// p = 0, q = 1: p -a-> p, p -a-> q, q -a{1}-> q.
inline Sgra aut_iwac() {
  return Sgra::buchi(sigma_a(), 2, {0}, {{0, 0, 0, kNone}, {0, 0, 1, kNone}, {1, 0, 1, kAcc}});
}

// 0 -a-> 0, 0 -a{1}-> 1, 1 -a-> 0.
inline Sgra aut_nac() {
  return Sgra::buchi(sigma_a(), 2, {0}, {{0, 0, 0, kNone}, {0, 0, 1, kAcc}, {1, 0, 0, kNone}});
}

// One state, every letter of `sigma` on an accepting loop.
inline Sgra aut_sigma(const Alphabet& sigma) {
  std::vector<bacomp::Transition> ts;
  for (bacomp::LetterId l = 0; l < sigma.size(); ++l) ts.push_back({0, l, 0, kAcc});
  return Sgra::buchi(sigma, 1, {0}, std::move(ts));
}

// SGRAs with k = 2 and Fin in use.
inline Sgra sgra_e1() { return Sgra(sigma_a(), 1, {0}, {{0, 0, 0, ColorSet::single(1)}}, 2, true); }
inline Sgra sgra_e2() { return Sgra(sigma_a(), 1, {0}, {{0, 0, 0, ColorSet(0b11)}}, 2, true); }
inline Sgra sgra_e3() {
  return Sgra(sigma_a(), 2, {0}, {{0, 0, 1, ColorSet::single(0)}, {1, 0, 1, ColorSet::single(1)}}, 2, true);
}

// AUT_FIN_A behind a deterministic chain of `length` b-steps, each chain
// state also allowed to jump straight to the loop on a.
inline Sgra fin_a_with_chain(unsigned length) {
  std::vector<bacomp::Transition> ts;
  const bacomp::StateId loop = length;
  for (bacomp::StateId q = 0; q < length; ++q) {
    ts.push_back({q, 1, q + 1, kNone});
    ts.push_back({q, 0, loop, kNone});
  }
  ts.push_back({loop, 0, loop, kAcc});
  ts.push_back({loop, 1, loop, kNone});
  return Sgra::buchi(sigma_ab(), length + 1, {0}, std::move(ts));
}

}  // namespace fixtures
