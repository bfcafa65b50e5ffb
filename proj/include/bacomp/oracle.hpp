#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bacomp/automaton.hpp"

namespace bacomp {

/// Ultimately periodic word prefix · period^ω.
struct LassoWord {
  std::vector<LetterId> prefix;
  std::vector<LetterId> period;  // nonempty

  bool operator==(const LassoWord&) const = default;
};

/// Whether `a` accepts the lasso word. Works on the period graph
/// Q × positions-of-period without unrolling.
bool member(const Sgra& a, const LassoWord& w);

/// Every lasso with |prefix| <= max_prefix and 1 <= |period| <= max_period,
/// prefixes outermost, each part by length then lexicographically.
std::vector<LassoWord> enumerate_lassos(std::size_t num_letters, std::size_t max_prefix, std::size_t max_period);

void for_each_lasso(std::size_t num_letters, std::size_t max_prefix, std::size_t max_period,
                    const std::function<void(const LassoWord&)>& fn);

struct RandomBaParams {
  std::uint64_t seed = 0;
  std::size_t states = 3;
  std::size_t letters = 2;
  double density = 1.5;   // transitions per letter = ceil(density * states)
  double acc_prob = 0.3;  // chance of a transition being accepting
};

/// Seeded random BA with initial state 0, normalized. A power-of-two letter
/// count yields an AP alphabet (p0, p1, ...), otherwise labels l0, l1, ...
Sgra random_ba(const RandomBaParams& params);

/// Seeded random BA that is deterministic: one initial state and at most one
/// successor per state and letter.
Sgra random_deterministic_ba(std::uint64_t seed, std::size_t states, std::size_t letters, double fill = 0.9,
                             double acc_prob = 0.3);

struct RandomSgraParams {
  std::uint64_t seed = 0;
  std::size_t max_states = 10;
  std::size_t max_letters = 3;
  unsigned max_colors = 4;
};

/// Seeded random SGRA with random sizes, random colors (color 0 included)
/// and one or two initial states.
Sgra random_sgra(const RandomSgraParams& params);

/// Alphabet used by the random generators.
Alphabet generated_alphabet(std::size_t letters);

}  // namespace bacomp
