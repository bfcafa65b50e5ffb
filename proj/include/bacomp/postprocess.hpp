#pragma once

#include "bacomp/automaton.hpp"

namespace bacomp {

/// Keeps the states reachable from the initial states, renumbered densely
/// in ascending order.
Sgra remove_unreachable(const Sgra& a);

/// Keeps the states that are reachable and useful (can reach a non-trivial
/// SCC of the color-0-free subgraph whose inner transitions carry every Inf
/// color), renumbered densely in ascending order.
Sgra trim(const Sgra& a);

}  // namespace bacomp
