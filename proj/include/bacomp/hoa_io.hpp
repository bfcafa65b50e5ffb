#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "bacomp/automaton.hpp"

namespace bacomp {

inline constexpr std::size_t kDefaultMaxAps = 12;

/// Reads one HOA v1 automaton. Letters are the 2^|AP| valuations; each edge
/// becomes one transition per valuation satisfying its label. Accepted
/// acceptance shapes: t, a conjunction of Inf atoms, and a conjunction with
/// exactly one Fin atom. The Fin set maps to color 0, Inf sets to 1, 2, ...
/// in formula order.
///
/// Throws Error(Parse) with line and column on syntax errors,
/// Error(UnsupportedAcceptance) for other acceptance shapes and
/// Error(Capacity) when |AP| exceeds `max_aps`.
Sgra parse_hoa(std::string_view text, std::size_t max_aps = kDefaultMaxAps);

/// Deterministic HOA v1 text. Unused acceptance sets are compacted away, so a
/// BA prints with `Acceptance: 1 Inf(0)`. Alphabets without AP names get
/// fresh APs p0, p1, ... encoding the letter index in binary.
std::string print_hoa(const Sgra& a, const std::string& name = "");

/// `.ba` format: optional `[init]` line, `label,[src]->[dst]` lines, then one
/// `[state]` line per accepting state. Letters are the labels in sorted order.
Sgra parse_ba(std::string_view text);

/// Prints a BA (or a "t"-accepting automaton) in `.ba` format, splitting
/// states when acceptance is not uniform on a state's outgoing transitions
/// and adding a fresh initial state when there are several.
std::string print_ba(const Sgra& a);

}  // namespace bacomp
