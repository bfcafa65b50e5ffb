#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bacomp {

using StateId = std::uint32_t;
using LetterId = std::uint32_t;

/// Sorted, duplicate-free list of states.
using StateSet = std::vector<StateId>;

inline constexpr unsigned kMaxColors = 64;

/// A set of colors {0, ..., 63}. Color 0 is always the Fin color.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ColorSet single(unsigned color) { return ColorSet(std::uint64_t{1} << color); }
  /// Colors lo, lo+1, ..., hi-1.
  static constexpr ColorSet range(unsigned lo, unsigned hi) {
    ColorSet s;
    for (unsigned c = lo; c < hi; ++c) s.insert(c);
    return s;
  }

  constexpr bool contains(unsigned color) const { return (bits_ >> color) & 1U; }
  constexpr void insert(unsigned color) { bits_ |= std::uint64_t{1} << color; }
  constexpr void erase(unsigned color) { bits_ &= ~(std::uint64_t{1} << color); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool includes(ColorSet other) const { return (other.bits_ & ~bits_) == 0; }
  /// One past the largest member, 0 when empty.
  constexpr unsigned bound() const { return bits_ == 0 ? 0 : 64 - static_cast<unsigned>(std::countl_zero(bits_)); }

  constexpr ColorSet operator|(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
  constexpr ColorSet operator&(ColorSet o) const { return ColorSet(bits_ & o.bits_); }
  constexpr ColorSet& operator|=(ColorSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr auto operator<=>(const ColorSet&) const = default;

  std::vector<unsigned> members() const;
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

struct Transition {
  StateId src = 0;
  LetterId letter = 0;
  StateId dst = 0;
  ColorSet colors;

  auto operator<=>(const Transition&) const = default;
};

/// Finite alphabet with dense letter ids. When built from atomic propositions,
/// letter i is the valuation whose bit j says whether AP j holds.
class Alphabet {
 public:
  static Alphabet from_labels(std::vector<std::string> labels);
  static Alphabet from_aps(std::vector<std::string> ap_names);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(LetterId letter) const { return labels_.at(letter); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_aps() const { return ap_names_.has_value(); }
  const std::optional<std::vector<std::string>>& ap_names() const { return ap_names_; }
  std::optional<LetterId> find(std::string_view label) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> labels_;
  std::optional<std::vector<std::string>> ap_names_;
};

/// Explicit transition-based automaton with acceptance
/// Fin(0) & Inf(1) & ... & Inf(k-1). A Büchi automaton has k = 2 and no
/// transition colored 0. Immutable after construction.
class Sgra {
 public:
  /// Validates the invariants and throws Error(Contract) on violation.
  /// Exact duplicate transitions are merged.
  Sgra(Alphabet alphabet, std::size_t num_states, StateSet initial,
       std::vector<Transition> transitions, unsigned num_colors, bool fin_used);

  static Sgra buchi(Alphabet alphabet, std::size_t num_states, StateSet initial,
                    std::vector<Transition> transitions);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return num_states_; }
  std::size_t num_letters() const { return alphabet_.size(); }
  const StateSet& initial() const { return initial_; }
  unsigned num_colors() const { return num_colors_; }
  bool fin_used() const { return fin_used_; }
  bool is_buchi() const { return num_colors_ == 2 && !fin_used_; }

  /// All transitions ordered by (src, letter, dst, colors).
  std::span<const Transition> transitions() const { return transitions_; }
  std::span<const Transition> outgoing(StateId q) const;
  std::span<const Transition> outgoing(StateId q, LetterId a) const;

  /// Colors 1..k-1, the set every accepting run must visit infinitely often.
  ColorSet inf_colors() const { return ColorSet::range(1, num_colors_); }

  bool operator==(const Sgra&) const = default;

 private:
  Alphabet alphabet_;
  std::size_t num_states_;
  StateSet initial_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> offsets_;
  unsigned num_colors_;
  bool fin_used_;
};

/// Automaton whose acceptance marks may sit on states as well as on
/// transitions; the intermediate form produced by state-based input formats.
struct StateMarkedAutomaton {
  Alphabet alphabet;
  std::size_t num_states = 0;
  StateSet initial;
  std::vector<Transition> transitions;
  std::vector<ColorSet> state_marks;  // one entry per state
  unsigned num_colors = 1;
  bool fin_used = false;
};

std::string acceptance_formula(const Sgra& a);

/// Strips colors from transitions whose endpoints lie in different SCCs.
Sgra normalize_colors(const Sgra& a);

/// Moves every state mark onto the state's outgoing transitions. Throws
/// Error(Contract) if a set index is used both as a state mark and as a
/// transition mark.
Sgra push_state_acceptance(const StateMarkedAutomaton& a);

/// Keeps the transitions with both endpoints in `keep`; state ids are retained.
Sgra restrict(const Sgra& a, const StateSet& keep);

/// Views a Büchi-like automaton as a BA: k = 1 without Fin (every run
/// accepting) becomes a BA with all transitions colored. Throws
/// Error(UnsupportedAcceptance) for anything that is not a BA.
Sgra as_buchi(const Sgra& a);

/// Rewrites `a` over `target`, mapping letters by label. Throws
/// Error(AlphabetMismatch) when a used label is missing from `target`.
Sgra relabel(const Sgra& a, const Alphabet& target);

/// Sorted set of successors of the states in `from` over `a`.
StateSet post(const Sgra& aut, const StateSet& from, LetterId a);

/// States reachable from the initial states.
std::vector<bool> reachable_states(const Sgra& a);

/// Renumbers the reachable part in BFS order (initial states ascending, then
/// outgoing transitions in stored order) and drops unreachable states.
Sgra canonical_form(const Sgra& a);

// Small set helpers over sorted vectors.
bool set_contains(const StateSet& s, StateId q);
StateSet set_union(const StateSet& a, const StateSet& b);
StateSet set_intersection(const StateSet& a, const StateSet& b);
StateSet set_difference(const StateSet& a, const StateSet& b);
bool set_is_subset(const StateSet& sub, const StateSet& super);
void normalize_set(StateSet& s);

}  // namespace bacomp
