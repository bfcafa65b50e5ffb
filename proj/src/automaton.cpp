#include "bacomp/automaton.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "bacomp/error.hpp"
#include "bacomp/graph.hpp"

namespace bacomp {

const char* error_prefix(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::UnsupportedAcceptance: return "unsupported-acceptance";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::Contract: return "contract";
    case ErrorKind::AlphabetMismatch: return "alphabet-mismatch";
    case ErrorKind::Invariant: return "invariant";
  }
  return "error";
}

std::vector<unsigned> ColorSet::members() const {
  std::vector<unsigned> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<unsigned>(std::countr_zero(b)));
  return out;
}

std::string ColorSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (unsigned c : members()) {
    if (!first) s += ',';
    s += std::to_string(c);
    first = false;
  }
  return s + "}";
}

// ---------------------------------------------------------------- Alphabet

Alphabet Alphabet::from_labels(std::vector<std::string> labels) {
  if (labels.empty()) throw Error(ErrorKind::Contract, "alphabet must be nonempty");
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::Contract, "alphabet labels must be distinct");
  Alphabet a;
  a.labels_ = std::move(labels);
  return a;
}

Alphabet Alphabet::from_aps(std::vector<std::string> ap_names) {
  if (ap_names.size() >= 31) throw Error(ErrorKind::Capacity, "too many atomic propositions");
  const std::size_t n = std::size_t{1} << ap_names.size();
  Alphabet a;
  a.labels_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (ap_names.empty()) {
      a.labels_.emplace_back("t");
      continue;
    }
    std::string label;
    for (std::size_t j = 0; j < ap_names.size(); ++j) {
      if (j > 0) label += '&';
      if (((v >> j) & 1U) == 0) label += '!';
      label += ap_names[j];
    }
    a.labels_.push_back(std::move(label));
  }
  a.ap_names_ = std::move(ap_names);
  return a;
}

std::optional<LetterId> Alphabet::find(std::string_view label) const {
  for (LetterId i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

// -------------------------------------------------------------------- Sgra

Sgra::Sgra(Alphabet alphabet, std::size_t num_states, StateSet initial,
           std::vector<Transition> transitions, unsigned num_colors, bool fin_used)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initial_(std::move(initial)),
      transitions_(std::move(transitions)),
      num_colors_(num_colors),
      fin_used_(fin_used) {
  if (alphabet_.size() == 0) throw Error(ErrorKind::Contract, "alphabet must be nonempty");
  if (num_colors_ < 1 || num_colors_ > kMaxColors)
    throw Error(ErrorKind::Capacity, "number of colors must be in [1, 64], got " + std::to_string(num_colors_));
  if (num_states_ > 0xFFFFFFF0u) throw Error(ErrorKind::Capacity, "too many states");
  normalize_set(initial_);
  for (StateId q : initial_)
    if (q >= num_states_) throw Error(ErrorKind::Contract, "initial state out of range");
  const ColorSet allowed = fin_used_ ? ColorSet::range(0, num_colors_) : ColorSet::range(1, num_colors_);
  for (const Transition& t : transitions_) {
    if (t.src >= num_states_ || t.dst >= num_states_)
      throw Error(ErrorKind::Contract, "transition endpoint out of range");
    if (t.letter >= alphabet_.size()) throw Error(ErrorKind::Contract, "transition letter out of range");
    if (!allowed.includes(t.colors))
      throw Error(ErrorKind::Contract, "transition color " + t.colors.to_string() + " not allowed by acceptance");
  }
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
  offsets_.assign(num_states_ + 1, 0);
  for (const Transition& t : transitions_) ++offsets_[t.src + 1];
  for (std::size_t q = 0; q < num_states_; ++q) offsets_[q + 1] += offsets_[q];
}

Sgra Sgra::buchi(Alphabet alphabet, std::size_t num_states, StateSet initial,
                 std::vector<Transition> transitions) {
  return Sgra(std::move(alphabet), num_states, std::move(initial), std::move(transitions), 2, false);
}

std::span<const Transition> Sgra::outgoing(StateId q) const {
  return std::span<const Transition>(transitions_).subspan(offsets_[q], offsets_[q + 1] - offsets_[q]);
}

std::span<const Transition> Sgra::outgoing(StateId q, LetterId a) const {
  auto all = outgoing(q);
  auto lo = std::partition_point(all.begin(), all.end(), [a](const Transition& t) { return t.letter < a; });
  auto hi = std::partition_point(lo, all.end(), [a](const Transition& t) { return t.letter <= a; });
  return {lo, hi};
}

// -------------------------------------------------------------- operations

std::string acceptance_formula(const Sgra& a) {
  std::string out;
  auto add = [&out](const std::string& atom) {
    if (!out.empty()) out += " & ";
    out += atom;
  };
  if (a.fin_used()) add("Fin(0)");
  for (unsigned c = 1; c < a.num_colors(); ++c) add("Inf(" + std::to_string(c) + ")");
  return out.empty() ? "t" : out;
}

namespace {

Adjacency adjacency(const Sgra& a) {
  Adjacency adj(a.num_states());
  for (const Transition& t : a.transitions()) adj[t.src].push_back(t.dst);
  for (auto& succ : adj) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  return adj;
}

std::vector<Transition> copy_transitions(const Sgra& a) {
  return {a.transitions().begin(), a.transitions().end()};
}

}  // namespace

Sgra normalize_colors(const Sgra& a) {
  const SccDecomposition scc = strongly_connected_components(adjacency(a));
  std::vector<Transition> ts = copy_transitions(a);
  for (Transition& t : ts)
    if (scc.component[t.src] != scc.component[t.dst]) t.colors = ColorSet{};
  return Sgra(a.alphabet(), a.num_states(), a.initial(), std::move(ts), a.num_colors(), a.fin_used());
}

Sgra push_state_acceptance(const StateMarkedAutomaton& a) {
  if (a.state_marks.size() != a.num_states)
    throw Error(ErrorKind::Contract, "state mark table does not match the state count");
  ColorSet on_states;
  for (ColorSet m : a.state_marks) on_states |= m;
  ColorSet on_transitions;
  for (const Transition& t : a.transitions) on_transitions |= t.colors;
  if (!(on_states & on_transitions).empty())
    throw Error(ErrorKind::Contract, "acceptance sets " + (on_states & on_transitions).to_string() +
                                         " are used both on states and on transitions");
  std::vector<Transition> ts = a.transitions;
  for (Transition& t : ts) {
    if (t.src >= a.num_states) throw Error(ErrorKind::Contract, "transition source out of range");
    t.colors |= a.state_marks[t.src];
  }
  return Sgra(a.alphabet, a.num_states, a.initial, std::move(ts), a.num_colors, a.fin_used);
}

Sgra restrict(const Sgra& a, const StateSet& keep) {
  std::vector<bool> in(a.num_states(), false);
  for (StateId q : keep) {
    if (q >= a.num_states()) throw Error(ErrorKind::Contract, "restrict: state out of range");
    in[q] = true;
  }
  std::vector<Transition> ts;
  for (const Transition& t : a.transitions())
    if (in[t.src] && in[t.dst]) ts.push_back(t);
  return Sgra(a.alphabet(), a.num_states(), a.initial(), std::move(ts), a.num_colors(), a.fin_used());
}

Sgra as_buchi(const Sgra& a) {
  if (a.is_buchi()) return a;
  if (a.num_colors() == 1 && !a.fin_used()) {
    std::vector<Transition> ts = copy_transitions(a);
    for (Transition& t : ts) t.colors = ColorSet::single(1);
    return Sgra::buchi(a.alphabet(), a.num_states(), a.initial(), std::move(ts));
  }
  throw Error(ErrorKind::UnsupportedAcceptance,
              "expected a Büchi automaton, got acceptance " + acceptance_formula(a));
}

Sgra relabel(const Sgra& a, const Alphabet& target) {
  std::vector<LetterId> map(a.num_letters());
  std::vector<bool> used(a.num_letters(), false);
  for (const Transition& t : a.transitions()) used[t.letter] = true;
  for (LetterId l = 0; l < a.num_letters(); ++l) {
    auto found = target.find(a.alphabet().label(l));
    if (found) {
      map[l] = *found;
    } else if (used[l]) {
      throw Error(ErrorKind::AlphabetMismatch, "letter '" + a.alphabet().label(l) + "' missing from target alphabet");
    }
  }
  std::vector<Transition> ts = copy_transitions(a);
  for (Transition& t : ts) t.letter = map[t.letter];
  return Sgra(target, a.num_states(), a.initial(), std::move(ts), a.num_colors(), a.fin_used());
}

StateSet post(const Sgra& aut, const StateSet& from, LetterId a) {
  StateSet out;
  for (StateId q : from)
    for (const Transition& t : aut.outgoing(q, a)) out.push_back(t.dst);
  normalize_set(out);
  return out;
}

std::vector<bool> reachable_states(const Sgra& a) {
  return reachable_from(adjacency(a), a.initial());
}

Sgra canonical_form(const Sgra& a) {
  constexpr StateId kNone = 0xFFFFFFFFu;
  std::vector<StateId> id(a.num_states(), kNone);
  std::deque<StateId> queue;
  StateId next = 0;
  for (StateId q : a.initial()) {
    id[q] = next++;
    queue.push_back(q);
  }
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (const Transition& t : a.outgoing(q)) {
      if (id[t.dst] == kNone) {
        id[t.dst] = next++;
        queue.push_back(t.dst);
      }
    }
  }
  StateSet init;
  for (StateId q : a.initial()) init.push_back(id[q]);
  std::vector<Transition> ts;
  for (const Transition& t : a.transitions())
    if (id[t.src] != kNone) ts.push_back({id[t.src], t.letter, id[t.dst], t.colors});
  return Sgra(a.alphabet(), next, std::move(init), std::move(ts), a.num_colors(), a.fin_used());
}

// ------------------------------------------------------------ set helpers

bool set_contains(const StateSet& s, StateId q) { return std::binary_search(s.begin(), s.end(), q); }

StateSet set_union(const StateSet& a, const StateSet& b) {
  StateSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

StateSet set_intersection(const StateSet& a, const StateSet& b) {
  StateSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

StateSet set_difference(const StateSet& a, const StateSet& b) {
  StateSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_is_subset(const StateSet& sub, const StateSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

void normalize_set(StateSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

}  // namespace bacomp
