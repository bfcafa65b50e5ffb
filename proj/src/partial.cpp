#include "bacomp/partial.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "bacomp/error.hpp"

namespace bacomp {

namespace {

[[noreturn]] void violated(const std::string& what) { throw Error(ErrorKind::Invariant, what); }

template <typename T>
const T& as(const PartialMacrostate& m) {
  const T* p = std::get_if<T>(&m);
  if (p == nullptr) throw Error(ErrorKind::Contract, "partial macrostate of the wrong kind");
  return *p;
}

}  // namespace

PartialAlgorithm::PartialAlgorithm(BlockContext ctx, StateSet block)
    : ctx_(ctx), block_(std::move(block)), member_(ctx.ba.num_states(), false) {
  normalize_set(block_);
  for (StateId q : block_) member_[q] = true;
}

StateSet PartialAlgorithm::restrict_to_block(const StateSet& s) const {
  StateSet out;
  for (StateId q : s)
    if (member_[q]) out.push_back(q);
  return out;
}

// ------------------------------------------------------------------ IADAC
//
// Subset construction over the IADAC block; the Fin color is emitted when some
// tracked run takes an accepting transition.

std::vector<PartialMacrostate> IadacAlgorithm::init(const StateSet& top) const {
  return {IadacMacro{restrict_to_block(top)}};
}

void IadacAlgorithm::successors(const StateSet& top, const PartialMacrostate& m, LetterId a,
                                std::vector<PartialSucc>& out) const {
  const auto& cur = as<IadacMacro>(m);
  bool emit = false;
  for (StateId q : cur.tracked) {
    for (const Transition& t : ctx_.ba.outgoing(q, a)) {
      if (t.colors.contains(1)) {
        emit = true;
        break;
      }
    }
    if (emit) break;
  }
  out.push_back({IadacMacro{restrict_to_block(post(ctx_.ba, top, a))}, emit});
}

void IadacAlgorithm::check(const StateSet& top, const PartialMacrostate& m) const {
  if (as<IadacMacro>(m).tracked != restrict_to_block(top)) violated("IADAC tracked set differs from S ∩ A");
}

// --------------------------------------------------------- Miyano-Hayashi

std::vector<PartialMacrostate> MhAlgorithm::init(const StateSet& top) const {
  return {MhMacro{restrict_to_block(top)}};
}

void MhAlgorithm::successors(const StateSet& top, const PartialMacrostate& m, LetterId a,
                             std::vector<PartialSucc>& out) const {
  const auto& cur = as<MhMacro>(m);
  if (cur.brk.empty()) {
    out.push_back({MhMacro{restrict_to_block(post(ctx_.ba, top, a))}, true});
  } else {
    out.push_back({MhMacro{restrict_to_block(post(ctx_.ba, cur.brk, a))}, false});
  }
}

void MhAlgorithm::check(const StateSet& top, const PartialMacrostate& m) const {
  const auto& cur = as<MhMacro>(m);
  if (!set_is_subset(cur.brk, block_)) violated("MH breakpoint escapes the IWAC block");
  if (!set_is_subset(cur.brk, top)) violated("MH breakpoint contains unreached states");
}

// -------------------------------------------------------------------- CSB
//
// Runs are followed along transitions inside their own SCC; a state reached
// over an SCC-changing transition starts a fresh run in the check set.

std::vector<PartialMacrostate> CsbAlgorithm::init(const StateSet& top) const {
  StateSet c = restrict_to_block(top);
  return {CsbMacro{c, {}, c}};
}

void CsbAlgorithm::successors(const StateSet& top, const PartialMacrostate& m, LetterId a,
                              std::vector<PartialSucc>& out) const {
  const auto& cur = as<CsbMacro>(m);
  const Sgra& ba = ctx_.ba;
  const SccInfo& info = ctx_.info;

  StateSet safe_next;
  for (StateId q : cur.safe) {
    for (const Transition& t : ba.outgoing(q, a)) {
      if (!info.same_scc(q, t.dst)) continue;
      if (t.colors.contains(1)) return;  // a safe run saw an accepting transition
      safe_next.push_back(t.dst);
    }
  }
  normalize_set(safe_next);

  StateSet from_check;
  StateSet movable;
  for (StateId q : cur.check) {
    for (const Transition& t : ba.outgoing(q, a)) {
      if (!info.same_scc(q, t.dst)) continue;
      from_check.push_back(t.dst);
      if (!t.colors.contains(1)) movable.push_back(t.dst);
    }
  }
  StateSet entering;
  for (StateId q : top) {
    for (const Transition& t : ba.outgoing(q, a))
      if (member_[t.dst] && !info.same_scc(q, t.dst)) entering.push_back(t.dst);
  }
  normalize_set(from_check);
  normalize_set(movable);
  normalize_set(entering);

  const StateSet candidates = set_difference(set_union(from_check, entering), safe_next);
  movable = set_difference(movable, safe_next);

  const bool emit = cur.brk.empty();
  StateSet brk_post;
  if (!emit) {
    for (StateId q : cur.brk)
      for (const Transition& t : ba.outgoing(q, a))
        if (info.same_scc(q, t.dst)) brk_post.push_back(t.dst);
    normalize_set(brk_post);
  }

  if (movable.size() >= 63) throw Error(ErrorKind::Capacity, "DAC block too large for CSB branching");
  const std::uint64_t branches = std::uint64_t{1} << movable.size();
  for (std::uint64_t mask = 0; mask < branches; ++mask) {
    StateSet moved;
    for (std::size_t i = 0; i < movable.size(); ++i)
      if ((mask >> i) & 1U) moved.push_back(movable[i]);
    CsbMacro next;
    next.check = set_difference(candidates, moved);
    next.safe = set_union(safe_next, moved);
    next.brk = emit ? next.check : set_intersection(brk_post, next.check);
    out.push_back({std::move(next), emit});
  }
}

void CsbAlgorithm::check(const StateSet& top, const PartialMacrostate& m) const {
  const auto& cur = as<CsbMacro>(m);
  if (!set_intersection(cur.check, cur.safe).empty()) violated("CSB check and safe sets overlap");
  if (!set_is_subset(cur.brk, cur.check)) violated("CSB breakpoint not inside the check set");
  if (set_union(cur.check, cur.safe) != restrict_to_block(top)) violated("CSB sets do not cover S ∩ D");
}

// ------------------------------------------------------------------- rank
//
// Level rankings bounded by 2|P|. Along an intra-block transition ranks never
// increase; an accepting transition leaving an odd rank must drop it.
// Obligations follow even-ranked runs; an empty obligation set is a
// breakpoint.

RankAlgorithm::RankAlgorithm(BlockContext ctx, StateSet block)
    : PartialAlgorithm(ctx, std::move(block)), max_rank_(2 * static_cast<unsigned>(block_.size())) {}

std::vector<PartialMacrostate> RankAlgorithm::init(const StateSet& top) const {
  RankMacro m;
  for (StateId q : restrict_to_block(top)) m.rank.emplace_back(q, max_rank_);
  return {std::move(m)};
}

void RankAlgorithm::successors(const StateSet& top, const PartialMacrostate& m, LetterId a,
                               std::vector<PartialSucc>& out) const {
  const auto& cur = as<RankMacro>(m);
  const Sgra& ba = ctx_.ba;

  StateSet domain = restrict_to_block(post(ba, top, a));
  std::vector<unsigned> bound(domain.size(), max_rank_);
  auto slot = [&domain](StateId p) {
    return static_cast<std::size_t>(std::lower_bound(domain.begin(), domain.end(), p) - domain.begin());
  };
  for (const auto& [q, r] : cur.rank) {
    for (const Transition& t : ba.outgoing(q, a)) {
      if (!member_[t.dst]) continue;
      unsigned cap = r;
      if (t.colors.contains(1) && (r % 2 == 1)) cap = r - 1;
      unsigned& b = bound[slot(t.dst)];
      b = std::min(b, cap);
    }
  }

  const bool emit = cur.obligations.empty();
  StateSet owed;  // successors of current obligations inside the block
  if (!emit) {
    for (StateId q : cur.obligations)
      for (const Transition& t : ba.outgoing(q, a))
        if (member_[t.dst]) owed.push_back(t.dst);
    normalize_set(owed);
  }

  std::vector<unsigned> level(domain.size(), 0);
  for (;;) {
    RankMacro next;
    next.rank.reserve(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
      next.rank.emplace_back(domain[i], level[i]);
      if (level[i] % 2 == 0 && (emit || set_contains(owed, domain[i]))) next.obligations.push_back(domain[i]);
    }
    out.push_back({std::move(next), emit});

    std::size_t i = 0;
    while (i < domain.size() && level[i] == bound[i]) level[i++] = 0;
    if (i == domain.size()) break;
    ++level[i];
  }
}

void RankAlgorithm::check_step(const StateSet&, const PartialMacrostate& from, LetterId a,
                               const PartialMacrostate& to) const {
  const auto& f = as<RankMacro>(from);
  const auto& g = as<RankMacro>(to);
  auto rank_in = [](const RankMacro& r, StateId q) -> std::optional<unsigned> {
    auto it = std::lower_bound(r.rank.begin(), r.rank.end(), q,
                               [](const auto& e, StateId s) { return e.first < s; });
    if (it == r.rank.end() || it->first != q) return std::nullopt;
    return it->second;
  };
  for (const auto& [q, r] : f.rank) {
    for (const Transition& t : ctx_.ba.outgoing(q, a)) {
      if (!member_[t.dst]) continue;
      auto next = rank_in(g, t.dst);
      if (!next) violated("ranked successor missing from the next level");
      if (*next > r) violated("rank increased along a transition");
      if (t.colors.contains(1) && r % 2 == 1 && *next >= r) violated("accepting transition kept an odd rank");
    }
  }
}

void RankAlgorithm::check(const StateSet& top, const PartialMacrostate& m) const {
  const auto& cur = as<RankMacro>(m);
  StateSet domain;
  for (const auto& [q, r] : cur.rank) {
    if (r > max_rank_) violated("rank above the block bound");
    domain.push_back(q);
  }
  if (domain != restrict_to_block(top)) violated("ranking domain differs from S ∩ P");
  for (StateId q : cur.obligations) {
    auto it = std::lower_bound(cur.rank.begin(), cur.rank.end(), q,
                               [](const auto& e, StateId s) { return e.first < s; });
    if (it == cur.rank.end() || it->first != q) violated("obligation outside the ranking domain");
    if (it->second % 2 != 0) violated("obligation on an odd rank");
  }
}

// ------------------------------------------------------------------ slice
//
// Slices are the leaves of the reduced split tree restricted to the block:
// each slice splits into the successors reached over accepting transitions
// (left) and the rest (right); a state keeps only its leftmost occurrence, and
// states entering the block from outside form a new rightmost slice. An
// accepting run exists iff some branch turns left infinitely often.
//
// After a nondeterministic guess every slice is labeled. An Inf slice must
// continue to the right with an Inf slice and send its left child to Die; a
// Die slice has Die children only. Die slices are checked to die out with a
// breakpoint over the tracked ones. Only the guess and the labels of entering
// slices are nondeterministic.

namespace {

using Slice = SliceMacro::Slice;
using Label = SliceMacro::Label;

struct Child {
  StateSet states;
  std::size_t parent;  // index into the current slices, or npos for entries
  bool left;
};

constexpr std::size_t kEntry = static_cast<std::size_t>(-1);

}  // namespace

std::vector<PartialMacrostate> SliceAlgorithm::init(const StateSet& top) const {
  SliceMacro m;
  StateSet d = restrict_to_block(top);
  if (!d.empty()) m.slices.push_back({std::move(d), Label::None, false});
  return {std::move(m)};
}

void SliceAlgorithm::successors(const StateSet& top, const PartialMacrostate& m, LetterId a,
                                std::vector<PartialSucc>& out) const {
  const auto& cur = as<SliceMacro>(m);
  const Sgra& ba = ctx_.ba;

  std::vector<bool> seen(ba.num_states(), false);
  std::vector<Child> children;
  auto add = [&](StateSet cand, std::size_t parent, bool left) {
    normalize_set(cand);
    StateSet fresh;
    for (StateId q : cand) {
      if (seen[q]) continue;
      seen[q] = true;
      fresh.push_back(q);
    }
    if (!fresh.empty()) children.push_back({std::move(fresh), parent, left});
  };
  for (std::size_t i = 0; i < cur.slices.size(); ++i) {
    StateSet acc;
    StateSet rest;
    for (StateId q : cur.slices[i].states) {
      for (const Transition& t : ba.outgoing(q, a)) {
        if (!member_[t.dst]) continue;
        (t.colors.contains(1) ? acc : rest).push_back(t.dst);
      }
    }
    add(std::move(acc), i, true);
    add(std::move(rest), i, false);
  }
  StateSet entering;
  for (StateId q : top) {
    if (member_[q]) continue;
    for (const Transition& t : ba.outgoing(q, a))
      if (member_[t.dst]) entering.push_back(t.dst);
  }
  add(std::move(entering), kEntry, false);

  if (!cur.guessed) {
    SliceMacro plain;
    for (Child& c : children) plain.slices.push_back({c.states, Label::None, false});
    out.push_back({plain, false});
    if (children.size() >= 20) throw Error(ErrorKind::Capacity, "NAC block too wide for slice labeling");
    const std::uint64_t guesses = std::uint64_t{1} << children.size();
    for (std::uint64_t mask = 0; mask < guesses; ++mask) {
      SliceMacro next;
      next.guessed = true;
      for (std::size_t i = 0; i < children.size(); ++i)
        next.slices.push_back({children[i].states, ((mask >> i) & 1U) ? Label::Inf : Label::Die, false});
      out.push_back({std::move(next), false});
    }
    return;
  }

  // Every Inf slice needs its right child.
  std::vector<bool> continued(cur.slices.size(), false);
  for (const Child& c : children)
    if (c.parent != kEntry && !c.left) continued[c.parent] = true;
  for (std::size_t i = 0; i < cur.slices.size(); ++i)
    if (cur.slices[i].label == Label::Inf && !continued[i]) return;

  bool owed = false;
  for (const Slice& s : cur.slices) owed = owed || s.tracked;
  const bool emit = !owed;

  SliceMacro next;
  next.guessed = true;
  std::size_t entry_slot = kEntry;
  for (const Child& c : children) {
    Slice s{c.states, Label::Die, false};
    if (c.parent == kEntry) {
      entry_slot = next.slices.size();
    } else {
      const Slice& p = cur.slices[c.parent];
      if (p.label == Label::Inf && !c.left) s.label = Label::Inf;
      s.tracked = s.label == Label::Die && (emit || p.tracked);
    }
    next.slices.push_back(std::move(s));
  }
  if (entry_slot == kEntry) {
    out.push_back({std::move(next), emit});
    return;
  }
  for (Label l : {Label::Inf, Label::Die}) {
    SliceMacro variant = next;
    variant.slices[entry_slot].label = l;
    variant.slices[entry_slot].tracked = l == Label::Die && emit;
    out.push_back({std::move(variant), emit});
  }
}

void SliceAlgorithm::check(const StateSet& top, const PartialMacrostate& m) const {
  const auto& cur = as<SliceMacro>(m);
  StateSet all;
  for (const Slice& s : cur.slices) {
    if (s.states.empty()) violated("empty slice");
    if (!set_is_subset(s.states, block_)) violated("slice escapes the NAC block");
    if ((s.label == Label::None) == cur.guessed) violated("slice label does not match the phase");
    if (s.tracked && s.label != Label::Die) violated("tracked slice is not a Die slice");
    all.insert(all.end(), s.states.begin(), s.states.end());
  }
  const std::size_t total = all.size();
  normalize_set(all);
  if (all.size() != total) violated("slices overlap");
  if (all != restrict_to_block(top)) violated("slices do not cover S ∩ P");
}

std::unique_ptr<PartialAlgorithm> make_partial_algorithm(BlockContext ctx, const Block& block, NacAlgorithm nac) {
  switch (block.kind) {
    case BlockKind::Iadac: return std::make_unique<IadacAlgorithm>(ctx, block.states);
    case BlockKind::Iwac: return std::make_unique<MhAlgorithm>(ctx, block.states);
    case BlockKind::Dac: return std::make_unique<CsbAlgorithm>(ctx, block.states);
    case BlockKind::Nac:
      if (nac == NacAlgorithm::Rank) return std::make_unique<RankAlgorithm>(ctx, block.states);
      return std::make_unique<SliceAlgorithm>(ctx, block.states);
  }
  throw Error(ErrorKind::Contract, "unknown block kind");
}

}  // namespace bacomp
