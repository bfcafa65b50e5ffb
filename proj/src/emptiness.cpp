#include "bacomp/emptiness.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "bacomp/graph.hpp"

namespace bacomp {

ExplicitView::ExplicitView(const Sgra& a)
    : colors_(a.num_colors()), initial_(a.initial().begin(), a.initial().end()), edges_(a.num_states()) {
  for (const Transition& t : a.transitions()) edges_[t.src].push_back({t.letter, t.dst, t.colors});
}

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

using TransId = std::uint32_t;

struct TransRec {
  NodeId src;
  NodeId dst;
  ColorSet colors;
};

// One stack entry: a set of transitions forming a path segment, or a cycle
// once something has been merged into it.
struct Frame {
  std::vector<TransId> trans;
  std::vector<TransId> pending;  // outgoing transitions of the targets, next one last
  ColorSet colors;
  bool cyclic = false;
};

class LazySearch {
 public:
  LazySearch(ImplicitSgra& a, EmptinessStats* stats) : a_(a), stats_(stats) {
    for (unsigned c = 1; c < a.num_colors(); ++c) need_.insert(c);
  }

  bool run() {
    for (NodeId q : a_.initial()) schedule(q);
    while (!entry_.empty()) {
      TransId t = entry_.front();
      entry_.pop_front();
      if (explored_[t]) continue;
      if (explore(t)) return false;
    }
    return true;
  }

 private:
  // Transition ids of `node`'s outgoing list, fetching it on first use.
  std::pair<TransId, TransId> out(NodeId node) {
    if (node >= span_.size()) span_.resize(node + 1, {kNone, kNone});
    if (span_[node].first == kNone) {
      auto lo = static_cast<TransId>(trans_.size());
      for (const ImplicitEdge& e : a_.outgoing(node)) trans_.push_back({node, e.target, e.colors});
      explored_.resize(trans_.size(), false);
      span_[node] = {lo, static_cast<TransId>(trans_.size())};
    }
    return span_[node];
  }

  void schedule(NodeId node) {
    auto [lo, hi] = out(node);
    for (TransId t = lo; t < hi; ++t)
      if (!explored_[t]) entry_.push_back(t);
  }

  std::uint32_t& occurrence(NodeId s) {
    if (s >= occ_.size()) occ_.resize(s + 1, kNone);
    return occ_[s];
  }

  void note(NodeId s, std::uint32_t level) {
    std::uint32_t& o = occurrence(s);
    o = std::min(o, level);
  }

  // Pushes a frame for t; returns true when a merge produced an accepting cycle.
  bool push(TransId t) {
    const TransRec rec = trans_[t];
    auto level = static_cast<std::uint32_t>(stack_.size());
    Frame f;
    f.trans.push_back(t);
    f.colors = rec.colors;
    auto [lo, hi] = out(rec.dst);
    for (TransId u = hi; u > lo; --u) f.pending.push_back(u - 1);
    stack_.push_back(std::move(f));
    note(rec.src, level);
    if (stats_ != nullptr) stats_->peak_stack_depth = std::max(stats_->peak_stack_depth, stack_.size());

    const std::uint32_t at = occurrence(rec.dst);
    if (at == kNone) return false;
    Frame& into = stack_[at];
    for (std::size_t i = at + 1; i < stack_.size(); ++i) {
      Frame& from = stack_[i];
      into.trans.insert(into.trans.end(), from.trans.begin(), from.trans.end());
      into.pending.insert(into.pending.end(), from.pending.begin(), from.pending.end());
      into.colors |= from.colors;
    }
    stack_.resize(at + 1);
    into.cyclic = true;
    for (TransId u : into.trans) {
      note(trans_[u].src, at);
      note(trans_[u].dst, at);
    }
    return into.colors.includes(need_);
  }

  void pop() {
    auto level = static_cast<std::uint32_t>(stack_.size() - 1);
    const Frame& f = stack_.back();
    for (TransId u : f.trans) {
      if (occ_[trans_[u].src] == level) occ_[trans_[u].src] = kNone;
      if (f.cyclic && occ_[trans_[u].dst] == level) occ_[trans_[u].dst] = kNone;
    }
    stack_.pop_back();
  }

  // Returns true as soon as an accepting cycle is found.
  bool explore(TransId root) {
    // Each activation owns the frame it pushed; it pops that frame only if no
    // deeper merge has folded it into a lower one.
    std::vector<std::size_t> owners;
    auto begin = [&](TransId t) -> bool {
      explored_[t] = true;
      if (stats_ != nullptr) ++stats_->explored_transitions;
      if (trans_[t].colors.contains(0)) {
        schedule(trans_[t].dst);
        return false;
      }
      owners.push_back(stack_.size());
      return push(t);
    };
    if (begin(root)) return true;
    while (!owners.empty()) {
      Frame& top = stack_.back();
      if (!top.pending.empty()) {
        TransId t = top.pending.back();
        top.pending.pop_back();
        if (!explored_[t] && begin(t)) return true;
        continue;
      }
      if (stack_.size() == owners.back() + 1) pop();
      owners.pop_back();
    }
    return false;
  }

  ImplicitSgra& a_;
  EmptinessStats* stats_;
  ColorSet need_;
  std::vector<TransRec> trans_;
  std::vector<bool> explored_;
  std::vector<std::pair<TransId, TransId>> span_;
  std::deque<TransId> entry_;
  std::vector<Frame> stack_;
  std::vector<std::uint32_t> occ_;
};

}  // namespace

bool is_empty(ImplicitSgra& a, EmptinessStats* stats) {
  if (stats != nullptr) *stats = {};
  return LazySearch(a, stats).run();
}

bool is_empty(const Sgra& a, EmptinessStats* stats) {
  ExplicitView view(a);
  return is_empty(view, stats);
}

bool is_empty_oracle(const Sgra& a) {
  Adjacency full(a.num_states());
  Adjacency fin_free(a.num_states());
  for (const Transition& t : a.transitions()) {
    full[t.src].push_back(t.dst);
    if (!t.colors.contains(0)) fin_free[t.src].push_back(t.dst);
  }
  const std::vector<bool> seen = reachable_from(full, a.initial());
  const SccDecomposition dec = strongly_connected_components(fin_free);
  std::vector<ColorSet> inner(dec.members.size());
  std::vector<bool> cyclic(dec.members.size(), false);
  for (const Transition& t : a.transitions()) {
    if (t.colors.contains(0) || !seen[t.src]) continue;
    std::uint32_t c = dec.component[t.src];
    if (c != dec.component[t.dst]) continue;
    inner[c] |= t.colors;
    cyclic[c] = true;
  }
  const ColorSet need = a.inf_colors();
  for (std::size_t c = 0; c < inner.size(); ++c)
    if (cyclic[c] && inner[c].includes(need)) return false;
  return true;
}

}  // namespace bacomp
