#include "bacomp/inclusion.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <utility>

#include "bacomp/error.hpp"
#include "bacomp/postprocess.hpp"

namespace bacomp {

Sgra align_alphabet(const Sgra& a, const Alphabet& target) {
  const Alphabet& from = a.alphabet();
  if (from == target) return a;
  if (from.has_aps() && target.has_aps()) {
    const auto& src = *from.ap_names();
    const auto& dst = *target.ap_names();
    std::vector<std::string> s1 = src;
    std::vector<std::string> s2 = dst;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) throw Error(ErrorKind::AlphabetMismatch, "automata use different atomic propositions");
    std::vector<std::size_t> pos(src.size());
    for (std::size_t i = 0; i < src.size(); ++i)
      pos[i] = static_cast<std::size_t>(std::find(dst.begin(), dst.end(), src[i]) - dst.begin());
    std::vector<Transition> ts(a.transitions().begin(), a.transitions().end());
    for (Transition& t : ts) {
      LetterId v = 0;
      for (std::size_t i = 0; i < src.size(); ++i)
        if ((t.letter >> i) & 1U) v |= LetterId{1} << pos[i];
      t.letter = v;
    }
    return Sgra(target, a.num_states(), a.initial(), std::move(ts), a.num_colors(), a.fin_used());
  }
  std::vector<std::string> l1 = from.labels();
  std::vector<std::string> l2 = target.labels();
  std::sort(l1.begin(), l1.end());
  std::sort(l2.begin(), l2.end());
  if (l1 != l2) throw Error(ErrorKind::AlphabetMismatch, "automata use different alphabets");
  return relabel(a, target);
}

namespace {

Sgra prepare_left(const Sgra& a1, const Sgra& a2) {
  return remove_unreachable(normalize_colors(as_buchi(align_alphabet(a1, a2.alphabet()))));
}

}  // namespace

ProductAutomaton::ProductAutomaton(const Sgra& left, const Sgra& right, const ComplementOptions& options)
    : left_(prepare_left(left, right)),
      engine_(prepare_buchi(right), ComplementEngine::Mode::Modular, options),
      left_color_(engine_.plan().num_colors) {
  if (left_color_ + 1 > kMaxColors) throw Error(ErrorKind::Capacity, "product needs more than 64 colors");
}

NodeId ProductAutomaton::intern(StateId left, std::uint32_t right) {
  const std::uint64_t key = (std::uint64_t{left} << 32) | right;
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  auto id = static_cast<NodeId>(nodes_.size());
  ids_.emplace(key, id);
  nodes_.push_back({left, right});
  edges_.emplace_back();
  expanded_.push_back(false);
  return id;
}

std::vector<NodeId> ProductAutomaton::initial() {
  std::vector<std::uint32_t> rights;
  for (Macrostate& m : engine_.initial()) rights.push_back(engine_.intern(std::move(m)));
  std::vector<NodeId> out;
  for (StateId q : left_.initial())
    for (std::uint32_t r : rights) out.push_back(intern(q, r));
  return out;
}

const std::vector<ImplicitEdge>& ProductAutomaton::outgoing(NodeId node) {
  if (expanded_[node]) return edges_[node];
  const Node n = nodes_[node];
  std::vector<ImplicitEdge> out;
  std::vector<std::pair<Macrostate, ColorSet>> succ;
  std::vector<std::pair<std::uint32_t, ColorSet>> rights;
  for (LetterId a = 0; a < left_.num_letters(); ++a) {
    auto left_moves = left_.outgoing(n.left, a);
    if (left_moves.empty()) continue;
    succ.clear();
    rights.clear();
    // engine_.macrostate() references may move while interning, so copy first.
    const Macrostate from = engine_.macrostate(n.right);
    engine_.successors(from, a, succ);
    for (auto& [m, colors] : succ) rights.emplace_back(engine_.intern(std::move(m)), colors);
    for (const Transition& t : left_moves) {
      for (const auto& [r, colors] : rights) {
        ColorSet c = colors;
        if (t.colors.contains(1)) c.insert(left_color_);
        out.push_back({a, intern(t.dst, r), c});
      }
    }
  }
  edges_[node] = std::move(out);
  expanded_[node] = true;
  return edges_[node];
}

bool included(const Sgra& a1, const Sgra& a2, const ComplementOptions& options, InclusionStats* stats) {
  ProductAutomaton product(a1, a2, options);
  EmptinessStats es;
  const bool empty = is_empty(product, &es);
  if (stats != nullptr) {
    stats->product_states = product.num_states();
    stats->explored_transitions = es.explored_transitions;
  }
  return empty;
}

bool included_oracle(const Sgra& a1, const Sgra& a2, const ComplementOptions& options,
                     std::size_t* product_states) {
  const Sgra left = prepare_left(a1, a2);
  ComplementOptions untrimmed = options;
  untrimmed.postprocess = false;
  const Sgra right = complement(a2, untrimmed);
  const unsigned left_color = right.num_colors();
  if (left_color + 1 > kMaxColors) throw Error(ErrorKind::Capacity, "product needs more than 64 colors");

  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::deque<std::pair<StateId, StateId>> queue;
  auto id_of = [&](StateId p, StateId q) {
    auto [it, fresh] = ids.emplace(std::make_pair(p, q), static_cast<StateId>(ids.size()));
    if (fresh) queue.emplace_back(p, q);
    return it->second;
  };
  StateSet init;
  for (StateId p : left.initial())
    for (StateId q : right.initial()) init.push_back(id_of(p, q));
  std::vector<Transition> ts;
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    const StateId src = ids.at({p, q});
    for (LetterId a = 0; a < left.num_letters(); ++a) {
      for (const Transition& t1 : left.outgoing(p, a)) {
        for (const Transition& t2 : right.outgoing(q, a)) {
          ColorSet c = t2.colors;
          if (t1.colors.contains(1)) c.insert(left_color);
          ts.push_back({src, a, id_of(t1.dst, t2.dst), c});
        }
      }
    }
  }
  if (product_states != nullptr) *product_states = ids.size();
  const Sgra product(left.alphabet(), ids.size(), std::move(init), std::move(ts), left_color + 1, right.fin_used());
  return is_empty_oracle(product);
}

}  // namespace bacomp
