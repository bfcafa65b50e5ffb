#include "bacomp/scc.hpp"

#include <algorithm>

#include "bacomp/error.hpp"
#include "bacomp/graph.hpp"

namespace bacomp {

std::string_view to_string(SccClass c) {
  switch (c) {
    case SccClass::NonAccepting: return "nonacc";
    case SccClass::Iadac: return "iadac";
    case SccClass::Iwac: return "iwac";
    case SccClass::Dac: return "dac";
    case SccClass::Nac: return "nac";
  }
  return "?";
}

std::string_view to_string(BlockKind k) {
  switch (k) {
    case BlockKind::Iadac: return "iadac";
    case BlockKind::Iwac: return "iwac";
    case BlockKind::Dac: return "dac";
    case BlockKind::Nac: return "nac";
  }
  return "?";
}

namespace {

Adjacency adjacency_of(const Sgra& a) {
  Adjacency adj(a.num_states());
  for (const Transition& t : a.transitions()) adj[t.src].push_back(t.dst);
  for (auto& s : adj) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return adj;
}

// Distinct successors of q over letter a that satisfy `keep`.
template <typename Pred>
StateSet targets_where(const Sgra& a, StateId q, LetterId letter, Pred keep) {
  StateSet out;
  for (const Transition& t : a.outgoing(q, letter))
    if (keep(t.dst)) out.push_back(t.dst);
  normalize_set(out);
  return out;
}

}  // namespace

SccInfo sccs(const Sgra& a) {
  SccDecomposition dec = strongly_connected_components(adjacency_of(a));
  SccInfo info;
  info.scc_of = std::move(dec.component);
  info.members = std::move(dec.members);
  info.flags.resize(info.members.size());
  info.classes.assign(info.members.size(), SccClass::NonAccepting);
  for (std::size_t c = 0; c < info.members.size(); ++c) {
    if (info.members[c].size() != 1) continue;
    StateId q = info.members[c][0];
    bool self_loop = std::any_of(a.outgoing(q).begin(), a.outgoing(q).end(),
                                 [q](const Transition& t) { return t.dst == q; });
    info.flags[c].trivial = !self_loop;
  }
  return info;
}

SccInfo classify(const Sgra& ba) {
  if (!ba.is_buchi()) throw Error(ErrorKind::Contract, "classify expects a Büchi automaton");
  SccInfo info = sccs(ba);
  const std::size_t n = ba.num_states();
  const std::size_t num_sccs = info.size();

  // Accepting SCCs and cycles among non-accepting intra-SCC transitions.
  Adjacency plain(n);
  for (const Transition& t : ba.transitions()) {
    if (!info.same_scc(t.src, t.dst)) continue;
    if (t.colors.contains(1)) {
      info.flags[info.scc_of[t.src]].accepting = true;
    } else {
      plain[t.src].push_back(t.dst);
    }
  }
  std::vector<bool> plain_cycle(num_sccs, false);
  {
    SccDecomposition sub = strongly_connected_components(plain);
    for (const auto& comp : sub.members) {
      StateId q = comp[0];
      bool cyclic = comp.size() > 1 || std::find(plain[q].begin(), plain[q].end(), q) != plain[q].end();
      if (cyclic) plain_cycle[info.scc_of[q]] = true;
    }
  }

  const Adjacency reverse = transpose(adjacency_of(ba));

  for (std::size_t c = 0; c < num_sccs; ++c) {
    SccFlags& f = info.flags[c];
    const auto cid = static_cast<std::uint32_t>(c);
    f.inherently_weak = !f.accepting || !plain_cycle[c];

    f.deterministic = true;
    for (StateId q : info.members[c]) {
      for (LetterId a = 0; a < ba.num_letters() && f.deterministic; ++a) {
        auto in_c = targets_where(ba, q, a, [&](StateId p) { return info.scc_of[p] == cid; });
        if (in_c.size() > 1) f.deterministic = false;
      }
    }

    if (!f.accepting) continue;

    // In (Q, delta, I, F|C) a state is useful iff it can reach C: every state
    // of an accepting SCC lies on a cycle through an accepting transition.
    std::vector<bool> useful = reachable_from(reverse, info.members[c]);
    bool almost = true;
    bool det = true;
    for (StateId q = 0; q < n && almost; ++q) {
      if (!useful[q]) continue;
      for (LetterId a = 0; a < ba.num_letters(); ++a) {
        auto succ = targets_where(ba, q, a, [&](StateId p) { return useful[p]; });
        if (succ.size() <= 1) continue;
        det = false;
        bool any_inside = std::any_of(succ.begin(), succ.end(),
                                      [&](StateId p) { return info.same_scc(p, q); });
        if (any_inside) {
          almost = false;
          break;
        }
      }
    }
    std::size_t useful_initial =
        std::count_if(ba.initial().begin(), ba.initial().end(), [&](StateId q) { return useful[q]; });
    f.initial_almost_deterministic = almost;
    f.initial_deterministic = almost && det && useful_initial == 1;
  }

  for (std::size_t c = 0; c < num_sccs; ++c) {
    const SccFlags& f = info.flags[c];
    if (f.trivial && f.accepting) throw Error(ErrorKind::Invariant, "trivial SCC marked accepting");
    if (!f.accepting) {
      info.classes[c] = SccClass::NonAccepting;
    } else if (f.initial_almost_deterministic) {
      info.classes[c] = SccClass::Iadac;
    } else if (f.inherently_weak) {
      info.classes[c] = SccClass::Iwac;
    } else if (f.deterministic) {
      info.classes[c] = SccClass::Dac;
    } else {
      info.classes[c] = SccClass::Nac;
    }
  }
  return info;
}

bool is_elevator(const SccInfo& info) {
  return std::none_of(info.classes.begin(), info.classes.end(),
                      [](SccClass c) { return c == SccClass::Nac; });
}

Partitioning build_partitioning(const SccInfo& info) {
  StateSet iadac, iwac, dac;
  std::vector<StateSet> nacs;
  for (std::size_t c = 0; c < info.size(); ++c) {
    const StateSet& m = info.members[c];
    switch (info.classes[c]) {
      case SccClass::Iadac: iadac.insert(iadac.end(), m.begin(), m.end()); break;
      case SccClass::Iwac: iwac.insert(iwac.end(), m.begin(), m.end()); break;
      case SccClass::Dac: dac.insert(dac.end(), m.begin(), m.end()); break;
      case SccClass::Nac: nacs.push_back(m); break;
      case SccClass::NonAccepting: break;
    }
  }
  Partitioning out;
  auto add = [&out](BlockKind k, StateSet s) {
    if (s.empty()) return;
    normalize_set(s);
    out.push_back({k, std::move(s)});
  };
  add(BlockKind::Iadac, std::move(iadac));
  add(BlockKind::Iwac, std::move(iwac));
  add(BlockKind::Dac, std::move(dac));
  std::sort(nacs.begin(), nacs.end(), [](const StateSet& x, const StateSet& y) { return x.front() < y.front(); });
  for (auto& s : nacs) add(BlockKind::Nac, std::move(s));
  return out;
}

Partitioning build_mono_nac_partitioning(const SccInfo& info) {
  std::vector<StateSet> blocks;
  for (std::size_t c = 0; c < info.size(); ++c)
    if (info.flags[c].accepting) blocks.push_back(info.members[c]);
  std::sort(blocks.begin(), blocks.end(), [](const StateSet& x, const StateSet& y) { return x.front() < y.front(); });
  Partitioning out;
  for (auto& s : blocks) out.push_back({BlockKind::Nac, std::move(s)});
  return out;
}

}  // namespace bacomp
