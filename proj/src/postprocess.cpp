#include "bacomp/postprocess.hpp"

#include <algorithm>
#include <limits>

#include "bacomp/graph.hpp"

namespace bacomp {

namespace {

Sgra keep_states(const Sgra& a, const std::vector<bool>& keep) {
  constexpr StateId kDropped = std::numeric_limits<StateId>::max();
  std::vector<StateId> id(a.num_states(), kDropped);
  StateId next = 0;
  for (StateId q = 0; q < a.num_states(); ++q)
    if (keep[q]) id[q] = next++;
  StateSet init;
  for (StateId q : a.initial())
    if (keep[q]) init.push_back(id[q]);
  std::vector<Transition> ts;
  for (const Transition& t : a.transitions())
    if (keep[t.src] && keep[t.dst]) ts.push_back({id[t.src], t.letter, id[t.dst], t.colors});
  return Sgra(a.alphabet(), next, std::move(init), std::move(ts), a.num_colors(), a.fin_used());
}

}  // namespace

Sgra remove_unreachable(const Sgra& a) { return keep_states(a, reachable_states(a)); }

Sgra trim(const Sgra& a) {
  const std::size_t n = a.num_states();
  Adjacency full(n);
  Adjacency fin_free(n);
  for (const Transition& t : a.transitions()) {
    full[t.src].push_back(t.dst);
    if (!t.colors.contains(0)) fin_free[t.src].push_back(t.dst);
  }
  const SccDecomposition dec = strongly_connected_components(fin_free);
  std::vector<ColorSet> inner(dec.members.size());
  std::vector<bool> has_inner(dec.members.size(), false);
  for (const Transition& t : a.transitions()) {
    if (t.colors.contains(0)) continue;
    std::uint32_t c = dec.component[t.src];
    if (c != dec.component[t.dst]) continue;
    inner[c] |= t.colors;
    has_inner[c] = true;
  }
  std::vector<std::uint32_t> good;
  const ColorSet need = a.inf_colors();
  for (std::uint32_t c = 0; c < dec.members.size(); ++c) {
    if (has_inner[c] && inner[c].includes(need))
      good.insert(good.end(), dec.members[c].begin(), dec.members[c].end());
  }
  std::vector<bool> useful = reachable_from(transpose(full), good);
  std::vector<bool> reach = reachable_from(full, a.initial());
  std::vector<bool> keep(n);
  for (std::size_t q = 0; q < n; ++q) keep[q] = useful[q] && reach[q];
  return keep_states(a, keep);
}

}  // namespace bacomp
