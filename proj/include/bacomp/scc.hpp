#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "bacomp/automaton.hpp"

namespace bacomp {

enum class SccClass { NonAccepting, Iadac, Iwac, Dac, Nac };

std::string_view to_string(SccClass c);

struct SccFlags {
  bool trivial = false;
  bool accepting = false;
  bool inherently_weak = false;
  bool deterministic = false;
  bool initial_deterministic = false;
  bool initial_almost_deterministic = false;
};

/// SCC structure of an automaton. Ids are ordered sources first: a
/// transition p -> q implies scc_of[p] <= scc_of[q].
struct SccInfo {
  std::vector<std::uint32_t> scc_of;
  std::vector<StateSet> members;
  std::vector<SccFlags> flags;
  std::vector<SccClass> classes;

  std::size_t size() const { return members.size(); }
  bool same_scc(StateId p, StateId q) const { return scc_of[p] == scc_of[q]; }
};

/// Raw decomposition: only the `trivial` flag is filled in and every class
/// is NonAccepting.
SccInfo sccs(const Sgra& a);

/// Full classification of a normalized BA. Throws Error(Contract) for
/// non-BA input.
SccInfo classify(const Sgra& ba);

/// True iff no SCC is a NAC.
bool is_elevator(const SccInfo& info);

enum class BlockKind { Iadac, Iwac, Dac, Nac };

std::string_view to_string(BlockKind k);

struct Block {
  BlockKind kind;
  StateSet states;

  bool operator==(const Block&) const = default;
};

using Partitioning = std::vector<Block>;

/// One block for all IADACs, one for all IWACs, one for all DACs and one per
/// NAC, in that order; NAC blocks by ascending smallest state.
Partitioning build_partitioning(const SccInfo& info);

/// Every accepting SCC becomes its own NAC block.
Partitioning build_mono_nac_partitioning(const SccInfo& info);

}  // namespace bacomp
