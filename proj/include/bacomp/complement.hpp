#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bacomp/automaton.hpp"
#include "bacomp/partial.hpp"
#include "bacomp/scc.hpp"

namespace bacomp {

/// Top-level complement state: the reached set plus one partial macrostate
/// per instantiated block, in partitioning order.
struct Macrostate {
  StateSet reached;
  std::vector<PartialMacrostate> parts;

  bool operator==(const Macrostate&) const = default;
};

/// Canonical integer encoding of a macrostate, used for interning.
std::vector<std::uint32_t> encode(const Macrostate& m);

/// Colors owned by the blocks. The IADAC block, when present, owns the Fin
/// color 0; every other block gets its own Inf color 1, 2, ... in block order.
struct ColorPlan {
  bool has_fin = false;
  std::vector<unsigned> block_color;
  unsigned num_colors = 1;
};

ColorPlan make_color_plan(const Partitioning& partitioning);

struct ComplementOptions {
  std::size_t max_macrostates = 1'000'000;
  bool check_invariants = false;
  bool postprocess = true;
  NacAlgorithm nac = NacAlgorithm::Slice;
};

struct ComplementStats {
  std::size_t in_states = 0;
  std::size_t out_states = 0;
  std::size_t macrostates = 0;
  std::size_t iadac_blocks = 0;
  std::size_t iwac_blocks = 0;
  std::size_t dac_blocks = 0;
  std::size_t nac_blocks = 0;
};

/// Converts to a BA, strips inter-SCC colors and drops unreachable states.
Sgra prepare_buchi(const Sgra& a);

/// On-demand successor generation for the modular complement of a prepared
/// BA, with macrostate interning. Mode::Modular uses one block for all IADACs,
/// one for all IWACs, one for all DACs and one per NAC; Mode::MonoNac hands
/// every accepting SCC to the NAC algorithm. Not copyable or movable:
/// partial algorithms refer to the owned automaton.
class ComplementEngine {
 public:
  enum class Mode { Modular, MonoNac };

  ComplementEngine(Sgra prepared, Mode mode, ComplementOptions options);
  ComplementEngine(const ComplementEngine&) = delete;
  ComplementEngine& operator=(const ComplementEngine&) = delete;

  const Sgra& automaton() const { return ba_; }
  const SccInfo& scc_info() const { return info_; }
  const Partitioning& partitioning() const { return partitioning_; }
  const ColorPlan& plan() const { return plan_; }

  std::vector<Macrostate> initial() const;
  /// Appends every (successor, colors) pair of `m` over `a`.
  void successors(const Macrostate& m, LetterId a, std::vector<std::pair<Macrostate, ColorSet>>& out) const;

  /// Returns the id of `m`, assigning the next free id on first sight.
  /// Throws Error(Capacity) past the configured cap.
  std::uint32_t intern(Macrostate m);
  const Macrostate& macrostate(std::uint32_t id) const { return states_[id]; }
  std::size_t num_interned() const { return states_.size(); }

  /// BFS materialization; macrostate ids follow discovery order.
  Sgra materialize();

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& k) const noexcept;
  };

  void check(const Macrostate& m) const;

  Sgra ba_;
  SccInfo info_;
  Partitioning partitioning_;
  ColorPlan plan_;
  ComplementOptions options_;
  std::vector<std::unique_ptr<PartialAlgorithm>> algorithms_;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, KeyHash> ids_;
  std::vector<Macrostate> states_;
};

/// Complement of a BA (or of a "t"-accepting automaton, read as a BA).
Sgra complement(const Sgra& ba, const ComplementOptions& options = {}, ComplementStats* stats = nullptr);

/// Same contract as complement(), with every accepting SCC in its own NAC block.
Sgra complement_mono_nac(const Sgra& ba, const ComplementOptions& options = {},
                         ComplementStats* stats = nullptr);

}  // namespace bacomp
