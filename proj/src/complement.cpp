#include "bacomp/complement.hpp"

#include <deque>
#include <string>

#include "bacomp/error.hpp"
#include "bacomp/postprocess.hpp"

namespace bacomp {

namespace {

void append_set(std::vector<std::uint32_t>& key, const StateSet& s) {
  key.push_back(static_cast<std::uint32_t>(s.size()));
  key.insert(key.end(), s.begin(), s.end());
}

struct PartEncoder {
  std::vector<std::uint32_t>& key;

  void operator()(const IadacMacro& m) const { append_set(key, m.tracked); }
  void operator()(const MhMacro& m) const { append_set(key, m.brk); }
  void operator()(const CsbMacro& m) const {
    append_set(key, m.check);
    append_set(key, m.safe);
    append_set(key, m.brk);
  }
  void operator()(const RankMacro& m) const {
    key.push_back(static_cast<std::uint32_t>(m.rank.size()));
    for (const auto& [q, r] : m.rank) {
      key.push_back(q);
      key.push_back(r);
    }
    append_set(key, m.obligations);
  }
  void operator()(const SliceMacro& m) const {
    key.push_back(m.guessed ? 1 : 0);
    key.push_back(static_cast<std::uint32_t>(m.slices.size()));
    for (const auto& s : m.slices) {
      key.push_back(static_cast<std::uint32_t>(s.label) * 2 + (s.tracked ? 1 : 0));
      append_set(key, s.states);
    }
  }
};

bool uncommitted(const Macrostate& m) {
  for (const PartialMacrostate& p : m.parts) {
    if (const auto* csb = std::get_if<CsbMacro>(&p); csb != nullptr && !csb->safe.empty()) return false;
    if (const auto* sl = std::get_if<SliceMacro>(&p)) {
      for (const auto& s : sl->slices)
        if (s.label == SliceMacro::Label::Inf) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::uint32_t> encode(const Macrostate& m) {
  std::vector<std::uint32_t> key;
  append_set(key, m.reached);
  for (const PartialMacrostate& p : m.parts) {
    key.push_back(static_cast<std::uint32_t>(p.index()));
    std::visit(PartEncoder{key}, p);
  }
  return key;
}

ColorPlan make_color_plan(const Partitioning& partitioning) {
  ColorPlan plan;
  unsigned next = 1;
  for (const Block& b : partitioning) {
    if (b.kind == BlockKind::Iadac) {
      plan.has_fin = true;
      plan.block_color.push_back(0);
    } else {
      plan.block_color.push_back(next++);
    }
  }
  plan.num_colors = next;
  if (plan.num_colors > kMaxColors)
    throw Error(ErrorKind::Capacity, "complement needs " + std::to_string(plan.num_colors) + " colors");
  return plan;
}

Sgra prepare_buchi(const Sgra& a) { return remove_unreachable(normalize_colors(as_buchi(a))); }

std::size_t ComplementEngine::KeyHash::operator()(const std::vector<std::uint32_t>& k) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint32_t v : k) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

ComplementEngine::ComplementEngine(Sgra prepared, Mode mode, ComplementOptions options)
    : ba_(std::move(prepared)), info_(classify(ba_)), options_(options) {
  partitioning_ = mode == Mode::Modular ? build_partitioning(info_) : build_mono_nac_partitioning(info_);
  plan_ = make_color_plan(partitioning_);
  for (const Block& b : partitioning_) algorithms_.push_back(make_partial_algorithm({ba_, info_}, b, options_.nac));
}

std::vector<Macrostate> ComplementEngine::initial() const {
  const StateSet& init = ba_.initial();
  std::vector<Macrostate> out{Macrostate{init, {}}};
  for (const auto& alg : algorithms_) {
    std::vector<PartialMacrostate> options = alg->init(init);
    std::vector<Macrostate> grown;
    for (const Macrostate& m : out) {
      for (const PartialMacrostate& p : options) {
        Macrostate copy = m;
        copy.parts.push_back(p);
        grown.push_back(std::move(copy));
      }
    }
    out = std::move(grown);
  }
  if (options_.check_invariants)
    for (const Macrostate& m : out) check(m);
  return out;
}

void ComplementEngine::successors(const Macrostate& m, LetterId a,
                                  std::vector<std::pair<Macrostate, ColorSet>>& out) const {
  const std::size_t first = out.size();
  const std::size_t k = algorithms_.size();
  std::vector<std::vector<PartialSucc>> per_block(k);
  for (std::size_t i = 0; i < k; ++i) {
    algorithms_[i]->successors(m.reached, m.parts[i], a, per_block[i]);
    if (per_block[i].empty()) break;
  }
  StateSet reached = post(ba_, m.reached, a);
  bool blocked = false;
  for (const auto& c : per_block) blocked = blocked || c.empty();

  if (!blocked) {
    std::vector<std::size_t> pick(k, 0);
    for (;;) {
      Macrostate next{reached, {}};
      next.parts.reserve(k);
      ColorSet colors;
      for (std::size_t i = 0; i < k; ++i) {
        const PartialSucc& s = per_block[i][pick[i]];
        next.parts.push_back(s.macro);
        if (s.emit) colors.insert(plan_.block_color[i]);
      }
      out.emplace_back(std::move(next), colors);
      std::size_t i = 0;
      while (i < k && pick[i] + 1 == per_block[i].size()) pick[i++] = 0;
      if (i == k) break;
      ++pick[i];
    }
  }

  if (!options_.check_invariants) return;
  for (std::size_t j = first; j < out.size(); ++j) {
    const Macrostate& next = out[j].first;
    check(next);
    for (std::size_t i = 0; i < k; ++i) algorithms_[i]->check_step(m.reached, m.parts[i], a, next.parts[i]);
  }
  // A macrostate that has not committed to anything (no safe runs in a CSB
  // part, no Inf slice) cannot block: the branch that again commits to
  // nothing must be among the successors.
  if (!uncommitted(m)) return;
  bool found = false;
  for (std::size_t j = first; j < out.size() && !found; ++j) found = uncommitted(out[j].first);
  if (!found) throw Error(ErrorKind::Invariant, "macrostate without a non-blocking successor");
}

void ComplementEngine::check(const Macrostate& m) const {
  if (m.parts.size() != algorithms_.size()) throw Error(ErrorKind::Invariant, "macrostate part count mismatch");
  for (std::size_t i = 0; i < algorithms_.size(); ++i) algorithms_[i]->check(m.reached, m.parts[i]);
}

std::uint32_t ComplementEngine::intern(Macrostate m) {
  std::vector<std::uint32_t> key = encode(m);
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  if (states_.size() >= options_.max_macrostates)
    throw Error(ErrorKind::Capacity,
                "more than " + std::to_string(options_.max_macrostates) + " macrostates");
  auto id = static_cast<std::uint32_t>(states_.size());
  ids_.emplace(std::move(key), id);
  states_.push_back(std::move(m));
  return id;
}

Sgra ComplementEngine::materialize() {
  StateSet init;
  std::deque<std::uint32_t> queue;
  std::vector<bool> queued;
  auto visit = [&](std::uint32_t id) {
    if (id >= queued.size()) queued.resize(id + 1, false);
    if (!queued[id]) {
      queued[id] = true;
      queue.push_back(id);
    }
  };
  for (Macrostate& m : initial()) {
    std::uint32_t id = intern(std::move(m));
    init.push_back(id);
    visit(id);
  }
  std::vector<Transition> ts;
  std::vector<std::pair<Macrostate, ColorSet>> succ;
  while (!queue.empty()) {
    std::uint32_t src = queue.front();
    queue.pop_front();
    for (LetterId a = 0; a < ba_.num_letters(); ++a) {
      succ.clear();
      successors(states_[src], a, succ);
      for (auto& [next, colors] : succ) {
        std::uint32_t dst = intern(std::move(next));
        visit(dst);
        ts.push_back({src, a, dst, colors});
      }
    }
  }
  return Sgra(ba_.alphabet(), states_.size(), std::move(init), std::move(ts), plan_.num_colors, plan_.has_fin);
}

namespace {

Sgra run_complement(const Sgra& ba, ComplementEngine::Mode mode, const ComplementOptions& options,
                    ComplementStats* stats) {
  ComplementEngine engine(prepare_buchi(ba), mode, options);
  Sgra out = engine.materialize();
  if (stats != nullptr) {
    *stats = {};
    stats->in_states = ba.num_states();
    stats->macrostates = engine.num_interned();
    for (const Block& b : engine.partitioning()) {
      switch (b.kind) {
        case BlockKind::Iadac: ++stats->iadac_blocks; break;
        case BlockKind::Iwac: ++stats->iwac_blocks; break;
        case BlockKind::Dac: ++stats->dac_blocks; break;
        case BlockKind::Nac: ++stats->nac_blocks; break;
      }
    }
  }
  if (options.postprocess) out = trim(out);
  if (stats != nullptr) stats->out_states = out.num_states();
  return out;
}

}  // namespace

Sgra complement(const Sgra& ba, const ComplementOptions& options, ComplementStats* stats) {
  return run_complement(ba, ComplementEngine::Mode::Modular, options, stats);
}

Sgra complement_mono_nac(const Sgra& ba, const ComplementOptions& options, ComplementStats* stats) {
  return run_complement(ba, ComplementEngine::Mode::MonoNac, options, stats);
}

}  // namespace bacomp
