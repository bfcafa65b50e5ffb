#include "bacomp/oracle.hpp"

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <tuple>

#include "bacomp/error.hpp"
#include "bacomp/graph.hpp"

namespace bacomp {

bool member(const Sgra& a, const LassoWord& w) {
  if (w.period.empty()) throw Error(ErrorKind::Contract, "lasso period must be nonempty");
  for (LetterId l : w.prefix)
    if (l >= a.num_letters()) throw Error(ErrorKind::AlphabetMismatch, "lasso letter outside the alphabet");
  for (LetterId l : w.period)
    if (l >= a.num_letters()) throw Error(ErrorKind::AlphabetMismatch, "lasso letter outside the alphabet");

  StateSet reached = a.initial();
  for (LetterId l : w.prefix) reached = post(a, reached, l);
  if (reached.empty()) return false;

  const std::size_t len = w.period.size();
  const std::size_t nodes = a.num_states() * len;
  auto node = [len](StateId q, std::size_t i) { return static_cast<std::uint32_t>(q * len + i); };

  Adjacency full(nodes);
  Adjacency fin_free(nodes);
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (std::size_t i = 0; i < len; ++i) {
      for (const Transition& t : a.outgoing(q, w.period[i])) {
        std::uint32_t to = node(t.dst, (i + 1) % len);
        full[node(q, i)].push_back(to);
        if (!t.colors.contains(0)) fin_free[node(q, i)].push_back(to);
      }
    }
  }
  const SccDecomposition dec = strongly_connected_components(fin_free);
  std::vector<ColorSet> inner(dec.members.size());
  std::vector<bool> cyclic(dec.members.size(), false);
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (std::size_t i = 0; i < len; ++i) {
      for (const Transition& t : a.outgoing(q, w.period[i])) {
        if (t.colors.contains(0)) continue;
        std::uint32_t from = node(q, i);
        std::uint32_t to = node(t.dst, (i + 1) % len);
        if (dec.component[from] != dec.component[to]) continue;
        inner[dec.component[from]] |= t.colors;
        cyclic[dec.component[from]] = true;
      }
    }
  }

  std::vector<std::uint32_t> roots;
  for (StateId r : reached) roots.push_back(node(r, 0));
  const std::vector<bool> seen = reachable_from(full, roots);
  const ColorSet need = a.inf_colors();
  for (std::uint32_t v = 0; v < nodes; ++v) {
    std::uint32_t c = dec.component[v];
    if (seen[v] && cyclic[c] && inner[c].includes(need)) return true;
  }
  return false;
}

void for_each_lasso(std::size_t num_letters, std::size_t max_prefix, std::size_t max_period,
                    const std::function<void(const LassoWord&)>& fn) {
  // All words of length n in lexicographic order, by odometer.
  auto words = [num_letters](std::size_t n) {
    std::vector<std::vector<LetterId>> out;
    std::vector<LetterId> w(n, 0);
    for (;;) {
      out.push_back(w);
      std::size_t i = n;
      while (i > 0 && w[i - 1] + 1 == num_letters) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
    return out;
  };
  if (num_letters == 0 || max_period == 0) return;
  std::vector<std::vector<LetterId>> periods;
  for (std::size_t n = 1; n <= max_period; ++n)
    for (auto& w : words(n)) periods.push_back(std::move(w));
  for (std::size_t n = 0; n <= max_prefix; ++n)
    for (const auto& u : words(n))
      for (const auto& v : periods) fn(LassoWord{u, v});
}

std::vector<LassoWord> enumerate_lassos(std::size_t num_letters, std::size_t max_prefix, std::size_t max_period) {
  std::vector<LassoWord> out;
  for_each_lasso(num_letters, max_prefix, max_period, [&out](const LassoWord& w) { out.push_back(w); });
  return out;
}

Alphabet generated_alphabet(std::size_t letters) {
  if (letters == 0) throw Error(ErrorKind::Contract, "alphabet must be nonempty");
  if ((letters & (letters - 1)) == 0) {
    std::vector<std::string> aps;
    for (std::size_t n = letters; n > 1; n >>= 1) aps.push_back("p" + std::to_string(aps.size()));
    return Alphabet::from_aps(std::move(aps));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < letters; ++i) labels.push_back("l" + std::to_string(i));
  return Alphabet::from_labels(std::move(labels));
}

Sgra random_ba(const RandomBaParams& p) {
  if (p.states == 0) throw Error(ErrorKind::Contract, "random_ba needs at least one state");
  if (!(p.density > 0)) throw Error(ErrorKind::Contract, "random_ba density must be positive");
  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<StateId> pick_state(0, static_cast<StateId>(p.states - 1));
  std::bernoulli_distribution accepting(p.acc_prob);
  const auto per_letter = static_cast<std::size_t>(std::ceil(p.density * static_cast<double>(p.states)));

  std::map<std::tuple<StateId, LetterId, StateId>, ColorSet> edges;
  for (LetterId a = 0; a < p.letters; ++a) {
    for (std::size_t i = 0; i < per_letter; ++i) {
      StateId src = pick_state(rng);
      StateId dst = pick_state(rng);
      ColorSet c = accepting(rng) ? ColorSet::single(1) : ColorSet{};
      edges[{src, a, dst}] |= c;
    }
  }
  std::vector<Transition> ts;
  for (const auto& [k, c] : edges) ts.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), c});
  return normalize_colors(Sgra::buchi(generated_alphabet(p.letters), p.states, {0}, std::move(ts)));
}

Sgra random_deterministic_ba(std::uint64_t seed, std::size_t states, std::size_t letters, double fill,
                             double acc_prob) {
  if (states == 0) throw Error(ErrorKind::Contract, "random_deterministic_ba needs at least one state");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<StateId> pick_state(0, static_cast<StateId>(states - 1));
  std::bernoulli_distribution present(fill);
  std::bernoulli_distribution accepting(acc_prob);
  std::vector<Transition> ts;
  for (StateId q = 0; q < states; ++q) {
    for (LetterId a = 0; a < letters; ++a) {
      if (!present(rng)) continue;
      StateId dst = pick_state(rng);
      ts.push_back({q, a, dst, accepting(rng) ? ColorSet::single(1) : ColorSet{}});
    }
  }
  return normalize_colors(Sgra::buchi(generated_alphabet(letters), states, {0}, std::move(ts)));
}

Sgra random_sgra(const RandomSgraParams& p) {
  std::mt19937_64 rng(p.seed);
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t n = uniform(1, p.max_states);
  const std::size_t letters = uniform(1, p.max_letters);
  const auto k = static_cast<unsigned>(uniform(1, p.max_colors));
  const bool fin_used = std::bernoulli_distribution(0.6)(rng);
  std::bernoulli_distribution colored(0.35);

  const std::size_t count = uniform(n, 2 * n * letters);
  std::vector<Transition> ts;
  for (std::size_t i = 0; i < count; ++i) {
    Transition t{static_cast<StateId>(uniform(0, n - 1)), static_cast<LetterId>(uniform(0, letters - 1)),
                 static_cast<StateId>(uniform(0, n - 1)), ColorSet{}};
    for (unsigned c = fin_used ? 0 : 1; c < k; ++c)
      if (colored(rng)) t.colors.insert(c);
    ts.push_back(t);
  }
  StateSet init{static_cast<StateId>(uniform(0, n - 1))};
  if (std::bernoulli_distribution(0.3)(rng)) init.push_back(static_cast<StateId>(uniform(0, n - 1)));
  return Sgra(generated_alphabet(letters), n, std::move(init), std::move(ts), k, fin_used);
}

}  // namespace bacomp
