#include "bacomp/bacomp.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "bacomp/automaton.hpp"
#include "bacomp/complement.hpp"
#include "bacomp/emptiness.hpp"
#include "bacomp/error.hpp"
#include "bacomp/hoa_io.hpp"
#include "bacomp/inclusion.hpp"
#include "bacomp/oracle.hpp"
#include "bacomp/postprocess.hpp"
#include "bacomp/scc.hpp"

struct bacomp_automaton {
  bacomp::Sgra sgra;
};

struct bacomp_analysis {
  bacomp::SccInfo info;
};

namespace {

thread_local std::string last_error;

bacomp_status status_of(bacomp::ErrorKind k) {
  switch (k) {
    case bacomp::ErrorKind::Parse: return BACOMP_ERR_PARSE;
    case bacomp::ErrorKind::UnsupportedAcceptance: return BACOMP_ERR_UNSUPPORTED_ACCEPTANCE;
    case bacomp::ErrorKind::Capacity: return BACOMP_ERR_CAPACITY;
    case bacomp::ErrorKind::Contract: return BACOMP_ERR_CONTRACT;
    case bacomp::ErrorKind::AlphabetMismatch: return BACOMP_ERR_ALPHABET_MISMATCH;
    case bacomp::ErrorKind::Invariant: return BACOMP_ERR_INVARIANT;
  }
  return BACOMP_ERR_INTERNAL;
}

// Runs fn, translating exceptions into a status and the thread's message.
template <typename Fn>
bacomp_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return BACOMP_OK;
  } catch (const bacomp::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BACOMP_ERR_CAPACITY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BACOMP_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return BACOMP_ERR_INTERNAL;
  }
}

bacomp_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return BACOMP_ERR_NULL_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

bacomp::ComplementOptions to_options(const bacomp_complement_options* opts) {
  bacomp_complement_options o;
  bacomp_complement_options_init(&o);
  if (opts != nullptr) o = *opts;
  bacomp::ComplementOptions out;
  out.max_macrostates = o.max_macrostates;
  out.postprocess = o.postprocess != 0;
  out.check_invariants = o.check_invariants != 0;
  out.nac = o.nac_alg == BACOMP_NAC_RANK ? bacomp::NacAlgorithm::Rank : bacomp::NacAlgorithm::Slice;
  return out;
}

bacomp_scc_class to_c(bacomp::SccClass c) {
  switch (c) {
    case bacomp::SccClass::NonAccepting: return BACOMP_SCC_NONACC;
    case bacomp::SccClass::Iadac: return BACOMP_SCC_IADAC;
    case bacomp::SccClass::Iwac: return BACOMP_SCC_IWAC;
    case bacomp::SccClass::Dac: return BACOMP_SCC_DAC;
    case bacomp::SccClass::Nac: return BACOMP_SCC_NAC;
  }
  return BACOMP_SCC_NONACC;
}

}  // namespace

extern "C" {

const char* bacomp_last_error(void) { return last_error.c_str(); }

const char* bacomp_status_prefix(bacomp_status status) {
  switch (status) {
    case BACOMP_OK: return "ok";
    case BACOMP_ERR_PARSE: return bacomp::error_prefix(bacomp::ErrorKind::Parse);
    case BACOMP_ERR_UNSUPPORTED_ACCEPTANCE: return bacomp::error_prefix(bacomp::ErrorKind::UnsupportedAcceptance);
    case BACOMP_ERR_CAPACITY: return bacomp::error_prefix(bacomp::ErrorKind::Capacity);
    case BACOMP_ERR_CONTRACT: return bacomp::error_prefix(bacomp::ErrorKind::Contract);
    case BACOMP_ERR_ALPHABET_MISMATCH: return bacomp::error_prefix(bacomp::ErrorKind::AlphabetMismatch);
    case BACOMP_ERR_INVARIANT: return bacomp::error_prefix(bacomp::ErrorKind::Invariant);
    case BACOMP_ERR_NULL_ARGUMENT: return "null-argument";
    case BACOMP_ERR_INTERNAL: return "internal";
  }
  return "internal";
}

const char* bacomp_version(void) { return "0.1.0"; }

bacomp_status bacomp_parse_hoa(const char* text, size_t max_aps, bacomp_automaton** out) {
  if (text == nullptr) return null_argument("text");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new bacomp_automaton{bacomp::parse_hoa(text, max_aps)}; });
}

bacomp_status bacomp_parse_ba(const char* text, bacomp_automaton** out) {
  if (text == nullptr) return null_argument("text");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new bacomp_automaton{bacomp::parse_ba(text)}; });
}

bacomp_status bacomp_random_ba(uint64_t seed, size_t states, size_t letters, double density, double acc_prob,
                               bacomp_automaton** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    bacomp::RandomBaParams p;
    p.seed = seed;
    p.states = states;
    p.letters = letters;
    p.density = density;
    p.acc_prob = acc_prob;
    *out = new bacomp_automaton{bacomp::random_ba(p)};
  });
}

void bacomp_automaton_free(bacomp_automaton* a) { delete a; }

bacomp_status bacomp_print_hoa(const bacomp_automaton* a, char** out) {
  if (a == nullptr) return null_argument("a");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = dup_string(bacomp::print_hoa(a->sgra)); });
}

bacomp_status bacomp_print_ba(const bacomp_automaton* a, char** out) {
  if (a == nullptr) return null_argument("a");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = dup_string(bacomp::print_ba(a->sgra)); });
}

void bacomp_string_free(char* s) { std::free(s); }

size_t bacomp_num_states(const bacomp_automaton* a) { return a == nullptr ? 0 : a->sgra.num_states(); }
size_t bacomp_num_letters(const bacomp_automaton* a) { return a == nullptr ? 0 : a->sgra.num_letters(); }
size_t bacomp_num_transitions(const bacomp_automaton* a) {
  return a == nullptr ? 0 : a->sgra.transitions().size();
}
unsigned bacomp_num_colors(const bacomp_automaton* a) { return a == nullptr ? 0 : a->sgra.num_colors(); }
int bacomp_fin_used(const bacomp_automaton* a) { return a != nullptr && a->sgra.fin_used() ? 1 : 0; }

void bacomp_complement_options_init(bacomp_complement_options* opts) {
  if (opts == nullptr) return;
  const bacomp::ComplementOptions d;
  opts->max_macrostates = d.max_macrostates;
  opts->postprocess = d.postprocess ? 1 : 0;
  opts->check_invariants = d.check_invariants ? 1 : 0;
  opts->nac_alg = BACOMP_NAC_SLICE;
}

bacomp_status bacomp_complement(const bacomp_automaton* a, const bacomp_complement_options* opts,
                                bacomp_automaton** out, bacomp_complement_stats* stats) {
  if (a == nullptr) return null_argument("a");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    bacomp::ComplementStats s;
    const bool mono = opts != nullptr && opts->nac_alg == BACOMP_NAC_MONO;
    bacomp::Sgra result = mono ? bacomp::complement_mono_nac(a->sgra, to_options(opts), &s)
                               : bacomp::complement(a->sgra, to_options(opts), &s);
    if (stats != nullptr) {
      stats->in_states = s.in_states;
      stats->out_states = s.out_states;
      stats->macrostates = s.macrostates;
      stats->iadac_blocks = s.iadac_blocks;
      stats->iwac_blocks = s.iwac_blocks;
      stats->dac_blocks = s.dac_blocks;
      stats->nac_blocks = s.nac_blocks;
    }
    *out = new bacomp_automaton{std::move(result)};
  });
}

bacomp_status bacomp_is_empty(const bacomp_automaton* a, int* empty) {
  if (a == nullptr) return null_argument("a");
  if (empty == nullptr) return null_argument("empty");
  return guarded([&] { *empty = bacomp::is_empty(a->sgra) ? 1 : 0; });
}

bacomp_status bacomp_included(const bacomp_automaton* a1, const bacomp_automaton* a2,
                              const bacomp_complement_options* opts, int* holds, bacomp_inclusion_stats* stats) {
  if (a1 == nullptr) return null_argument("a1");
  if (a2 == nullptr) return null_argument("a2");
  if (holds == nullptr) return null_argument("holds");
  return guarded([&] {
    bacomp::InclusionStats s;
    *holds = bacomp::included(a1->sgra, a2->sgra, to_options(opts), &s) ? 1 : 0;
    if (stats != nullptr) {
      stats->product_states = s.product_states;
      stats->explored_transitions = s.explored_transitions;
    }
  });
}

bacomp_status bacomp_analyze(const bacomp_automaton* a, bacomp_analysis** out) {
  if (a == nullptr) return null_argument("a");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new bacomp_analysis{bacomp::classify(bacomp::prepare_buchi(a->sgra))}; });
}

void bacomp_analysis_free(bacomp_analysis* an) { delete an; }

size_t bacomp_analysis_num_sccs(const bacomp_analysis* an) { return an == nullptr ? 0 : an->info.size(); }

bacomp_scc_class bacomp_analysis_scc_class(const bacomp_analysis* an, size_t scc) {
  if (an == nullptr || scc >= an->info.size()) return BACOMP_SCC_NONACC;
  return to_c(an->info.classes[scc]);
}

size_t bacomp_analysis_scc_members(const bacomp_analysis* an, size_t scc, uint32_t* buf, size_t cap) {
  if (an == nullptr || scc >= an->info.size()) return 0;
  const bacomp::StateSet& m = an->info.members[scc];
  for (size_t i = 0; i < m.size() && i < cap && buf != nullptr; ++i) buf[i] = m[i];
  return m.size();
}

int bacomp_analysis_is_elevator(const bacomp_analysis* an) {
  return an != nullptr && bacomp::is_elevator(an->info) ? 1 : 0;
}

const char* bacomp_scc_class_name(bacomp_scc_class c) {
  switch (c) {
    case BACOMP_SCC_NONACC: return "NONACC";
    case BACOMP_SCC_IADAC: return "IADAC";
    case BACOMP_SCC_IWAC: return "IWAC";
    case BACOMP_SCC_DAC: return "DAC";
    case BACOMP_SCC_NAC: return "NAC";
  }
  return "NONACC";
}

}  // extern "C"
