/* C interface to the bacomp library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a bacomp_status; on
 * failure bacomp_last_error() describes the problem for the calling thread.
 */
#ifndef BACOMP_H
#define BACOMP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BACOMP_BUILDING)
#    define BACOMP_API __declspec(dllexport)
#  else
#    define BACOMP_API __declspec(dllimport)
#  endif
#else
#  define BACOMP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bacomp_status {
  BACOMP_OK = 0,
  BACOMP_ERR_PARSE = 1,
  BACOMP_ERR_UNSUPPORTED_ACCEPTANCE = 2,
  BACOMP_ERR_CAPACITY = 3,
  BACOMP_ERR_CONTRACT = 4,
  BACOMP_ERR_ALPHABET_MISMATCH = 5,
  BACOMP_ERR_INVARIANT = 6,
  BACOMP_ERR_NULL_ARGUMENT = 7,
  BACOMP_ERR_INTERNAL = 8
} bacomp_status;

typedef struct bacomp_automaton bacomp_automaton;
typedef struct bacomp_analysis bacomp_analysis;

/* Message of the last failed call on this thread ("" if none). Stable until
 * the next call into the library from the same thread. */
BACOMP_API const char* bacomp_last_error(void);
/* Short machine-readable prefix for a status, e.g. "capacity". */
BACOMP_API const char* bacomp_status_prefix(bacomp_status status);
BACOMP_API const char* bacomp_version(void);

/* ---- automata ---- */

BACOMP_API bacomp_status bacomp_parse_hoa(const char* text, size_t max_aps, bacomp_automaton** out);
BACOMP_API bacomp_status bacomp_parse_ba(const char* text, bacomp_automaton** out);
/* Random BA over 2^k or arbitrary letter count; same seed, same automaton. */
BACOMP_API bacomp_status bacomp_random_ba(uint64_t seed, size_t states, size_t letters, double density,
                                          double acc_prob, bacomp_automaton** out);
BACOMP_API void bacomp_automaton_free(bacomp_automaton* a);

/* Text outputs are NUL-terminated, allocated by the library and released
 * with bacomp_string_free. */
BACOMP_API bacomp_status bacomp_print_hoa(const bacomp_automaton* a, char** out);
BACOMP_API bacomp_status bacomp_print_ba(const bacomp_automaton* a, char** out);
BACOMP_API void bacomp_string_free(char* s);

BACOMP_API size_t bacomp_num_states(const bacomp_automaton* a);
BACOMP_API size_t bacomp_num_letters(const bacomp_automaton* a);
BACOMP_API size_t bacomp_num_transitions(const bacomp_automaton* a);
/* k of Fin(0) & Inf(1) & ... & Inf(k-1). */
BACOMP_API unsigned bacomp_num_colors(const bacomp_automaton* a);
BACOMP_API int bacomp_fin_used(const bacomp_automaton* a);

/* ---- complementation ---- */

/* SLICE and RANK pick the algorithm for NAC blocks of the modular
 * construction; MONO treats every accepting SCC as a NAC (slice algorithm). */
typedef enum bacomp_nac_alg { BACOMP_NAC_SLICE = 0, BACOMP_NAC_RANK = 1, BACOMP_NAC_MONO = 2 } bacomp_nac_alg;

typedef struct bacomp_complement_options {
  size_t max_macrostates; /* capacity error beyond this many macrostates */
  int postprocess;        /* trim useless states of the result */
  int check_invariants;
  bacomp_nac_alg nac_alg;
} bacomp_complement_options;

typedef struct bacomp_complement_stats {
  size_t in_states;
  size_t out_states;
  size_t macrostates;
  size_t iadac_blocks;
  size_t iwac_blocks;
  size_t dac_blocks;
  size_t nac_blocks;
} bacomp_complement_stats;

BACOMP_API void bacomp_complement_options_init(bacomp_complement_options* opts);

/* opts and stats may be NULL. */
BACOMP_API bacomp_status bacomp_complement(const bacomp_automaton* a, const bacomp_complement_options* opts,
                                           bacomp_automaton** out, bacomp_complement_stats* stats);

/* ---- emptiness and inclusion ---- */

BACOMP_API bacomp_status bacomp_is_empty(const bacomp_automaton* a, int* empty);

typedef struct bacomp_inclusion_stats {
  size_t product_states;
  size_t explored_transitions;
} bacomp_inclusion_stats;

/* *holds = 1 iff L(a1) is a subset of L(a2). opts and stats may be NULL;
 * postprocess and BACOMP_NAC_MONO are ignored. */
BACOMP_API bacomp_status bacomp_included(const bacomp_automaton* a1, const bacomp_automaton* a2,
                                         const bacomp_complement_options* opts, int* holds,
                                         bacomp_inclusion_stats* stats);

/* ---- SCC analysis ---- */

typedef enum bacomp_scc_class {
  BACOMP_SCC_NONACC = 0,
  BACOMP_SCC_IADAC = 1,
  BACOMP_SCC_IWAC = 2,
  BACOMP_SCC_DAC = 3,
  BACOMP_SCC_NAC = 4
} bacomp_scc_class;

/* Classifies the SCCs of a BA after dropping unreachable states and
 * inter-SCC colors; state ids refer to that reduced automaton. */
BACOMP_API bacomp_status bacomp_analyze(const bacomp_automaton* a, bacomp_analysis** out);
BACOMP_API void bacomp_analysis_free(bacomp_analysis* an);
BACOMP_API size_t bacomp_analysis_num_sccs(const bacomp_analysis* an);
BACOMP_API bacomp_scc_class bacomp_analysis_scc_class(const bacomp_analysis* an, size_t scc);
/* Copies up to cap member states into buf; returns the member count. */
BACOMP_API size_t bacomp_analysis_scc_members(const bacomp_analysis* an, size_t scc, uint32_t* buf, size_t cap);
BACOMP_API int bacomp_analysis_is_elevator(const bacomp_analysis* an);
BACOMP_API const char* bacomp_scc_class_name(bacomp_scc_class c);

#ifdef __cplusplus
}
#endif

#endif /* BACOMP_H */
