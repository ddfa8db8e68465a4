/*
 * iofpar - order-, fence-, and parity-preserving partial injections
 *
 * C interface to the shared library. All objects are opaque handles created
 * and destroyed through these functions; every function that can fail
 * returns an iof_status, with the failing call's message available from
 * iof_last_error() on the same thread.
 *
 * Conventions:
 *   - points and universe sizes are 1-based ints
 *   - transformations print as "n=6;1>1,4>6" (empty map: "n=6;")
 *   - generator words print as "v3 u4 x1" (empty word: "")
 *   - every *_free / iof_string_free accepts NULL
 *   - handles are immutable after creation and safe to share across threads
 */

#ifndef IOFPAR_H
#define IOFPAR_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(IOF_BUILD)
#    define IOF_API __declspec(dllexport)
#  else
#    define IOF_API __declspec(dllimport)
#  endif
#else
#  define IOF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct iof_pinj iof_pinj;               /* a partial injection on {1..n} */
typedef struct iof_word iof_word;               /* a word over the generator alphabet */
typedef struct iof_element_set iof_element_set; /* a canonical set of partial injections */

typedef enum iof_status {
  IOF_OK = 0,
  IOF_ERR_ARGUMENT = 1, /* invalid value or violated precondition */
  IOF_ERR_PARSE = 2,    /* malformed text input */
  IOF_ERR_INTERNAL = 3
} iof_status;

/* Library version string. */
IOF_API const char* iof_version(void);

/* Message for the most recent failure on this thread ("" if none). */
IOF_API const char* iof_last_error(void);

/* Frees strings returned through char** out parameters. */
IOF_API void iof_string_free(char* s);

/* ---- partial injections ---------------------------------------------- */

/* Builds the map dom[k] -> img[k] on {1..n}; pairs may arrive unsorted.
 * Rejects out-of-range points and duplicates. */
IOF_API iof_status iof_pinj_make(int n, const int* dom, const int* img,
                                 size_t count, iof_pinj** out);
IOF_API iof_status iof_pinj_identity(int n, iof_pinj** out);
IOF_API iof_status iof_pinj_empty(int n, iof_pinj** out);

/* Parses the full "n=6;1>1,4>6" encoding. */
IOF_API iof_status iof_pinj_parse(const char* text, iof_pinj** out);
/* Parses a bare "1>1,4>6" pair list against an explicit n ("" = empty map). */
IOF_API iof_status iof_pinj_parse_pairs(int n, const char* pairs, iof_pinj** out);

IOF_API iof_status iof_pinj_copy(const iof_pinj* p, iof_pinj** out);
IOF_API void iof_pinj_free(iof_pinj* p);

IOF_API int iof_pinj_n(const iof_pinj* p);
IOF_API int iof_pinj_rank(const iof_pinj* p);
/* Image of x, 0 when x is outside the domain, -1 when x is out of range. */
IOF_API int iof_pinj_apply(const iof_pinj* p, int x);
IOF_API int iof_pinj_equal(const iof_pinj* a, const iof_pinj* b);
IOF_API int iof_pinj_is_partial_identity(const iof_pinj* p);

/* Left-to-right composition: x(ab) = (xa)b. Universes must match. */
IOF_API iof_status iof_pinj_compose(const iof_pinj* a, const iof_pinj* b, iof_pinj** out);
IOF_API iof_status iof_pinj_inverse(const iof_pinj* p, iof_pinj** out);

/* "n=6;1>1,4>6"; free with iof_string_free. */
IOF_API iof_status iof_pinj_format(const iof_pinj* p, char** out);

/* ---- membership ------------------------------------------------------ */

/* Four-condition characterization (fast path). */
IOF_API int iof_is_member(const iof_pinj* p);
/* Definition-based check: order-, parity-, fence-preserving, inverse too. */
IOF_API int iof_is_member_direct(const iof_pinj* p);
/* *out receives the first violated condition, or NULL for members. */
IOF_API iof_status iof_member_violation(const iof_pinj* p, char** out);

/* ---- generators and words -------------------------------------------- */

/* family is 'v', 'u' or 'x'; index ranges 1..n for v, 1..n-2 for u and x. */
IOF_API iof_status iof_generator(int n, char family, int index, iof_pinj** out);

IOF_API iof_status iof_word_parse(const char* text, iof_word** out);
IOF_API iof_status iof_word_format(const iof_word* w, char** out);
IOF_API size_t iof_word_length(const iof_word* w);
IOF_API void iof_word_free(iof_word* w);

/* Left-to-right product of the letters; the empty word gives the identity. */
IOF_API iof_status iof_word_eval(int n, const iof_word* w, iof_pinj** out);

/* Rewrites index-(n-3) letters so every letter lies in the standard
 * generating set; evaluation is unchanged. */
IOF_API iof_status iof_word_expand_an(int n, const iof_word* w, iof_word** out);

/* ---- factorization ---------------------------------------------------- */

/* Factors a member into a word that evaluates back to it.
 *
 * For n >= 4 this is the normal form: a prefix of v letters (the guard) and
 * shift-block runs; with over_an nonzero the word is rewritten over the
 * standard generating set. For n <= 3 a breadth-first word search over the
 * full alphabet stands in.
 *
 * out_trace_json, when non-NULL, receives an audit trace (free with
 * iof_string_free):
 *   {"method":"normal-form","l":...,"r":[...],
 *    "blocks":[{"family":"x","start":1,"length":1},...],"guard":[...]}
 * or {"method":"word-search"} on the small-n path. */
IOF_API iof_status iof_factorize(const iof_pinj* p, int over_an,
                                 iof_word** out_word, char** out_trace_json);

/* ---- enumeration, closure, rank -------------------------------------- */

/* Every member over {1..n}, canonically ordered. */
IOF_API iof_status iof_enumerate(int n, iof_element_set** out);

/* Smallest submonoid containing the generators (identity included). */
IOF_API iof_status iof_closure(int n, const iof_pinj* const* gens, size_t count,
                               iof_element_set** out);

/* The 3n-6 standard generators as a set. Requires n >= 4. */
IOF_API iof_status iof_standard_generating_set(int n, iof_element_set** out);

IOF_API iof_status iof_element_set_create(int n, const iof_pinj* const* elems,
                                          size_t count, iof_element_set** out);
IOF_API void iof_element_set_free(iof_element_set* s);
IOF_API size_t iof_element_set_size(const iof_element_set* s);
IOF_API int iof_element_set_n(const iof_element_set* s);
/* Copies element #index (0-based, canonical order) into *out. */
IOF_API iof_status iof_element_set_get(const iof_element_set* s, size_t index,
                                       iof_pinj** out);
IOF_API int iof_element_set_equal(const iof_element_set* a, const iof_element_set* b);
IOF_API int iof_element_set_contains(const iof_element_set* s, const iof_pinj* p);

/* closure(gens) == enumerate(n). */
IOF_API iof_status iof_is_generating(int n, const iof_pinj* const* gens,
                                     size_t count, int* out);

/* All members of rank exactly k. */
IOF_API iof_status iof_classify_rank(int n, int k, iof_element_set** out);

/* Exact minimum generating-set size by (pruned) subset search.
 * max_subset_size caps candidate sizes, 0 means no cap. */
IOF_API iof_status iof_brute_rank(int n, int max_subset_size, int* out_rank);

/* Drop-one test over the standard generating set. Requires n >= 4. */
IOF_API iof_status iof_check_minimality(int n, int* out_minimal);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IOFPAR_H */
