/*
 * C interface to the wmk library: invariants of representations of Z/p^nZ,
 * v-function evaluation, truncated motivic integrals over Z/p^nZ-covers of
 * the formal disk, and the convergence / singularity classification.
 *
 * Every function returns a wmk_status. On failure, wmk_last_error() returns a
 * thread-local message describing the most recent error on the calling
 * thread. Strings returned through char** out-parameters are heap-allocated
 * and must be released with wmk_string_free(). Handles are immutable after
 * creation and may be shared between threads.
 */
#ifndef WMK_WMK_H
#define WMK_WMK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#if defined(wmk_EXPORTS)
#define WMK_API __declspec(dllexport)
#else
#define WMK_API __declspec(dllimport)
#endif
#elif defined(__GNUC__) && (__GNUC__ >= 4)
#define WMK_API __attribute__((visibility("default")))
#else
#define WMK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wmk_status {
  WMK_OK = 0,
  WMK_ERROR_PARSE = 1,         /* malformed text or JSON */
  WMK_ERROR_DOMAIN = 2,        /* well-formed input outside an operation's domain */
  WMK_ERROR_NOT_CONNECTED = 3, /* order tuple with j_0 = BOTTOM where a connected cover is required */
  WMK_ERROR_HYPOTHESIS = 4,    /* representation violates a theorem's hypotheses */
  WMK_ERROR_OVERFLOW = 5,      /* an intermediate left the 64-bit range */
  WMK_ERROR_ARGUMENT = 6,      /* null pointer or invalid flag */
  WMK_ERROR_INTERNAL = 7
} wmk_status;

typedef enum wmk_convergence {
  WMK_STRICT = 0,           /* all c_m < 0: the integral converges */
  WMK_BOUNDED_BOUNDARY = 1, /* all c_m <= 0, some c_m = 0 */
  WMK_UNBOUNDED = 2         /* some c_m > 0 */
} wmk_convergence;

/* Entry value standing for BOTTOM (a vanishing Witt component) in order tuples. */
#define WMK_BOTTOM ((int64_t)-1)

/* Opaque representation handle. */
typedef struct wmk_rep wmk_rep;

WMK_API const char* wmk_version(void);
WMK_API const char* wmk_last_error(void);
WMK_API const char* wmk_status_name(wmk_status status);
WMK_API void wmk_string_free(char* str);

/* Construction from "p=2,n=3,dims=5+3+1", from {"p":2,"n":3,"dims":[5,3,1]},
 * or from raw values. */
WMK_API wmk_status wmk_rep_parse(const char* text, wmk_rep** out);
WMK_API wmk_status wmk_rep_from_json(const char* json, wmk_rep** out);
WMK_API wmk_status wmk_rep_create(int64_t p, int n, const int64_t* dims, size_t count, wmk_rep** out);
WMK_API void wmk_rep_destroy(wmk_rep* rep);

WMK_API wmk_status wmk_rep_prime(const wmk_rep* rep, int64_t* out);
WMK_API wmk_status wmk_rep_exponent(const wmk_rep* rep, int* out);
WMK_API wmk_status wmk_rep_dimension(const wmk_rep* rep, int64_t* out);
WMK_API wmk_status wmk_rep_to_json(const wmk_rep* rep, char** out);

/* Restriction to the index-p subgroup; fails with WMK_ERROR_DOMAIN when n = 1. */
WMK_API wmk_status wmk_rep_restrict(const wmk_rep* rep, wmk_rep** out);

WMK_API wmk_status wmk_is_effective(const wmk_rep* rep, int* out);
WMK_API wmk_status wmk_has_pseudo_reflection(const wmk_rep* rep, int* out);

/* S_d^(m) for G = Z/p^nZ, 1 <= d <= p^n, 0 <= m < n. */
WMK_API wmk_status wmk_digit_sum(int64_t d, int64_t p, int n, int m, int64_t* out);
WMK_API wmk_status wmk_invariant_D(const wmk_rep* rep, int m, int64_t* out);

/* v at an admissible jump sequence u (length n). */
WMK_API wmk_status wmk_v_jumps(const wmk_rep* rep, const int64_t* u, size_t len, int64_t* out);
/* v at a stratum; entries are pole orders or WMK_BOTTOM. */
WMK_API wmk_status wmk_v_orders(const wmk_rep* rep, const int64_t* orders, size_t len, int64_t* out);
/* Admissibility of an upper jump sequence for prime p; *out is 0 or 1. */
WMK_API wmk_status wmk_is_admissible(int64_t p, const int64_t* u, size_t len, int* out);

WMK_API wmk_status wmk_convergence_status(const wmk_rep* rep, wmk_convergence* out);

/* JSON reports. Schemas are documented in README.md. */
WMK_API wmk_status wmk_invariants_json(const wmk_rep* rep, char** out);
WMK_API wmk_status wmk_classify_json(const wmk_rep* rep, int sylow, char** out);
/* Fails with WMK_ERROR_HYPOTHESIS for decomposable, non-effective or
 * pseudo-reflection inputs. */
WMK_API wmk_status wmk_dimension_criterion_json(const wmk_rep* rep, char** out);
/* rep may be NULL, in which case v and terms are omitted. */
WMK_API wmk_status wmk_strata_json(int64_t p, int n, int64_t bound, const wmk_rep* rep, char** out);
WMK_API wmk_status wmk_sweep_json(int64_t p, int n, char** out);

typedef struct wmk_series_options {
  int64_t bound;               /* uniform bound on every entry, used when bound_vector is NULL */
  const int64_t* bound_vector; /* optional per-coordinate bounds, length n */
  size_t bound_vector_len;
  int per_stratum;     /* nonzero: include every stratum term */
  unsigned threads;    /* 0: WMK_THREADS or hardware concurrency */
} wmk_series_options;

WMK_API wmk_status wmk_series_json(const wmk_rep* rep, const wmk_series_options* options, char** out);
/* One row per bound; bounds strictly increasing. */
WMK_API wmk_status wmk_trajectory_json(const wmk_rep* rep, const int64_t* bounds, size_t count,
                                       unsigned threads, char** out);

#ifdef __cplusplus
}
#endif

#endif /* WMK_WMK_H */
