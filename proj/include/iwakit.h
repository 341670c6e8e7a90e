#ifndef IWAKIT_H
#define IWAKIT_H

/*
 * C interface to the iwakit analysis library.
 *
 * Usage pattern:
 *   iwk_context* ctx = iwk_context_new();
 *   iwk_result* res = NULL;
 *   iwk_status st = iwk_analyze(ctx, 37, &res);
 *   if (st == IWK_OK) { puts(iwk_result_json(res)); iwk_result_free(res); }
 *   else fprintf(stderr, "%s\n", iwk_last_error(ctx));
 *   iwk_context_free(ctx);
 *
 * All functions returning iwk_status set a readable message retrievable via
 * iwk_last_error on failure. Results are heap objects owned by the caller.
 * A context may be used from one thread at a time; distinct contexts are
 * independent.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct iwk_context iwk_context;
typedef struct iwk_result iwk_result;

typedef enum iwk_status {
    IWK_OK = 0,
    IWK_ERR_USAGE = 1,        /* bad arguments or unusable input */
    IWK_ERR_DOMAIN = 2,       /* request outside the defined domain */
    IWK_ERR_RESOURCE = 3,     /* declined: too large for configured caps */
    IWK_ERR_PRECISION = 4,    /* result not certifiable at this precision */
    IWK_ERR_CONSTRUCTION = 5, /* internal consistency check failed */
    IWK_ERR_THEOREM = 6,      /* a proved statement failed numerically */
    IWK_ERR_IO = 7,           /* file system problem */
    IWK_ERR_INTERNAL = 8      /* unexpected failure */
} iwk_status;

iwk_context* iwk_context_new(void);
void iwk_context_free(iwk_context* ctx);

/* Message for the most recent failing call on this context. The pointer is
 * valid until the next call on the context. Never NULL. */
const char* iwk_last_error(const iwk_context* ctx);

/* Persistent cache directory for expensive tables. Empty or NULL disables
 * the disk cache (in-memory reuse still applies). */
iwk_status iwk_set_cache_dir(iwk_context* ctx, const char* dir);

/* Structure levels computed by analyze/scan: n = 0..n_max. Default 1. */
iwk_status iwk_set_levels(iwk_context* ctx, int32_t n_max);

/* Worker threads for scans. Default 1. */
iwk_status iwk_set_jobs(iwk_context* ctx, int32_t jobs);

/* Optional "p k" reference file checked against scan detections. */
iwk_status iwk_set_pairs_file(iwk_context* ctx, const char* path);

/* Full report for one prime. */
iwk_status iwk_analyze(iwk_context* ctx, int64_t p, iwk_result** out);

/* Reports for every prime in [pmin, pmax]. JSON is an array; CSV is a
 * table with one row per prime. */
iwk_status iwk_scan(iwk_context* ctx, int64_t pmin, int64_t pmax, iwk_result** out);

/* Certified zero of the (lambda-1)-fold difference with step u for the
 * irregular index i of p. step = 0 selects the canonical step p - 1.
 * digits <= 0 selects the default 4. */
iwk_status iwk_zero(iwk_context* ctx, int64_t p, int64_t i, int64_t step, int32_t digits,
                    iwk_result** out);

/* Congruence certificate at level n for the irregular index i of p.
 * digits <= 0 selects the default modulus. */
iwk_status iwk_congruence(iwk_context* ctx, int64_t p, int64_t i, int32_t n, int32_t digits,
                          iwk_result** out);

/* Fast arithmetic-kernel checks. */
iwk_status iwk_selftest(iwk_context* ctx, iwk_result** out);

/* Serialized views of a result. Pointers are owned by the result. */
const char* iwk_result_json(const iwk_result* res);
const char* iwk_result_csv(const iwk_result* res);

/* 1 when every mathematical verdict in the result holds, else 0. */
int32_t iwk_result_verdict(const iwk_result* res);

void iwk_result_free(iwk_result* res);

const char* iwk_version(void);

#ifdef __cplusplus
}
#endif

#endif /* IWAKIT_H */
