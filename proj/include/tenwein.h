/* tenwein — exact Weingarten calculus, monotone Hurwitz numbers and tensor
 * HCIZ moments behind a C interface.
 *
 * All computations run against an opaque context carrying enumeration budgets
 * and the last error. Results are heap-allocated JSON documents of the form
 *   {"command": ..., "inputs": {...}, "value": ..., "value_kind": ...,
 *    "elapsed_ms": ...}
 * with value_kind one of "integer", "rational", "laurent_series", "float_err"
 * (plus "report" for verify and "dot" for graph renderings). Rationals are
 * strings "p/q"; integers are JSON numbers when they fit 53 bits, strings
 * otherwise. Free results with tw_string_free.
 */
#ifndef TENWEIN_H
#define TENWEIN_H

#ifdef __cplusplus
extern "C" {
#endif

#define TW_OK 0
#define TW_ERROR_INTERNAL 1
#define TW_ERROR_PARSE 2
#define TW_ERROR_BUDGET 3
#define TW_ERROR_DOMAIN 4

typedef struct tw_context tw_context;

tw_context *tw_context_create(void);
void tw_context_destroy(tw_context *ctx);

/* Enumeration budgets (defaults n<=5, D<=3, l<=8, k<=8). Pass -1 to keep a
 * value. Raising past the defaults requires unsafe mode; hard caps apply
 * regardless (n<=7, D<=4, l<=20, k<=20). */
int tw_context_set_budgets(tw_context *ctx, int max_n, int max_d, int max_l, int max_k);
int tw_context_set_unsafe(tw_context *ctx, int unsafe);
/* Worker threads for parallel sections (Monte Carlo); default 1. */
int tw_context_set_jobs(tw_context *ctx, int jobs);

/* Last error as a JSON object {"error": "...", "kind": "..."}; owned by the
 * context, valid until the next call on it. */
const char *tw_context_last_error(const tw_context *ctx);

void tw_string_free(char *s);

/* Permutations accept cycle notation "(1 2)(3 4 5)" or one-line "[2,1,3]".
 * Cycle types are comma-separated parts, e.g. "2,1". */

int tw_weingarten_series(tw_context *ctx, const char *perm, long order, char **out);
int tw_weingarten_exact(tw_context *ctx, const char *perm, long big_n, char **out);
int tw_weingarten_asymptotic(tw_context *ctx, const char *perm, char **out);

/* route: "alternating" | "monotone" | "partition" | "folding" | "all" */
int tw_pc(tw_context *ctx, const char *const *sigma, const char *const *tau, int colors,
          long l, const char *route, char **out);

/* which: "single" | "double" | "higher". genus_or_l is a genus when is_l == 0.
 * from_single switches the double computation to the single-number formula. */
int tw_hurwitz(tw_context *ctx, const char *which, const char *const *alphas,
               const char *const *betas, int colors, long genus_or_l, int is_l,
               int from_single, char **out);

int tw_bms(tw_context *ctx, const char *const *alphas, const char *const *betas, int colors,
           long l, long k, char **out);

/* Tensor files: JSON {"n":N, "d":D, "entries":[...]} with row-major entries,
 * "p/q" strings / integers (exact) or numbers / [re,im] pairs (floating).
 * montecarlo_samples == 0 computes the exact moment. */
int tw_moments(tw_context *ctx, const char *tensor_a_path, const char *tensor_b_path, int n,
               long dim, long montecarlo_samples, unsigned long long seed, char **out);
int tw_cumulants(tw_context *ctx, const char *tensor_a_path, const char *tensor_b_path, int n,
                 long dim, char **out);

/* suite: "weingarten" | "pc-routes" | "hurwitz" | "nodal" | "hciz" */
int tw_verify(tw_context *ctx, const char *suite, int max_n, char **out);

/* DOT renderings. Set partitions use the syntax "{1,2}{3}". folding may be
 * NULL. */
int tw_incidence_dot(tw_context *ctx, const char *pi, const char *const *pis,
                     const char *const *edge_partitions, int colors, char **out);
int tw_nodal_dot(tw_context *ctx, const char *const *sigma, const char *const *tau, int colors,
                 const char *const *folding, char **out);

const char *tw_version(void);

#ifdef __cplusplus
}
#endif

#endif /* TENWEIN_H */
