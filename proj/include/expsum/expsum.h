/* expsum: exact exponential sums, L-functions, Koszul/spectral-sequence
 * degeneration checks, and truncated Dwork trace verification over F_q.
 *
 * C interface: opaque handles plus status codes.  All analysis entry points
 * produce a report handle carrying a JSON document, a plain-text rendering,
 * and an overall pass flag.  Reports are deterministic for identical inputs.
 *
 * Every object returned through an out-parameter is owned by the caller and
 * must be released with the matching *_free function.  On any status other
 * than EXPSUM_OK the out-parameter is left untouched and expsum_last_error()
 * describes the failure (per thread, valid until the next failing call). */

#ifndef EXPSUM_H
#define EXPSUM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum expsum_status {
    EXPSUM_OK = 0,
    EXPSUM_ERR_ARGUMENT = 1,    /* invalid argument or precondition */
    EXPSUM_ERR_PARSE = 2,       /* polynomial / modulus syntax error */
    EXPSUM_ERR_BUDGET = 3,      /* enumeration budget exceeded */
    EXPSUM_ERR_MISMATCH = 4,    /* stated hypothesis failed (degree, factors) */
    EXPSUM_ERR_UNSUPPORTED = 5, /* combination not implemented (a > 1 Dwork) */
    EXPSUM_ERR_INTERNAL = 6     /* invariant violation: library bug */
} expsum_status;

typedef struct expsum_field expsum_field;
typedef struct expsum_poly expsum_poly;
typedef struct expsum_report expsum_report;

const char* expsum_version(void);
const char* expsum_last_error(void);

/* F_{p^a}; modulus_csv optionally lists the a+1 monic coefficients in
 * ascending order ("1,0,1" for x^2+1), NULL selects the deterministic
 * smallest irreducible. */
expsum_status expsum_field_create(long p, int a, const char* modulus_csv,
                                  expsum_field** out);
void expsum_field_free(expsum_field* field);
long expsum_field_p(const expsum_field* field);
int expsum_field_a(const expsum_field* field);

/* Grammar: integer coefficients, variables x1..xn, operators + - * ^ and
 * parentheses. */
expsum_status expsum_poly_parse(const expsum_field* field, int nvars, const char* text,
                                expsum_poly** out);
void expsum_poly_free(expsum_poly* poly);
int expsum_poly_degree(const expsum_poly* poly);
/* Canonical form (descending degree order, explicit * and ^); owned by the
 * handle. */
const char* expsum_poly_str(const expsum_poly* poly);

/* Exponential sums S_1..S_{i_max} over F_{q^i}. */
expsum_status expsum_sum(const expsum_poly* poly, int i_max, long long budget,
                         int threads, expsum_report** out);

/* L-series to the given order (0 = default), rational reconstruction, and the
 * Weil modulus check when L^{+-1} is a polynomial. */
expsum_status expsum_lfunction(const expsum_poly* poly, int order, long long budget,
                               int threads, double tol, expsum_report** out);

/* Page-e table, regular-sequence test and vanishing scan up to r_bound
 * (0 = default (n+1)(delta-1)); m = -1 scans all total degrees != n. */
expsum_status expsum_spectral(const expsum_poly* poly, int page, int r_bound, int m,
                              expsum_report** out);

/* Smooth-complete-intersection hypothesis check for the factorization
 * f^(delta) = prod factor_texts[i]^mults[i]. */
expsum_status expsum_check_1_18(const expsum_poly* poly, const char* const* factor_texts,
                                const int* mults, size_t nfactors, expsum_report** out);

/* Truncated Dwork operator trace congruences T_i = S_i mod p^{G_i}
 * (cutoff_D / precision_N of 0 select the defaults 3*delta and
 * floor((D+1)/delta)+1). */
expsum_status expsum_dwork_verify(const expsum_poly* poly, int i_max, int cutoff_D,
                                  int precision_N, long long budget,
                                  expsum_report** out);

/* Admissible b-interval and the equivalent emptiness inequality. */
expsum_status expsum_b_range(long p, int delta, int page, expsum_report** out);

/* Full pipeline: decomposition, Milnor number, degeneration checks, sums,
 * L-function/Weil, optional Dwork verification.  options_json may override
 * {"analyses":[...], "i_max":int, "r_bound":int, "cutoff_D":int,
 *  "precision_N":int, "budget":int, "tol":double, "threads":int}; pass NULL
 * or "{}" for defaults. */
expsum_status expsum_analyze(const expsum_poly* poly, const char* options_json,
                             expsum_report** out);

const char* expsum_report_json(const expsum_report* report);
const char* expsum_report_text(const expsum_report* report);
int expsum_report_passed(const expsum_report* report);
void expsum_report_free(expsum_report* report);

#ifdef __cplusplus
}
#endif

#endif /* EXPSUM_H */
