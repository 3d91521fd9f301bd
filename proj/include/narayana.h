/* narayana: exact-arithmetic k-step Narayana sequences, self-convolution
 * identities, and a truncated Laurent-series engine, behind a C ABI.
 *
 * Conventions:
 *   - every function that can fail returns a nara_status; NARA_OK is 0
 *   - a failing call leaves a thread-local message in nara_last_error()
 *   - out-parameters are written only on NARA_OK
 *   - bigints cross the ABI as decimal strings; rationals as "p/q";
 *     strings returned through char** are released with nara_string_free
 *   - handles are opaque and released with their matching *_free
 */
#ifndef NARAYANA_H
#define NARAYANA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nara_status {
    NARA_OK = 0,
    NARA_ERR_INVALID_ARG = 1,
    NARA_ERR_OUT_OF_RANGE = 2,
    NARA_ERR_NOT_DIVISIBLE = 3,
    NARA_ERR_NOT_INVERTIBLE = 4,
    NARA_ERR_PARSE = 5,
    NARA_ERR_NO_OVERLAP = 6,
    NARA_ERR_IO = 7,
    NARA_ERR_INTERNAL = 8
} nara_status;

typedef enum nara_format {
    NARA_FORMAT_TABLE = 0,
    NARA_FORMAT_CSV = 1,
    NARA_FORMAT_JSON_TREE = 2
} nara_format;

typedef struct nara_spec nara_spec;     /* linear recurrence definition */
typedef struct nara_terms nara_terms;   /* dense run of integer values  */
typedef struct nara_form nara_form;     /* closed-form identity RHS     */
typedef struct nara_series nara_series; /* truncated Laurent series     */
typedef struct nara_report nara_report; /* verification campaign result */
typedef struct nara_bfile nara_bfile;   /* parsed OEIS b-file           */

const char* nara_version(void);
/* Message for the most recent failing call on this thread; never NULL. */
const char* nara_last_error(void);
void nara_string_free(char* s);

/* ---- sequences ------------------------------------------------------- */

/* k-step Narayana numbers: a_0 = 0, a_i = 1 for 1 <= i <= k-1,
 * a_n = a_{n-1} + a_{n-k}; requires k >= 2. */
nara_status nara_spec_narayana(int k, nara_spec** out);
nara_status nara_spec_fibonacci(nara_spec** out);
nara_status nara_spec_lucas(nara_spec** out);
nara_status nara_spec_rabinowitz(nara_spec** out);
void nara_spec_free(nara_spec* spec);
int nara_spec_order(const nara_spec* spec);
nara_status nara_spec_name(const nara_spec* spec, char** out);

/* Terms a_0..a_{n_max} by iteration. */
nara_status nara_terms_compute(const nara_spec* spec, int64_t n_max,
                               nara_terms** out);
/* Brute-force Cauchy self-convolution values for n = 0..n_max. */
nara_status nara_self_convolution(const nara_spec* spec, int64_t n_max,
                                  nara_terms** out);
void nara_terms_free(nara_terms* terms);
int64_t nara_terms_start(const nara_terms* terms);
int64_t nara_terms_count(const nara_terms* terms);
/* position is relative to nara_terms_start. */
nara_status nara_terms_value(const nara_terms* terms, int64_t position,
                             char** out);

/* Single term. modulus_dec: decimal modulus >= 2, or NULL for exact.
 * nara_term_at reduces x^n modulo the characteristic polynomial
 * (O(k^2 log n) multiplications); nara_term_iterative walks the
 * recurrence in O(n) steps and O(k) memory. */
nara_status nara_term_at(const nara_spec* spec, uint64_t n,
                         const char* modulus_dec, char** out);
nara_status nara_term_iterative(const nara_spec* spec, uint64_t n,
                                const char* modulus_dec, char** out);

/* ---- identities ------------------------------------------------------ */

/* The generic self-convolution identity at k >= 2:
 *   (k^k + (k-1)^{k-1}) * sum_{i=0}^n R_i R_{n-i}
 *     = k^{k-1} (n+k-2) R_{n+k-1}
 *     - sum_{j=0}^{k-2} k^j (k-1)^{k-2-j} (n+k+j-1) R_{n+j}. */
nara_status nara_form_theorem1(int k, nara_form** out);
void nara_form_free(nara_form* form);
nara_status nara_form_name(const nara_form* form, char** out);
/* The multiplier k^k + (k-1)^{k-1} on the convolution side. */
nara_status nara_form_multiplier(const nara_form* form, char** out);
int64_t nara_form_min_n(const nara_form* form);
/* Exact RHS value at n (before dividing by the multiplier). */
nara_status nara_form_rhs_at(const nara_form* form, int64_t n, char** out);
/* RHS / multiplier with exact divisibility enforced
 * (NARA_ERR_NOT_DIVISIBLE otherwise). */
nara_status nara_form_closed_conv_at(const nara_form* form, int64_t n,
                                     char** out);
/* Closed-form convolution values for n = 0..n_max. */
nara_status nara_closed_convolution(const nara_form* form, int64_t n_max,
                                    nara_terms** out);

/* ---- series ---------------------------------------------------------- */

typedef enum nara_series_kind {
    NARA_SERIES_GF = 0,       /* x / (1 - x - x^k)                        */
    NARA_SERIES_A = 1,        /* (k^k + (k-1)^{k-1}) x^2/(1-x-x^k)^2      */
    NARA_SERIES_B_CLOSED = 2, /* closed form of the positive RHS part     */
    NARA_SERIES_B_DEF = 3,    /* same series built from its coefficients  */
    NARA_SERIES_C_CLOSED = 4, /* closed form of the subtracted RHS part   */
    NARA_SERIES_C_DEF = 5,
    NARA_SERIES_DIFF = 6      /* B_closed - C_closed - A (zero series)    */
} nara_series_kind;

nara_status nara_series_build(nara_series_kind kind, int k, int64_t order,
                              nara_series** out);
void nara_series_free(nara_series* series);
int64_t nara_series_start_exp(const nara_series* series);
int64_t nara_series_trunc_order(const nara_series* series);
/* Exact rational coefficient of x^exponent ("p/q" or "p"); exponents above
 * the truncation order are unknown and yield NARA_ERR_OUT_OF_RANGE. */
nara_status nara_series_coeff(const nara_series* series, int64_t exponent,
                              char** out);
/* "c*x^e + ... (+ O(x^{N+1}))" pretty form. */
nara_status nara_series_render(const nara_series* series, char** out);
int nara_series_is_zero(const nara_series* series);

/* ---- integer polynomials --------------------------------------------- */

/* Coefficients are decimal strings, lowest degree first. */
nara_status nara_resultant(const char* const* p_coeffs, size_t p_len,
                           const char* const* q_coeffs, size_t q_len,
                           char** out);
nara_status nara_discriminant(const char* const* coeffs, size_t len,
                              char** out);

/* ---- verification campaigns ------------------------------------------ */

typedef struct nara_verify_config {
    int k_min;
    int k_max;
    int64_t n_max;
    int64_t series_order;
    int64_t lemma_m_max;
    const char* forms;       /* comma-separated selectors; NULL = all     */
    const char* modulus_dec; /* NULL = no modular cross-check             */
    int jobs;                /* 0 = hardware concurrency                  */
    int mutate;              /* nonzero: corrupted-form self-test (its
                                records fail by design)                   */
} nara_verify_config;

void nara_verify_config_default(nara_verify_config* config);
nara_status nara_verify_run(const nara_verify_config* config,
                            nara_report** out);
void nara_report_free(nara_report* report);
int nara_report_pass(const nara_report* report);
int64_t nara_report_record_count(const nara_report* report);
nara_status nara_report_render(const nara_report* report, nara_format format,
                               char** out);

/* ---- OEIS b-files ----------------------------------------------------- */

nara_status nara_bfile_load(const char* path, nara_bfile** out);
nara_status nara_bfile_parse(const char* text, const char* sequence_id,
                             nara_bfile** out);
void nara_bfile_free(nara_bfile* bfile);
int64_t nara_bfile_entry_count(const nara_bfile* bfile);
/* Compares b-file entry i against computed value at index i + offset over
 * the overlap. matched is 1 on exact agreement; detail describes either the
 * overlap checked or the first mismatch. */
nara_status nara_oeis_cross_check(const nara_bfile* bfile,
                                  const nara_terms* computed, int64_t offset,
                                  int* matched, char** detail);

#ifdef __cplusplus
}
#endif

#endif /* NARAYANA_H */
