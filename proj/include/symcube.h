/* symcube — exact decomposition and Waring-certificate toolkit.
 *
 * C interface of the shared library. All functions return a status code;
 * results come back through out-parameters. Handles are opaque and must
 * be released with the matching *_free function (NULL is accepted).
 * Error messages are retrieved per thread via sc_last_error().
 */
#ifndef SYMCUBE_H
#define SYMCUBE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. */
#define SC_OK 0
#define SC_EINVAL 1    /* invalid argument */
#define SC_EPARSE 2    /* malformed text or file */
#define SC_EEXCLUDED 3 /* input explicitly outside a routine's domain */
#define SC_EINTERNAL 4 /* internal invariant violated */

/* Opaque report handle produced by the command entry points. */
typedef struct sc_report sc_report;

/* Decompose S^k(gl_n) or S^k(sl_n) into irreducibles.
 * algebra is "gl" or "sl"; k >= 1, n >= 2. */
int sc_decompose(const char* algebra, int k, int n, sc_report** out);

/* Verify built-in highest-weight vectors by direct Lie-algebra action.
 * rows lists catalog ids (1..16); nrows == 0 means all rows. */
int sc_verify_hwv(int n, const int* rows, size_t nrows, sc_report** out);

/* Compare the kernel dimension of the raising operators on a weight space
 * with the plethysm multiplicity. weight_or_template uses the bracket
 * syntax "[2,1,0*,-1,-2]" ("0*" marks the variable zero block). */
int sc_multiplicity(int n, const char* weight_or_template, sc_report** out);

/* Verify a rank or border-rank certificate file (JSON). */
int sc_verify_certificate_file(const char* path, sc_report** out);

/* Same, for certificate JSON already in memory. */
int sc_verify_certificate_json(const char* json_text, sc_report** out);

/* Expand s_lambda * s_mu into Schur functions; partitions in bracket
 * syntax "[2,1]". use_oracle != 0 cross-checks against the independent
 * symmetric-polynomial oracle (max_length <= 8 then). */
int sc_lr_expand(const char* lambda, const char* mu, int max_length,
                 int use_oracle, sc_report** out);

/* 1 when every check in the report passed, else 0. */
int sc_report_passed(const sc_report* rep);

/* Render a report as "json", "markdown" or "csv". The returned string is
 * owned by the caller; release it with sc_string_free. */
int sc_report_render(const sc_report* rep, const char* format, int with_timing,
                     char** out_text);

void sc_report_free(sc_report* rep);
void sc_string_free(char* text);

/* Message of the most recent failure on the calling thread ("" if none). */
const char* sc_last_error(void);

/* Exact helpers. weight is the full entry vector of a dominant GL_n
 * weight (len == n). The Weyl dimension is returned as a decimal string
 * (release with sc_string_free). */
int sc_weyl_dim(int n, const long* weight, size_t len, char** out);
int sc_variety_dim(int n, const long* weight, size_t len, long* out);
int sc_lr_coefficient(const char* lambda, const char* mu, const char* nu,
                      long* out);

#ifdef __cplusplus
}
#endif

#endif /* SYMCUBE_H */
