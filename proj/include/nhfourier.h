/* nhfourier: C interface to the nonharmonic Fourier analysis library.
 *
 * Conventions:
 *   - Functions returning int give a status code (NHF_OK on success). On
 *     failure, nhf_last_error() describes the problem for the calling thread.
 *   - Strings returned through char** are heap-allocated; release them with
 *     nhf_string_free(). Objects returned through handle pointers are owned
 *     by the caller and released with the matching *_free().
 *   - All reports are JSON with fixed field order and fixed float formatting,
 *     so identical inputs produce byte-identical output.
 */
#ifndef NHFOURIER_H
#define NHFOURIER_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; these match the CLI exit codes. */
#define NHF_OK 0
#define NHF_ERR_INVARIANT 1   /* a measured check failed */
#define NHF_ERR_PARSE 2       /* malformed config, file, or argument */
#define NHF_ERR_INADMISSIBLE 3 /* datum violates an admissibility condition */
#define NHF_ERR_RESOLUTION 4  /* grid or precision cannot support the request */
#define NHF_ERR_INTERNAL 5    /* unexpected failure */

/* Last error message for the calling thread; empty string if none. The
 * pointer stays valid until the next failing call on the same thread. */
const char* nhf_last_error(void);

/* Release a string returned through a char** out-parameter. */
void nhf_string_free(char* s);

/* ---- Experiment runners -------------------------------------------------
 * config_json mirrors the CLI config file; report_json receives the report
 * (also on invariant/resolution failures, when a report exists). */
int nhf_run(const char* command, const char* config_json, char** report_json);
int nhf_run_validate(const char* config_json, char** report_json);
int nhf_run_diagnose(const char* config_json, char** report_json);
int nhf_run_solve(const char* config_json, char** report_json);
int nhf_run_normalform(const char* config_json, char** report_json);
int nhf_run_transform(const char* config_json, char** report_json);

/* ---- Eigen-system -------------------------------------------------------
 * lambda(xi) = (log h1 + 2 pi i xi1)^2 + (log h2 + 2 pi i xi2)^2 and the
 * weight <xi> = (1 + |lambda|^2)^{1/4}. */
int nhf_eigenvalue(double h1, double h2, long long xi1, long long xi2,
                   double* re, double* im);
int nhf_weight(double h1, double h2, long long xi1, long long xi2, double* w);

/* ---- Grid fields (complex samples on the uniform grid of [0,1)^2) ------ */
typedef struct nhf_grid nhf_grid;
nhf_grid* nhf_grid_create(long long n1, long long n2);
void nhf_grid_free(nhf_grid* g);
int nhf_grid_shape(const nhf_grid* g, long long* n1, long long* n2);
int nhf_grid_set(nhf_grid* g, long long k1, long long k2, double re, double im);
int nhf_grid_get(const nhf_grid* g, long long k1, long long k2, double* re,
                 double* im);

/* ---- Spectral fields (coefficients over |xi1|,|xi2| <= K) ---------------
 * basis is "L" (expansion in u_xi = h^x e^{2 pi i x.xi}) or "Lstar". */
typedef struct nhf_spectral nhf_spectral;
nhf_spectral* nhf_spectral_create(long long K, const char* basis);
void nhf_spectral_free(nhf_spectral* s);
int nhf_spectral_truncation(const nhf_spectral* s, long long* K);
int nhf_spectral_set(nhf_spectral* s, long long xi1, long long xi2, double re,
                     double im);
int nhf_spectral_get(const nhf_spectral* s, long long xi1, long long xi2,
                     double* re, double* im);

/* ---- Transforms ---------------------------------------------------------
 * Require n1, n2 > 2K. */
int nhf_analyze(const nhf_grid* f, double h1, double h2, long long K,
                const char* basis, nhf_spectral** out);
int nhf_synthesize(const nhf_spectral* c, double h1, double h2, long long n1,
                   long long n2, nhf_grid** out);

/* ---- Symbols ------------------------------------------------------------ */
typedef struct nhf_symbol nhf_symbol;
/* Symbol of d1 + c d2 in the weighted calculus. */
nhf_symbol* nhf_symbol_constant_p(double c_re, double c_im, double h1, double h2);
/* Symbol of a differential expression, e.g. "d1^2 + (2-3i) d2". */
nhf_symbol* nhf_symbol_from_operator(const char* shorthand, double h1, double h2);
void nhf_symbol_free(nhf_symbol* s);
int nhf_symbol_eval(const nhf_symbol* s, long long xi1, long long xi2,
                    double* re, double* im);

/* ---- Division solver ----------------------------------------------------
 * w_hat = f_hat / sigma off the near-zero set (cutoff zero_tol_rel * max
 * |sigma|). Inadmissible data give NHF_ERR_INADMISSIBLE and, when
 * report_json is non-NULL, a report carrying the violation witnesses. */
int nhf_solve(const nhf_symbol* s, const nhf_spectral* rhs, double zero_tol_rel,
              nhf_spectral** out, char** report_json);

/* ---- Diagnostics --------------------------------------------------------
 * Regularity/solvability classification of d1 + c d2; report as in the
 * diagnose command. */
int nhf_classify(double c_re, double c_im, double h1, double h2,
                 long long q_max, double threshold, char** report_json);

/* Continued-fraction evidence scan for Liouville-type approximability. */
int nhf_liouville_evidence(double x, long long q_max, double threshold,
                           char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NHFOURIER_H */
