/* SPDX-License-Identifier: Apache-2.0 */
#ifndef FLOER_RINGS_H
#define FLOER_RINGS_H

#include <stddef.h>
#include <stdint.h>

#if defined(FR_BUILDING_LIBRARY)
#define FR_API __attribute__((visibility("default")))
#else
#define FR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fr_status {
  FR_OK = 0,
  FR_ERR_INVALID_ARGUMENT = 1,
  FR_ERR_OUT_OF_RANGE,
  FR_ERR_NOT_A_UNIT,
  FR_ERR_DIVISION_BY_ZERO,
  FR_ERR_GENUS_MISMATCH,
  FR_ERR_INVALID_GENERATOR,
  FR_ERR_NOT_FINITE_RANK,
  FR_ERR_VARIABLE_MISMATCH,
  FR_ERR_EIGENVALUE_COLLISION,
  FR_ERR_FACTORIZATION_FAILED,
  FR_ERR_NOT_NILPOTENT,
  FR_ERR_STRUCTURE_MISMATCH,
  FR_ERR_NOT_APPLICABLE,
  FR_ERR_PARSE,
  FR_ERR_INTERNAL
} fr_status;

typedef enum fr_format { FR_FORMAT_JSON = 0, FR_FORMAT_CSV = 1, FR_FORMAT_TEXT = 2 } fr_format;

/* Opaque handles. Each has a matching *_free; passing NULL to *_free is a
 * no-op. */
typedef struct fr_floer fr_floer;
typedef struct fr_sympow fr_sympow;
typedef struct fr_report fr_report;

FR_API const char* fr_version(void);
FR_API const char* fr_status_name(fr_status status);
/* Message of the last failed call on this thread; "" after a success. */
FR_API const char* fr_last_error(void);
/* Caps worker threads (n >= 1). FLOER_RINGS_THREADS is read otherwise. */
FR_API fr_status fr_set_threads(int n);

/* ---- Floer and Fukaya-Floer rings ------------------------------------ */

typedef struct fr_perturbation {
  /* Truncation order N of C[[t]]; 0 builds the t = 0 ring. */
  int order;
  /* Nonzero: f_ij drawn from `seed`; zero: all f_ij = 0. */
  int random;
  uint64_t seed;
} fr_perturbation;

/* perturbation may be NULL for t = 0. Builds T_{g,k}, T-bar_{g,k} for all
 * k and their artinian decompositions. */
FR_API fr_status fr_floer_build(int genus, const fr_perturbation* perturbation, fr_floer** out);
FR_API void fr_floer_free(fr_floer* ring);
FR_API fr_status fr_floer_genus(const fr_floer* ring, int* out);
/* Free rank of T_{g,k} (bar = 0) or T-bar_{g,k} (bar != 0) over the base. */
FR_API fr_status fr_floer_rank(const fr_floer* ring, int k, int bar, int* out);
/* Rank of the local piece with label r, or FR_ERR_OUT_OF_RANGE. */
FR_API fr_status fr_floer_piece_rank(const fr_floer* ring, int k, int r, int bar, int* out);
/* Ring summary (ranks, pieces, eigenvalue constant terms) plus the rank,
 * eigenvalue and local-rank checks. */
FR_API fr_status fr_floer_report(const fr_floer* ring, fr_report** out);

/* ---- Symmetric products ---------------------------------------------- */

FR_API fr_status fr_sympow_build(int genus, int d, fr_sympow** out);
FR_API void fr_sympow_free(fr_sympow* ring);
/* Writes b_0..b_{2d}; *len receives 2d+1 even when cap is too small, in
 * which case FR_ERR_OUT_OF_RANGE is returned and nothing is written. */
FR_API fr_status fr_sympow_betti(const fr_sympow* ring, int* buf, size_t cap, size_t* len);
/* Betti table plus presentation, pairing and structure checks. */
FR_API fr_status fr_sympow_report(const fr_sympow* ring, fr_report** out);

/* ---- Verification ---------------------------------------------------- */

typedef struct fr_verify_options {
  /* rank, eigen, fin, gr, hom-symm, sympow, bounds, perturb, adjunct, all */
  const char* suite;
  int genus_max;
  uint64_t seed;
  int profiles;
  int order;
} fr_verify_options;

/* Fills defaults: suite "all", genus_max 5, seed 1, 20 profiles, N = 4. */
FR_API void fr_verify_options_init(fr_verify_options* opts);
FR_API fr_status fr_verify(const fr_verify_options* opts, fr_report** out);
/* Graded profiles of H_r and of the matching symmetric product. With
 * all_r != 0 every r is compared and `r` is ignored. */
FR_API fr_status fr_hom_symm(int genus, int r, int all_r, fr_report** out);

/* ---- Adjunction oracle ----------------------------------------------- */

typedef struct fr_adjunction_case {
  int genus;
  int self_int;
  int odd_class;
  int64_t k_dot_sigma;
  /* Optional fields are used only when the matching has_* flag is set. */
  int has_d_b, d_b;
  int has_d_k, d_k;
  int has_l, l;
  int b1_zero;
  int has_order, order;
} fr_adjunction_case;

FR_API void fr_adjunction_case_init(fr_adjunction_case* c);
/* reject_odd != 0 turns the odd K.Sigma warning into FR_ERR_INVALID_ARGUMENT. */
FR_API fr_status fr_adjunction_evaluate(const fr_adjunction_case* c, int reject_odd, fr_report** out);
/* CSV text with header genus,self_int,odd_class,k_dot_sigma,d_b,d_k,l,b1_zero[,order]. */
FR_API fr_status fr_adjunction_batch(const char* csv, int reject_odd, fr_report** out);

/* ---- Reports ---------------------------------------------------------- */

FR_API void fr_report_free(fr_report* report);
FR_API fr_status fr_report_passed(const fr_report* report, int* out);
FR_API fr_status fr_report_result_count(const fr_report* report, size_t* out);
/* Stores `input` (a JSON object) as the report's input echo. */
FR_API fr_status fr_report_set_input(fr_report* report, const char* input_json);
/* Renders to a NUL-terminated string owned by the caller (fr_string_free).
 * Timing is omitted unless with_timing != 0. */
FR_API fr_status fr_report_render(const fr_report* report, fr_format format, int with_timing, char** out);
/* Parses a JSON report as produced by fr_report_render. */
FR_API fr_status fr_report_parse(const char* json, fr_report** out);
FR_API void fr_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FLOER_RINGS_H */
