/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef RCBETHE_H
#define RCBETHE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RCB_API __declspec(dllexport)
#else
#define RCB_API __attribute__((visibility("default")))
#endif

typedef enum rcb_status {
    RCB_OK = 0,
    RCB_INVALID_ARGUMENT = 1,
    RCB_OUT_OF_SCOPE = 2,
    RCB_INCOMPLETE_CENSUS = 3,
    RCB_NO_CONVERGENCE = 4,
    RCB_DIVERGENT_ENERGY = 5,
    RCB_ZERO_VECTOR = 6,
    RCB_POLE_IN_C = 7,
    RCB_NON_DISTINCT = 8,
    RCB_IO_ERROR = 9,
    RCB_INTERNAL = 99
} rcb_status;

typedef enum rcb_solution_class {
    RCB_REGULAR = 0,
    RCB_SINGULAR_PHYSICAL = 1,
    RCB_SINGULAR_NONPHYSICAL = 2,
    RCB_NON_DISTINCT_ROOTS = 3,
    RCB_UNCONVERGED = 4
} rcb_solution_class;

/* Library version, e.g. "0.3.0". */
RCB_API const char* rcb_version(void);
/* Static description of a status code. */
RCB_API const char* rcb_status_string(rcb_status status);
/* Message of the last failed call on this thread; "" if none. */
RCB_API const char* rcb_last_error(void);

/* Owned text (JSON, tables, decimal integers). */
typedef struct rcb_text rcb_text;
RCB_API const char* rcb_text_data(const rcb_text* text);
RCB_API size_t rcb_text_size(const rcb_text* text);
RCB_API void rcb_text_free(rcb_text* text);

/* Solver configuration. Defaults match the library defaults. */
typedef struct rcb_config rcb_config;
RCB_API rcb_status rcb_config_new(rcb_config** out);
RCB_API void rcb_config_free(rcb_config* cfg);
RCB_API rcb_status rcb_config_set_tol(rcb_config* cfg, double newton_tol);
RCB_API rcb_status rcb_config_set_seed(rcb_config* cfg, uint64_t seed);
RCB_API rcb_status rcb_config_set_threads(rcb_config* cfg, int threads);
RCB_API rcb_status rcb_config_set_max_random_seeds(rcb_config* cfg, int max_seeds, int stall_limit);

/* Artifact provenance; wall_time_s < 0 omits the wall time. */
typedef struct rcb_run_info {
    const char* command;
    double wall_time_s;
} rcb_run_info;

/* Rigged configurations of the uniform chain of n spins 2s = two_s. */
RCB_API rcb_status rcb_rc_count(int n, int two_s, int ell, rcb_text** decimal);
/* rc enumerate|count report; enumerate != 0 lists riggings, census != 0
   adds the physical singular count (out-of-scope regimes are marked). */
RCB_API rcb_status rcb_rc_report_json(int n, int two_s, int ell, int enumerate, int census,
                                      const rcb_run_info* info, rcb_text** json);
/* Number of physical singular solutions predicted by the rigging census. */
RCB_API rcb_status rcb_physical_singular_count(int n, int two_s, int ell, rcb_text** decimal);

/* Solution sets. */
typedef struct rcb_solution_set rcb_solution_set;
/* Solves for all solutions. The set is returned even when the census is
   incomplete; check rcb_solution_set_complete. */
RCB_API rcb_status rcb_solve(int n, int ell, const rcb_config* cfg, rcb_solution_set** out);
RCB_API void rcb_solution_set_free(rcb_solution_set* set);
RCB_API int rcb_solution_set_complete(const rcb_solution_set* set);
/* All records, including non physical and non distinct ones. */
RCB_API size_t rcb_solution_count(const rcb_solution_set* set);
RCB_API rcb_status rcb_solution_class_of(const rcb_solution_set* set, size_t index, rcb_solution_class* cls);
/* Writes 2*ell doubles (re, im interleaved); cap counts doubles. */
RCB_API rcb_status rcb_solution_roots(const rcb_solution_set* set, size_t index, double* re_im, size_t cap);
RCB_API rcb_status rcb_solution_residual(const rcb_solution_set* set, size_t index, double* residual);
/* Energy of a regular record; RCB_DIVERGENT_ENERGY otherwise. */
RCB_API rcb_status rcb_solution_energy(const rcb_solution_set* set, size_t index, double* re, double* im);
/* Matched rigged configuration as JSON, or "null". */
RCB_API rcb_status rcb_solution_rc_json(const rcb_solution_set* set, size_t index, rcb_text** json);
RCB_API rcb_status rcb_solution_set_json(const rcb_solution_set* set, int include_nonphysical,
                                         const rcb_run_info* info, rcb_text** json);
/* One SVG per emitted record in an existing directory. */
RCB_API rcb_status rcb_solution_set_write_svg(const rcb_solution_set* set, int include_nonphysical,
                                              const char* directory, size_t* written);
/* Eigenvector, highest weight and completeness checks. *ok is 0 when a
   residual exceeds tol (tol <= 0 selects the defaults). */
RCB_API rcb_status rcb_verify_json(const rcb_solution_set* set, double tol, const rcb_run_info* info,
                                   rcb_text** json, int* ok);

/* Algebraic Bethe ansatz. Vectors hold 2^n complex amplitudes, re/im
   interleaved; index 0 is the all-up state and site k is bit n-k. */
RCB_API rcb_status rcb_bethe_vector(int n, const double* roots_re_im, size_t ell, double* out, size_t cap);
RCB_API rcb_status rcb_eigen_residual(int n, const double* state, size_t cap, double* energy_re,
                                      double* energy_im, double* residual);
RCB_API rcb_status rcb_nw_constant(int n, const double* roots_re_im, size_t ell, double* re, double* im);
RCB_API rcb_status rcb_regularized_vector(int n, const double* roots_re_im, size_t ell, double* out, size_t cap);

/* Solution count table over n_min..n_max. */
RCB_API rcb_status rcb_census_table_json(int n_min, int n_max, const rcb_run_info* info, rcb_text** json);
RCB_API rcb_status rcb_census_table_text(int n_min, int n_max, rcb_text** text);

#ifdef __cplusplus
}
#endif

#endif /* RCBETHE_H */
