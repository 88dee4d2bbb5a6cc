/* SPDX-License-Identifier: Apache-2.0
 *
 * risim - physics-based simulator for RIS-assisted wireless links
 * Copyright (c) 2026 risim contributors
 *
 * C API of the risim shared library. All objects are opaque handles created
 * and destroyed through these functions; every fallible call returns a
 * risim_status and leaves a human-readable detail in risim_last_error()
 * (thread-local). Out-parameters are written only on RISIM_OK.
 */

#ifndef RISIM_H
#define RISIM_H

#include <stdint.h>

#if defined(_WIN32)
#if defined(RISIM_BUILD_SHARED)
#define RISIM_API __declspec(dllexport)
#else
#define RISIM_API __declspec(dllimport)
#endif
#else
#define RISIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum risim_status {
  RISIM_OK = 0,
  RISIM_ERR_INVALID_ARGUMENT = 1,
  RISIM_ERR_NOT_FOUND = 2,
  RISIM_ERR_OUT_OF_BAND = 3,
  RISIM_ERR_DEGENERATE_GEOMETRY = 4,
  RISIM_ERR_TOO_LARGE = 5,
  RISIM_ERR_PARSE = 6,
  RISIM_ERR_IO = 7,
  RISIM_ERR_INTERNAL = 8
} risim_status;

RISIM_API const char* risim_version(void);
RISIM_API const char* risim_status_name(risim_status status);
/* Detail message of the most recent failure on this thread. */
RISIM_API const char* risim_last_error(void);
/* Worker count for element-parallel loops; results are independent of it. */
RISIM_API void risim_set_threads(int n);

typedef struct risim_codebook risim_codebook;
typedef struct risim_scenario risim_scenario;
typedef struct risim_config risim_config;
typedef struct risim_trace risim_trace;
typedef struct risim_sweep risim_sweep;
typedef struct risim_report risim_report;
typedef struct risim_study risim_study;

/* --- codebook ------------------------------------------------------------ */

RISIM_API risim_status risim_codebook_load(const char* path, risim_codebook** out);
RISIM_API risim_status risim_codebook_parse(const char* json_text, risim_codebook** out);
/* n_states >= 2 unity-magnitude states with uniformly spaced phases. */
RISIM_API risim_status risim_codebook_ideal(int n_states, risim_codebook** out);
RISIM_API risim_status risim_codebook_restrict(const risim_codebook* cb, const char* label,
                                               risim_codebook** out);
RISIM_API void risim_codebook_free(risim_codebook* cb);

RISIM_API int risim_codebook_n_states(const risim_codebook* cb);
/* Code of the state at sweep index k, or NULL if out of range. */
RISIM_API const char* risim_codebook_state_code(const risim_codebook* cb, int k);
RISIM_API risim_status risim_codebook_gamma(const risim_codebook* cb, const char* code,
                                            double f_hz, double* out_re, double* out_im);
/* Gap-based phase spread over all states at one frequency, degrees. */
RISIM_API risim_status risim_codebook_phase_std(const risim_codebook* cb, double f_hz,
                                                double* out_sigma_deg);
/* Writes "f_hz,sigma_deg,n_bit" rows over [f_lo, f_hi] at f_step. A step of 0
 * with f_lo == f_hi == 0 analyzes single-frequency codebooks at their common
 * sample frequency. */
RISIM_API risim_status risim_codebook_quality_write_csv(const risim_codebook* cb, double f_lo_hz,
                                                        double f_hi_hz, double f_step_hz,
                                                        const char* path);

/* Phase spread of an arbitrary phase set (degrees in, degrees out). */
RISIM_API risim_status risim_phase_std(const double* phases_deg, int n, double* out_sigma_deg);
/* N_bit = log2(360 / (sqrt(12) * sigma)). */
RISIM_API risim_status risim_equivalent_bits(double sigma_deg, double* out_n_bit);

/* --- scenario -------------------------------------------------------------- */

RISIM_API risim_status risim_scenario_load(const char* path, risim_scenario** out);
RISIM_API void risim_scenario_free(risim_scenario* s);
RISIM_API double risim_scenario_f_hz(const risim_scenario* s);
RISIM_API int risim_scenario_n_groups(const risim_scenario* s);
RISIM_API int risim_scenario_n_elements(const risim_scenario* s);

/* --- configurations -------------------------------------------------------- */

RISIM_API risim_status risim_config_uniform(const risim_scenario* s, const risim_codebook* cb,
                                            const char* code, risim_config** out);
RISIM_API risim_status risim_config_random(const risim_scenario* s, const risim_codebook* cb,
                                           uint64_t seed, risim_config** out);
RISIM_API void risim_config_free(risim_config* c);
RISIM_API int risim_config_n_groups(const risim_config* c);
/* Code assigned to a group, or NULL if out of range. */
RISIM_API const char* risim_config_code(const risim_config* c, int group_id);
RISIM_API risim_status risim_config_write_json(const risim_config* c, const char* path);

/* --- received power -------------------------------------------------------- */

/* Model power for an assignment; f_hz <= 0 uses the scenario frequency. */
RISIM_API risim_status risim_received_power(const risim_scenario* s, const risim_codebook* cb,
                                            const risim_config* c, double f_hz,
                                            double* out_watts);
/* Same-size reference reflector (uniform gamma = 1 at 180 degrees). */
RISIM_API risim_status risim_plate_power(const risim_scenario* s, double f_hz, double* out_watts);

/* --- optimization ----------------------------------------------------------- */

typedef struct risim_opt_settings {
  int max_iterations;     /* full passes over all groups (default 5) */
  double epsilon;         /* relative per-pass improvement threshold (default 1e-4) */
  double noise_sigma_db;  /* dB-domain Gaussian measurement noise, 0 = off */
  uint64_t noise_seed;
} risim_opt_settings;

RISIM_API void risim_opt_settings_default(risim_opt_settings* out);

/* Greedy per-group sweep. out_trace may be NULL. */
RISIM_API risim_status risim_optimize(const risim_scenario* s, const risim_codebook* cb,
                                      const risim_opt_settings* settings, risim_config** out,
                                      risim_trace** out_trace);
/* Ground-truth search; guarded against spaces above 10^7 configurations. */
RISIM_API risim_status risim_exhaustive_optimize(const risim_scenario* s,
                                                 const risim_codebook* cb, risim_config** out);

RISIM_API void risim_trace_free(risim_trace* t);
RISIM_API int risim_trace_n_steps(const risim_trace* t);
RISIM_API risim_status risim_trace_step(const risim_trace* t, int i, int* out_pass,
                                        int* out_group_id, const char** out_code,
                                        double* out_p_r_watts);
RISIM_API int risim_trace_iterations(const risim_trace* t);
RISIM_API long long risim_trace_evaluations(const risim_trace* t);
RISIM_API double risim_trace_final_power(const risim_trace* t);
RISIM_API risim_status risim_trace_write_csv(const risim_trace* t, const char* path);

/* --- frequency sweeps ----------------------------------------------------- */

/* Optimize at f_opt, freeze the assignment, sweep [f_lo, f_hi] at f_step.
 * out_config and out_trace may be NULL. */
RISIM_API risim_status risim_optimize_and_sweep(const risim_scenario* s, const risim_codebook* cb,
                                                double f_opt_hz, double f_lo_hz, double f_hi_hz,
                                                double f_step_hz,
                                                const risim_opt_settings* settings,
                                                risim_sweep** out_sweep, risim_config** out_config,
                                                risim_trace** out_trace);
/* Sweep a frozen assignment under the given curve label. */
RISIM_API risim_status risim_sweep_config(const risim_scenario* s, const risim_codebook* cb,
                                          const risim_config* c, const char* label,
                                          double f_lo_hz, double f_hi_hz, double f_step_hz,
                                          risim_sweep** out);
RISIM_API risim_status risim_sweep_plate(const risim_scenario* s, const char* label,
                                         double f_lo_hz, double f_hi_hz, double f_step_hz,
                                         risim_sweep** out);
RISIM_API void risim_sweep_free(risim_sweep* sw);
RISIM_API int risim_sweep_n_points(const risim_sweep* sw);
RISIM_API risim_status risim_sweep_point(const risim_sweep* sw, int i, double* out_f_hz,
                                         double* out_p_r_watts);
RISIM_API const char* risim_sweep_label(const risim_sweep* sw);
/* Width of the contiguous interval around f_opt with power >= half the power
 * at f_opt, on linear interpolation between sweep points. */
RISIM_API risim_status risim_bandwidth_3db(const risim_sweep* sw, double f_opt_hz,
                                           double* out_width_hz);
RISIM_API risim_status risim_sweeps_write_csv(const risim_sweep* const* sweeps, int n_sweeps,
                                              const char* path);
RISIM_API risim_status risim_sweep_write_json(const risim_sweep* sw, const char* path);

/* --- resolution comparison -------------------------------------------------- */

/* Greedy-optimize per codebook subset; deltas are against the last label. */
RISIM_API risim_status risim_compare_resolutions(const risim_scenario* s, const risim_codebook* cb,
                                                 const char* const* labels, int n_labels,
                                                 const risim_opt_settings* settings,
                                                 risim_report** out);
RISIM_API void risim_report_free(risim_report* r);
RISIM_API int risim_report_n_entries(const risim_report* r);
RISIM_API risim_status risim_report_entry(const risim_report* r, int i, const char** out_label,
                                          double* out_p_r_watts, double* out_delta_db);
RISIM_API const char* risim_report_reference_label(const risim_report* r);
RISIM_API risim_status risim_report_write_json(const risim_report* r, const char* path);

/* --- quantization study ------------------------------------------------------ */

/* Mean received-power penalty of nearest-state projection against the
 * continuous-phase bound for ideal codebooks of 2^bits states, over seeded
 * random far-field draws on an n_rows x n_cols surface. */
RISIM_API risim_status risim_quantization_study(int n_rows, int n_cols, double d_x_m,
                                                double d_y_m, double f_hz,
                                                const int* resolution_bits, int n_resolutions,
                                                int trials, uint64_t seed, risim_study** out);
RISIM_API void risim_study_free(risim_study* st);
RISIM_API int risim_study_n_entries(const risim_study* st);
RISIM_API risim_status risim_study_entry(const risim_study* st, int i, const char** out_label,
                                         double* out_mean_loss_db, double* out_stddev_loss_db);
RISIM_API risim_status risim_study_write_csv(const risim_study* st, const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RISIM_H */
