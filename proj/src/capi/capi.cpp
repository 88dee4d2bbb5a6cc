// SPDX-License-Identifier: Apache-2.0
//
// risim - physics-based simulator for RIS-assisted wireless links
// Copyright (c) 2026 risim contributors

#include "risim/risim.h"

#include <string>
#include <vector>

#include "core/experiment.hpp"
#include "core/parallel.hpp"

struct risim_codebook {
  risim::Codebook cb;
};
struct risim_scenario {
  risim::LoadedScenario ls;
};
struct risim_config {
  std::vector<std::string> codes;
};
struct risim_trace {
  risim::OptimizationTrace trace;
};
struct risim_sweep {
  risim::SweepResult sweep;
};
struct risim_report {
  risim::ResolutionReport report;
};
struct risim_study {
  risim::QuantizationStudy study;
};

namespace {

thread_local std::string g_last_error;

risim_status map_code(risim::ErrorCode code) {
  switch (code) {
    case risim::ErrorCode::invalid_argument:
      return RISIM_ERR_INVALID_ARGUMENT;
    case risim::ErrorCode::not_found:
      return RISIM_ERR_NOT_FOUND;
    case risim::ErrorCode::out_of_band:
      return RISIM_ERR_OUT_OF_BAND;
    case risim::ErrorCode::degenerate_geometry:
      return RISIM_ERR_DEGENERATE_GEOMETRY;
    case risim::ErrorCode::too_large:
      return RISIM_ERR_TOO_LARGE;
    case risim::ErrorCode::parse_error:
      return RISIM_ERR_PARSE;
    case risim::ErrorCode::io_error:
      return RISIM_ERR_IO;
  }
  return RISIM_ERR_INTERNAL;
}

template <class Fn>
risim_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return RISIM_OK;
  } catch (const risim::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RISIM_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) risim::fail(risim::ErrorCode::invalid_argument, what);
}

risim::OptimizerSettings to_core(const risim_opt_settings* settings) {
  risim::OptimizerSettings out;
  if (settings != nullptr) {
    out.max_iterations = settings->max_iterations;
    out.epsilon = settings->epsilon;
    out.noise_sigma_db = settings->noise_sigma_db;
    out.noise_seed = settings->noise_seed;
  }
  return out;
}

double pick_frequency(const risim_scenario* s, double f_hz) {
  return f_hz > 0.0 ? f_hz : s->ls.scenario.f;
}

}  // namespace

extern "C" {

const char* risim_version(void) { return "0.1.0"; }

const char* risim_status_name(risim_status status) {
  switch (status) {
    case RISIM_OK:
      return "ok";
    case RISIM_ERR_INVALID_ARGUMENT:
      return "invalid-argument";
    case RISIM_ERR_NOT_FOUND:
      return "not-found";
    case RISIM_ERR_OUT_OF_BAND:
      return "out-of-band";
    case RISIM_ERR_DEGENERATE_GEOMETRY:
      return "degenerate-geometry";
    case RISIM_ERR_TOO_LARGE:
      return "too-large";
    case RISIM_ERR_PARSE:
      return "parse-error";
    case RISIM_ERR_IO:
      return "io-error";
    case RISIM_ERR_INTERNAL:
      return "internal-error";
  }
  return "unknown";
}

const char* risim_last_error(void) { return g_last_error.c_str(); }

void risim_set_threads(int n) { risim::set_worker_count(n); }

/* --- codebook ------------------------------------------------------------ */

risim_status risim_codebook_load(const char* path, risim_codebook** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "path and out must be non-null");
    *out = new risim_codebook{risim::Codebook::load(path)};
  });
}

risim_status risim_codebook_parse(const char* json_text, risim_codebook** out) {
  return guarded([&] {
    require(json_text != nullptr && out != nullptr, "json_text and out must be non-null");
    *out = new risim_codebook{risim::Codebook::parse(json_text)};
  });
}

risim_status risim_codebook_ideal(int n_states, risim_codebook** out) {
  return guarded([&] {
    require(out != nullptr, "out must be non-null");
    *out = new risim_codebook{risim::Codebook::ideal(n_states)};
  });
}

risim_status risim_codebook_restrict(const risim_codebook* cb, const char* label,
                                     risim_codebook** out) {
  return guarded([&] {
    require(cb != nullptr && label != nullptr && out != nullptr,
            "cb, label and out must be non-null");
    *out = new risim_codebook{cb->cb.restrict_to(label)};
  });
}

void risim_codebook_free(risim_codebook* cb) { delete cb; }

int risim_codebook_n_states(const risim_codebook* cb) {
  return cb == nullptr ? 0 : cb->cb.size();
}

const char* risim_codebook_state_code(const risim_codebook* cb, int k) {
  if (cb == nullptr || k < 0 || k >= cb->cb.size()) return nullptr;
  return cb->cb.state(k).code.c_str();
}

risim_status risim_codebook_gamma(const risim_codebook* cb, const char* code, double f_hz,
                                  double* out_re, double* out_im) {
  return guarded([&] {
    require(cb != nullptr && code != nullptr && out_re != nullptr && out_im != nullptr,
            "cb, code and outputs must be non-null");
    const std::complex<double> g = cb->cb.gamma(code, f_hz);
    *out_re = g.real();
    *out_im = g.imag();
  });
}

risim_status risim_codebook_phase_std(const risim_codebook* cb, double f_hz,
                                      double* out_sigma_deg) {
  return guarded([&] {
    require(cb != nullptr && out_sigma_deg != nullptr, "cb and out must be non-null");
    std::vector<double> phases;
    phases.reserve(static_cast<std::size_t>(cb->cb.size()));
    for (int k = 0; k < cb->cb.size(); ++k) phases.push_back(cb->cb.phase_deg(k, f_hz));
    *out_sigma_deg = risim::phase_std_deg(std::move(phases));
  });
}

risim_status risim_codebook_quality_write_csv(const risim_codebook* cb, double f_lo_hz,
                                              double f_hi_hz, double f_step_hz,
                                              const char* path) {
  return guarded([&] {
    require(cb != nullptr && path != nullptr, "cb and path must be non-null");
    std::vector<risim::QualityRow> rows;
    if (f_step_hz == 0.0 && f_lo_hz == 0.0 && f_hi_hz == 0.0) {
      rows.push_back(risim::quality_single(cb->cb));
    } else {
      rows = risim::quality_sweep(cb->cb, f_lo_hz, f_hi_hz, f_step_hz);
    }
    risim::write_quality_csv(rows, path);
  });
}

risim_status risim_phase_std(const double* phases_deg, int n, double* out_sigma_deg) {
  return guarded([&] {
    require(phases_deg != nullptr && out_sigma_deg != nullptr && n >= 0,
            "phases and out must be non-null");
    *out_sigma_deg = risim::phase_std_deg(
        std::vector<double>(phases_deg, phases_deg + n));
  });
}

risim_status risim_equivalent_bits(double sigma_deg, double* out_n_bit) {
  return guarded([&] {
    require(out_n_bit != nullptr, "out must be non-null");
    *out_n_bit = risim::equivalent_bits(sigma_deg);
  });
}

/* --- scenario -------------------------------------------------------------- */

risim_status risim_scenario_load(const char* path, risim_scenario** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "path and out must be non-null");
    *out = new risim_scenario{risim::load_scenario(path)};
  });
}

void risim_scenario_free(risim_scenario* s) { delete s; }

double risim_scenario_f_hz(const risim_scenario* s) {
  return s == nullptr ? 0.0 : s->ls.scenario.f;
}

int risim_scenario_n_groups(const risim_scenario* s) {
  return s == nullptr ? 0 : s->ls.groups.n_groups;
}

int risim_scenario_n_elements(const risim_scenario* s) {
  return s == nullptr ? 0 : s->ls.grid.n_elements();
}

/* --- configurations -------------------------------------------------------- */

risim_status risim_config_uniform(const risim_scenario* s, const risim_codebook* cb,
                                  const char* code, risim_config** out) {
  return guarded([&] {
    require(s != nullptr && cb != nullptr && code != nullptr && out != nullptr,
            "scenario, cb, code and out must be non-null");
    *out = new risim_config{risim::uniform_codes(s->ls.groups, cb->cb, code)};
  });
}

risim_status risim_config_random(const risim_scenario* s, const risim_codebook* cb, uint64_t seed,
                                 risim_config** out) {
  return guarded([&] {
    require(s != nullptr && cb != nullptr && out != nullptr,
            "scenario, cb and out must be non-null");
    *out = new risim_config{risim::random_codes(s->ls.groups, cb->cb, seed)};
  });
}

void risim_config_free(risim_config* c) { delete c; }

int risim_config_n_groups(const risim_config* c) {
  return c == nullptr ? 0 : static_cast<int>(c->codes.size());
}

const char* risim_config_code(const risim_config* c, int group_id) {
  if (c == nullptr || group_id < 0 || group_id >= static_cast<int>(c->codes.size())) return nullptr;
  return c->codes[static_cast<std::size_t>(group_id)].c_str();
}

risim_status risim_config_write_json(const risim_config* c, const char* path) {
  return guarded([&] {
    require(c != nullptr && path != nullptr, "config and path must be non-null");
    risim::write_config_json(c->codes, path);
  });
}

/* --- received power -------------------------------------------------------- */

risim_status risim_received_power(const risim_scenario* s, const risim_codebook* cb,
                                  const risim_config* c, double f_hz, double* out_watts) {
  return guarded([&] {
    require(s != nullptr && cb != nullptr && c != nullptr && out_watts != nullptr,
            "scenario, cb, config and out must be non-null");
    const double f = pick_frequency(s, f_hz);
    const risim::Configuration config =
        risim::expand_configuration(c->codes, s->ls.groups, cb->cb, f);
    const risim::LinkTable table = risim::build_link_table(s->ls.scenario, s->ls.grid, f);
    *out_watts = risim::received_power(table, config.gamma);
  });
}

risim_status risim_plate_power(const risim_scenario* s, double f_hz, double* out_watts) {
  return guarded([&] {
    require(s != nullptr && out_watts != nullptr, "scenario and out must be non-null");
    const double f = pick_frequency(s, f_hz);
    const risim::LinkTable table = risim::build_link_table(s->ls.scenario, s->ls.grid, f);
    const std::vector<std::complex<double>> gamma(table.base.size(), risim::plate_gamma());
    *out_watts = risim::received_power(table, gamma);
  });
}

/* --- optimization ----------------------------------------------------------- */

void risim_opt_settings_default(risim_opt_settings* out) {
  if (out == nullptr) return;
  const risim::OptimizerSettings d;
  out->max_iterations = d.max_iterations;
  out->epsilon = d.epsilon;
  out->noise_sigma_db = d.noise_sigma_db;
  out->noise_seed = d.noise_seed;
}

risim_status risim_optimize(const risim_scenario* s, const risim_codebook* cb,
                            const risim_opt_settings* settings, risim_config** out,
                            risim_trace** out_trace) {
  return guarded([&] {
    require(s != nullptr && cb != nullptr && out != nullptr,
            "scenario, cb and out must be non-null");
    risim::GreedyResult result =
        risim::greedy_optimize(s->ls.scenario, s->ls.grid, s->ls.groups, cb->cb, to_core(settings));
    *out = new risim_config{std::move(result.config.codes)};
    if (out_trace != nullptr) *out_trace = new risim_trace{std::move(result.trace)};
  });
}

risim_status risim_exhaustive_optimize(const risim_scenario* s, const risim_codebook* cb,
                                       risim_config** out) {
  return guarded([&] {
    require(s != nullptr && cb != nullptr && out != nullptr,
            "scenario, cb and out must be non-null");
    risim::Configuration config =
        risim::exhaustive_optimize(s->ls.scenario, s->ls.grid, s->ls.groups, cb->cb);
    *out = new risim_config{std::move(config.codes)};
  });
}

void risim_trace_free(risim_trace* t) { delete t; }

int risim_trace_n_steps(const risim_trace* t) {
  return t == nullptr ? 0 : static_cast<int>(t->trace.steps.size());
}

risim_status risim_trace_step(const risim_trace* t, int i, int* out_pass, int* out_group_id,
                              const char** out_code, double* out_p_r_watts) {
  return guarded([&] {
    require(t != nullptr, "trace must be non-null");
    require(i >= 0 && i < static_cast<int>(t->trace.steps.size()), "step index out of range");
    const risim::TraceStep& step = t->trace.steps[static_cast<std::size_t>(i)];
    if (out_pass != nullptr) *out_pass = step.pass;
    if (out_group_id != nullptr) *out_group_id = step.group_id;
    if (out_code != nullptr) *out_code = step.code.c_str();
    if (out_p_r_watts != nullptr) *out_p_r_watts = step.p_r_after;
  });
}

int risim_trace_iterations(const risim_trace* t) {
  return t == nullptr ? 0 : t->trace.iterations_completed;
}

long long risim_trace_evaluations(const risim_trace* t) {
  return t == nullptr ? 0 : t->trace.evaluations;
}

double risim_trace_final_power(const risim_trace* t) {
  return t == nullptr ? 0.0 : t->trace.final_power();
}

risim_status risim_trace_write_csv(const risim_trace* t, const char* path) {
  return guarded([&] {
    require(t != nullptr && path != nullptr, "trace and path must be non-null");
    risim::write_trace_csv(t->trace, path);
  });
}

/* --- frequency sweeps ----------------------------------------------------- */

risim_status risim_optimize_and_sweep(const risim_scenario* s, const risim_codebook* cb,
                                      double f_opt_hz, double f_lo_hz, double f_hi_hz,
                                      double f_step_hz, const risim_opt_settings* settings,
                                      risim_sweep** out_sweep, risim_config** out_config,
                                      risim_trace** out_trace) {
  return guarded([&] {
    require(s != nullptr && cb != nullptr && out_sweep != nullptr,
            "scenario, cb and out_sweep must be non-null");
    risim::SweepRun run = risim::optimize_and_sweep(s->ls, cb->cb, f_opt_hz, f_lo_hz, f_hi_hz,
                                                    f_step_hz, to_core(settings));
    *out_sweep = new risim_sweep{std::move(run.sweep)};
    if (out_config != nullptr) *out_config = new risim_config{std::move(run.config.codes)};
    if (out_trace != nullptr) *out_trace = new risim_trace{std::move(run.trace)};
  });
}

risim_status risim_sweep_config(const risim_scenario* s, const risim_codebook* cb,
                                const risim_config* c, const char* label, double f_lo_hz,
                                double f_hi_hz, double f_step_hz, risim_sweep** out) {
  return guarded([&] {
    require(s != nullptr && cb != nullptr && c != nullptr && label != nullptr && out != nullptr,
            "scenario, cb, config, label and out must be non-null");
    *out = new risim_sweep{risim::sweep_assignment(s->ls, cb->cb, c->codes, label, std::nullopt,
                                                   f_lo_hz, f_hi_hz, f_step_hz)};
  });
}

risim_status risim_sweep_plate(const risim_scenario* s, const char* label, double f_lo_hz,
                               double f_hi_hz, double f_step_hz, risim_sweep** out) {
  return guarded([&] {
    require(s != nullptr && label != nullptr && out != nullptr,
            "scenario, label and out must be non-null");
    *out = new risim_sweep{risim::sweep_plate(s->ls, label, f_lo_hz, f_hi_hz, f_step_hz)};
  });
}

void risim_sweep_free(risim_sweep* sw) { delete sw; }

int risim_sweep_n_points(const risim_sweep* sw) {
  return sw == nullptr ? 0 : static_cast<int>(sw->sweep.points.size());
}

risim_status risim_sweep_point(const risim_sweep* sw, int i, double* out_f_hz,
                               double* out_p_r_watts) {
  return guarded([&] {
    require(sw != nullptr, "sweep must be non-null");
    require(i >= 0 && i < static_cast<int>(sw->sweep.points.size()), "point index out of range");
    const risim::SweepPoint& pt = sw->sweep.points[static_cast<std::size_t>(i)];
    if (out_f_hz != nullptr) *out_f_hz = pt.f_hz;
    if (out_p_r_watts != nullptr) *out_p_r_watts = pt.p_r;
  });
}

const char* risim_sweep_label(const risim_sweep* sw) {
  return sw == nullptr ? nullptr : sw->sweep.label.c_str();
}

risim_status risim_bandwidth_3db(const risim_sweep* sw, double f_opt_hz, double* out_width_hz) {
  return guarded([&] {
    require(sw != nullptr && out_width_hz != nullptr, "sweep and out must be non-null");
    *out_width_hz = risim::bandwidth_3db(sw->sweep, f_opt_hz);
  });
}

risim_status risim_sweeps_write_csv(const risim_sweep* const* sweeps, int n_sweeps,
                                    const char* path) {
  return guarded([&] {
    require(sweeps != nullptr && n_sweeps >= 0 && path != nullptr,
            "sweeps and path must be non-null");
    std::vector<risim::SweepResult> list;
    list.reserve(static_cast<std::size_t>(n_sweeps));
    for (int i = 0; i < n_sweeps; ++i) {
      require(sweeps[i] != nullptr, "sweep entries must be non-null");
      list.push_back(sweeps[i]->sweep);
    }
    risim::write_sweep_csv(list, path);
  });
}

risim_status risim_sweep_write_json(const risim_sweep* sw, const char* path) {
  return guarded([&] {
    require(sw != nullptr && path != nullptr, "sweep and path must be non-null");
    risim::write_sweep_json(sw->sweep, path);
  });
}

/* --- resolution comparison -------------------------------------------------- */

risim_status risim_compare_resolutions(const risim_scenario* s, const risim_codebook* cb,
                                       const char* const* labels, int n_labels,
                                       const risim_opt_settings* settings, risim_report** out) {
  return guarded([&] {
    require(s != nullptr && cb != nullptr && labels != nullptr && n_labels > 0 && out != nullptr,
            "scenario, cb, labels and out must be non-null");
    std::vector<std::string> list;
    list.reserve(static_cast<std::size_t>(n_labels));
    for (int i = 0; i < n_labels; ++i) {
      require(labels[i] != nullptr, "label entries must be non-null");
      list.emplace_back(labels[i]);
    }
    *out = new risim_report{
        risim::compare_resolutions(s->ls, cb->cb, list, to_core(settings))};
  });
}

void risim_report_free(risim_report* r) { delete r; }

int risim_report_n_entries(const risim_report* r) {
  return r == nullptr ? 0 : static_cast<int>(r->report.entries.size());
}

risim_status risim_report_entry(const risim_report* r, int i, const char** out_label,
                                double* out_p_r_watts, double* out_delta_db) {
  return guarded([&] {
    require(r != nullptr, "report must be non-null");
    require(i >= 0 && i < static_cast<int>(r->report.entries.size()),
            "entry index out of range");
    const risim::ResolutionEntry& e = r->report.entries[static_cast<std::size_t>(i)];
    if (out_label != nullptr) *out_label = e.label.c_str();
    if (out_p_r_watts != nullptr) *out_p_r_watts = e.p_r;
    if (out_delta_db != nullptr) *out_delta_db = e.delta_db;
  });
}

const char* risim_report_reference_label(const risim_report* r) {
  return r == nullptr ? nullptr : r->report.reference_label.c_str();
}

risim_status risim_report_write_json(const risim_report* r, const char* path) {
  return guarded([&] {
    require(r != nullptr && path != nullptr, "report and path must be non-null");
    risim::write_report_json(r->report, path);
  });
}

/* --- quantization study ------------------------------------------------------ */

risim_status risim_quantization_study(int n_rows, int n_cols, double d_x_m, double d_y_m,
                                      double f_hz, const int* resolution_bits, int n_resolutions,
                                      int trials, uint64_t seed, risim_study** out) {
  return guarded([&] {
    require(resolution_bits != nullptr && n_resolutions > 0 && out != nullptr,
            "resolutions and out must be non-null");
    const risim::SurfaceGrid grid = risim::build_grid(n_rows, n_cols, d_x_m, d_y_m);
    std::vector<risim::Codebook> codebooks;
    std::vector<std::string> labels;
    for (int i = 0; i < n_resolutions; ++i) {
      const int bits = resolution_bits[i];
      require(bits >= 1 && bits <= 20, "resolution bits must be in [1, 20]");
      codebooks.push_back(risim::Codebook::ideal(1 << bits));
      labels.push_back(std::to_string(bits) + "-bit");
    }
    *out = new risim_study{
        risim::quantization_study(grid, codebooks, labels, trials, seed, f_hz)};
  });
}

void risim_study_free(risim_study* st) { delete st; }

int risim_study_n_entries(const risim_study* st) {
  return st == nullptr ? 0 : static_cast<int>(st->study.entries.size());
}

risim_status risim_study_entry(const risim_study* st, int i, const char** out_label,
                               double* out_mean_loss_db, double* out_stddev_loss_db) {
  return guarded([&] {
    require(st != nullptr, "study must be non-null");
    require(i >= 0 && i < static_cast<int>(st->study.entries.size()),
            "entry index out of range");
    const risim::QuantizationEntry& e = st->study.entries[static_cast<std::size_t>(i)];
    if (out_label != nullptr) *out_label = e.label.c_str();
    if (out_mean_loss_db != nullptr) *out_mean_loss_db = e.mean_loss_db;
    if (out_stddev_loss_db != nullptr) *out_stddev_loss_db = e.stddev_loss_db;
  });
}

risim_status risim_study_write_csv(const risim_study* st, const char* path) {
  return guarded([&] {
    require(st != nullptr && path != nullptr, "study and path must be non-null");
    risim::write_study_csv(st->study, path);
  });
}

} /* extern "C" */
