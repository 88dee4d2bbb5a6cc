// SPDX-License-Identifier: Apache-2.0
//
// risim - physics-based simulator for RIS-assisted wireless links
// Copyright (c) 2026 risim contributors

#include "core/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/json_util.hpp"
#include "core/numerics.hpp"

namespace risim {

namespace {

AntennaPattern parse_pattern(const Json& jpattern, const std::string& path) {
  const std::string kind = as_string(require_field(jpattern, "kind", path), path + ".kind");
  double gain = 1.0;
  if (jpattern.contains("gain_dbi")) {
    gain = db10_to_linear(as_number(jpattern["gain_dbi"], path + ".gain_dbi"));
  }
  if (kind == "isotropic") {
    return make_isotropic(gain);
  }
  if (kind == "cosine-power") {
    const double q = as_number(require_field(jpattern, "q", path), path + ".q");
    if (!(q >= 0.0)) {
      fail(ErrorCode::parse_error, "field '" + path + ".q' must be >= 0");
    }
    return make_cosine_power(q, gain);
  }
  fail(ErrorCode::parse_error,
       "field '" + path + ".kind' must be 'isotropic' or 'cosine-power', got '" + kind + "'");
}

struct LocalFrame {
  Vec3 position;  // surface center in world coordinates
  Vec3 x_axis;    // broadside
  Vec3 y_axis;    // surface horizontal
  Vec3 z_axis;    // surface vertical

  Vec3 to_local_point(Vec3 p) const {
    const Vec3 d = p - position;
    return {dot(d, x_axis), dot(d, y_axis), dot(d, z_axis)};
  }
  Vec3 to_local_direction(Vec3 d) const {
    return {dot(d, x_axis), dot(d, y_axis), dot(d, z_axis)};
  }
};

LocalFrame parse_frame(const Json& doc) {
  LocalFrame frame{{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
  if (!doc.contains("ris")) return frame;
  const Json& jris = doc["ris"];
  if (jris.contains("pos_m")) frame.position = as_vec3(jris["pos_m"], "ris.pos_m");
  Vec3 normal{1.0, 0.0, 0.0};
  Vec3 up{0.0, 0.0, 1.0};
  if (jris.contains("normal")) normal = as_vec3(jris["normal"], "ris.normal");
  if (jris.contains("up")) up = as_vec3(jris["up"], "ris.up");
  const Vec3 x_axis = normalize(normal);
  const Vec3 residual = up - dot(up, x_axis) * x_axis;
  if (norm(residual) < 1e-9) {
    fail(ErrorCode::parse_error, "field 'ris.up' must not be parallel to 'ris.normal'");
  }
  const Vec3 z_axis = normalize(residual);
  frame.x_axis = x_axis;
  frame.z_axis = z_axis;
  frame.y_axis = cross(z_axis, x_axis);
  return frame;
}

}  // namespace

LoadedScenario parse_scenario(const std::string& json_text) {
  const Json doc = parse_json_text(json_text, "scenario");

  const Json& jgrid = require_field(doc, "grid", "");
  const int n_rows = as_int(require_field(jgrid, "n_rows", "grid"), "grid.n_rows");
  const int n_cols = as_int(require_field(jgrid, "n_cols", "grid"), "grid.n_cols");
  const double d_x = as_number(require_field(jgrid, "d_x_m", "grid"), "grid.d_x_m");
  const double d_y = as_number(require_field(jgrid, "d_y_m", "grid"), "grid.d_y_m");
  if (n_rows < 1 || n_cols < 1) {
    fail(ErrorCode::parse_error, "field 'grid.n_rows'/'grid.n_cols' must be >= 1");
  }
  if (!(d_x > 0.0) || !(d_y > 0.0)) {
    fail(ErrorCode::parse_error, "field 'grid.d_x_m'/'grid.d_y_m' must be positive");
  }

  const Json& jgrouping = require_field(doc, "grouping", "");
  const int cells = as_int(require_field(jgrouping, "cells_per_group", "grouping"),
                           "grouping.cells_per_group");
  if (cells < 1 || n_rows % cells != 0) {
    fail(ErrorCode::parse_error,
         "field 'grouping.cells_per_group' must divide grid.n_rows (" + std::to_string(n_rows) +
             ")");
  }

  const LocalFrame frame = parse_frame(doc);

  LoadedScenario ls;
  ls.grid = build_grid(n_rows, n_cols, d_x, d_y, {0.0, 0.0, 0.0});
  ls.groups = column_groups(ls.grid, cells);

  const Json& jtx = require_field(doc, "tx", "");
  const Json& jrx = require_field(doc, "rx", "");
  ls.scenario.tx_pos = frame.to_local_point(as_vec3(require_field(jtx, "pos_m", "tx"), "tx.pos_m"));
  ls.scenario.rx_pos = frame.to_local_point(as_vec3(require_field(jrx, "pos_m", "rx"), "rx.pos_m"));
  ls.scenario.tx_pattern = parse_pattern(require_field(jtx, "pattern", "tx"), "tx.pattern");
  ls.scenario.rx_pattern = parse_pattern(require_field(jrx, "pattern", "rx"), "rx.pattern");
  if (jtx.contains("boresight")) {
    ls.scenario.tx_boresight =
        normalize(frame.to_local_direction(as_vec3(jtx["boresight"], "tx.boresight")));
  }
  if (jrx.contains("boresight")) {
    ls.scenario.rx_boresight =
        normalize(frame.to_local_direction(as_vec3(jrx["boresight"], "rx.boresight")));
  }
  ls.scenario.cell_pattern = doc.contains("cell_pattern")
                                 ? parse_pattern(doc["cell_pattern"], "cell_pattern")
                                 : make_isotropic(1.0);

  const double p_t_dbm = as_number(require_field(doc, "p_t_dbm", ""), "p_t_dbm");
  ls.scenario.p_t = dbm_to_watts(p_t_dbm);
  ls.scenario.f = as_number(require_field(doc, "f_hz", ""), "f_hz");
  if (!(ls.scenario.f > 0.0)) {
    fail(ErrorCode::parse_error, "field 'f_hz' must be positive");
  }

  if (ls.scenario.tx_pos.x == 0.0) {
    fail(ErrorCode::degenerate_geometry, "tx position lies in the surface plane");
  }
  if (ls.scenario.rx_pos.x == 0.0) {
    fail(ErrorCode::degenerate_geometry, "rx position lies in the surface plane");
  }
  return ls;
}

LoadedScenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorCode::io_error, "cannot open scenario file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

namespace {

Scenario at_frequency(Scenario s, double f_hz) {
  s.f = f_hz;
  return s;
}

// Shared sweep path: every curve is produced by the same loop with
// substituted reflection coefficients.
template <class GammaAt>
SweepResult sweep_curve(const LoadedScenario& ls, const std::string& label,
                        std::optional<double> f_opt_hz, double f_lo_hz, double f_hi_hz,
                        double f_step_hz, GammaAt&& gamma_at) {
  SweepResult sweep;
  sweep.label = label;
  sweep.f_opt_hz = f_opt_hz;
  std::vector<std::complex<double>> scratch;
  for (const double f : frequency_grid(f_lo_hz, f_hi_hz, f_step_hz)) {
    const LinkTable table = build_link_table(ls.scenario, ls.grid, f);
    const std::vector<std::complex<double>> gamma = gamma_at(f);
    sweep.points.push_back({f, received_power(table, gamma, scratch)});
  }
  return sweep;
}

}  // namespace

SweepResult sweep_assignment(const LoadedScenario& ls, const Codebook& cb,
                             const std::vector<std::string>& codes, const std::string& label,
                             std::optional<double> f_opt_hz, double f_lo_hz, double f_hi_hz,
                             double f_step_hz) {
  return sweep_curve(ls, label, f_opt_hz, f_lo_hz, f_hi_hz, f_step_hz, [&](double f) {
    return expand_configuration(codes, ls.groups, cb, f).gamma;
  });
}

SweepResult sweep_plate(const LoadedScenario& ls, const std::string& label, double f_lo_hz,
                        double f_hi_hz, double f_step_hz) {
  return sweep_curve(ls, label, std::nullopt, f_lo_hz, f_hi_hz, f_step_hz, [&](double) {
    return std::vector<std::complex<double>>(
        static_cast<std::size_t>(ls.grid.n_elements()), plate_gamma());
  });
}

SweepRun optimize_and_sweep(const LoadedScenario& ls, const Codebook& cb, double f_opt_hz,
                            double f_lo_hz, double f_hi_hz, double f_step_hz,
                            const OptimizerSettings& settings) {
  if (!(f_opt_hz > 0.0)) {
    fail(ErrorCode::invalid_argument, "optimization frequency must be positive");
  }
  const Scenario at_opt = at_frequency(ls.scenario, f_opt_hz);
  GreedyResult greedy = greedy_optimize(at_opt, ls.grid, ls.groups, cb, settings);
  SweepRun run;
  run.sweep = sweep_assignment(ls, cb, greedy.config.codes, "optimized", f_opt_hz, f_lo_hz,
                               f_hi_hz, f_step_hz);
  run.config = std::move(greedy.config);
  run.trace = std::move(greedy.trace);
  return run;
}

namespace {

double interpolated_power(const SweepResult& sweep, double f_hz) {
  const auto& pts = sweep.points;
  auto hi = std::lower_bound(pts.begin(), pts.end(), f_hz,
                             [](const SweepPoint& p, double f) { return p.f_hz < f; });
  if (hi == pts.end()) return pts.back().p_r;
  if (hi->f_hz == f_hz || hi == pts.begin()) return hi->p_r;
  const auto lo = hi - 1;
  const double t = (f_hz - lo->f_hz) / (hi->f_hz - lo->f_hz);
  return lo->p_r + t * (hi->p_r - lo->p_r);
}

double crossing(const SweepPoint& inside, const SweepPoint& outside, double threshold) {
  const double t = (threshold - inside.p_r) / (outside.p_r - inside.p_r);
  return inside.f_hz + t * (outside.f_hz - inside.f_hz);
}

}  // namespace

double bandwidth_3db(const SweepResult& sweep, double f_opt_hz) {
  const auto& pts = sweep.points;
  if (pts.empty()) {
    fail(ErrorCode::invalid_argument, "sweep has no points");
  }
  if (f_opt_hz < pts.front().f_hz || f_opt_hz > pts.back().f_hz) {
    fail(ErrorCode::invalid_argument, "f_opt lies outside the swept band");
  }
  const double p_opt = interpolated_power(sweep, f_opt_hz);
  if (!(p_opt > 0.0)) {
    fail(ErrorCode::invalid_argument, "swept power at f_opt must be positive");
  }
  const double threshold = p_opt / 2.0;

  // Index of the last point at or below f_opt.
  std::size_t anchor = 0;
  while (anchor + 1 < pts.size() && pts[anchor + 1].f_hz <= f_opt_hz) ++anchor;

  double left = pts.front().f_hz;
  {
    SweepPoint inside{f_opt_hz, p_opt};
    for (std::size_t i = anchor + 1; i-- > 0;) {
      if (pts[i].p_r < threshold) {
        left = crossing(inside, pts[i], threshold);
        break;
      }
      inside = pts[i];
    }
  }
  double right = pts.back().f_hz;
  {
    SweepPoint inside{f_opt_hz, p_opt};
    for (std::size_t i = anchor + 1; i < pts.size(); ++i) {
      if (pts[i].p_r < threshold) {
        right = crossing(inside, pts[i], threshold);
        break;
      }
      inside = pts[i];
    }
  }
  return right - left;
}

ResolutionReport compare_resolutions(const LoadedScenario& ls, const Codebook& cb,
                                     const std::vector<std::string>& labels,
                                     const OptimizerSettings& settings) {
  std::vector<std::string> unique;
  for (const std::string& label : labels) {
    if (std::find(unique.begin(), unique.end(), label) == unique.end()) unique.push_back(label);
  }
  if (unique.empty()) {
    fail(ErrorCode::invalid_argument, "at least one resolution label is required");
  }
  ResolutionReport report;
  report.reference_label = unique.back();
  for (const std::string& label : unique) {
    const Codebook restricted = cb.restrict_to(label);
    const GreedyResult result = greedy_optimize(ls.scenario, ls.grid, ls.groups, restricted, settings);
    report.entries.push_back({label, result.trace.final_power(), 0.0});
  }
  const double p_ref = report.entries.back().p_r;
  for (ResolutionEntry& entry : report.entries) {
    entry.delta_db = linear_to_db10(entry.p_r / p_ref);
  }
  return report;
}

Vec3 random_farfield_point(const SurfaceGrid& grid, Rng& rng) {
  const double diagonal = std::hypot(grid.width(), grid.height());
  const double radius = 100.0 * diagonal;
  const double cap = std::sin(deg_to_rad(60.0));
  double u = 0.0;
  double v = 0.0;
  do {
    u = rng.uniform(-cap, cap);
    v = rng.uniform(-cap, cap);
  } while (u * u + v * v >= cap * cap);
  return {radius * std::sqrt(1.0 - u * u - v * v), radius * u, radius * v};
}

QuantizationStudy quantization_study(const SurfaceGrid& grid, const std::vector<Codebook>& codebooks,
                                     const std::vector<std::string>& labels, int trials,
                                     std::uint64_t seed, double f_hz) {
  if (trials < 1) {
    fail(ErrorCode::invalid_argument, "trials must be >= 1");
  }
  if (codebooks.empty() || codebooks.size() != labels.size()) {
    fail(ErrorCode::invalid_argument, "one label per codebook is required");
  }
  const GroupMap groups = column_groups(grid, 1);

  QuantizationStudy study;
  study.trials = trials;
  study.seed = seed;

  Rng rng(seed);
  std::vector<std::vector<double>> losses(codebooks.size());
  std::vector<std::complex<double>> scratch;
  for (int trial = 0; trial < trials; ++trial) {
    Scenario s;
    s.tx_pos = random_farfield_point(grid, rng);
    s.rx_pos = random_farfield_point(grid, rng);
    s.tx_pattern = make_isotropic(1.0);
    s.rx_pattern = make_isotropic(1.0);
    s.cell_pattern = make_isotropic(1.0);
    s.p_t = 1.0;
    s.f = f_hz;

    const std::vector<double> ideal = ideal_phase_profile(s, grid);
    const LinkTable table = build_link_table(s, grid, f_hz);
    std::vector<std::complex<double>> continuous(ideal.size());
    for (std::size_t i = 0; i < ideal.size(); ++i) continuous[i] = std::polar(1.0, ideal[i]);
    const double p_continuous = received_power(table, continuous, scratch);

    for (std::size_t c = 0; c < codebooks.size(); ++c) {
      const Configuration config = quantize_profile(ideal, groups, codebooks[c], f_hz);
      const double p = received_power(table, config.gamma, scratch);
      losses[c].push_back(linear_to_db10(p_continuous / p));
    }
  }

  for (std::size_t c = 0; c < codebooks.size(); ++c) {
    double mean = 0.0;
    for (const double x : losses[c]) mean += x;
    mean /= static_cast<double>(trials);
    double var = 0.0;
    for (const double x : losses[c]) var += (x - mean) * (x - mean);
    const double stddev = trials > 1 ? std::sqrt(var / static_cast<double>(trials - 1)) : 0.0;
    study.entries.push_back({labels[c], codebooks[c].size(), mean, stddev});
  }
  return study;
}

// --- result emission --------------------------------------------------------

std::string format_g17(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    fail(ErrorCode::io_error, "cannot open output file '" + path + "'");
  }
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) {
    fail(ErrorCode::io_error, "failed writing output file '" + path + "'");
  }
}

void dump_json(const Json& doc, const std::string& path) {
  std::ofstream out = open_output(path);
  out << doc.dump(2) << "\n";
  finish_output(out, path);
}

}  // namespace

void write_sweep_csv(std::span<const SweepResult> sweeps, const std::string& path) {
  std::ofstream out = open_output(path);
  out << "f_hz,p_r_watts,p_r_dbm,label\n";
  for (const SweepResult& sweep : sweeps) {
    for (const SweepPoint& pt : sweep.points) {
      out << format_g17(pt.f_hz) << ',' << format_g17(pt.p_r) << ','
          << format_g17(watts_to_dbm(pt.p_r)) << ',' << sweep.label << '\n';
    }
  }
  finish_output(out, path);
}

void write_sweep_json(const SweepResult& sweep, const std::string& path) {
  Json doc;
  doc["schema_version"] = 1;
  doc["label"] = sweep.label;
  if (sweep.f_opt_hz) {
    doc["f_opt_hz"] = *sweep.f_opt_hz;
  } else {
    doc["f_opt_hz"] = nullptr;
  }
  Json points = Json::array();
  for (const SweepPoint& pt : sweep.points) {
    points.push_back(Json{{"f_hz", pt.f_hz}, {"p_r_watts", pt.p_r}});
  }
  doc["points"] = std::move(points);
  dump_json(doc, path);
}

void write_report_json(const ResolutionReport& report, const std::string& path) {
  Json doc;
  doc["schema_version"] = 1;
  doc["reference_label"] = report.reference_label;
  Json entries = Json::array();
  for (const ResolutionEntry& e : report.entries) {
    entries.push_back(Json{{"label", e.label},
                           {"p_r_watts", e.p_r},
                           {"p_r_dbm", watts_to_dbm(e.p_r)},
                           {"delta_db", e.delta_db}});
  }
  doc["entries"] = std::move(entries);
  dump_json(doc, path);
}

void write_study_csv(const QuantizationStudy& study, const std::string& path) {
  std::ofstream out = open_output(path);
  out << "resolution_label,n_states,mean_loss_db,stddev_loss_db,trials\n";
  for (const QuantizationEntry& e : study.entries) {
    out << e.label << ',' << e.n_states << ',' << format_g17(e.mean_loss_db) << ','
        << format_g17(e.stddev_loss_db) << ',' << study.trials << '\n';
  }
  finish_output(out, path);
}

void write_trace_csv(const OptimizationTrace& trace, const std::string& path) {
  std::ofstream out = open_output(path);
  out << "step,pass,group_id,code,p_r_watts\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    out << i << ',' << s.pass << ',' << s.group_id << ',' << s.code << ','
        << format_g17(s.p_r_after) << '\n';
  }
  finish_output(out, path);
}

void write_config_json(const std::vector<std::string>& codes, const std::string& path) {
  Json assignment = Json::object();
  for (std::size_t g = 0; g < codes.size(); ++g) {
    assignment[std::to_string(g)] = codes[g];
  }
  Json doc;
  doc["schema_version"] = 1;
  doc["n_groups"] = codes.size();
  doc["assignment"] = std::move(assignment);
  dump_json(doc, path);
}

void write_quality_csv(std::span<const QualityRow> rows, const std::string& path) {
  std::ofstream out = open_output(path);
  out << "f_hz,sigma_deg,n_bit\n";
  for (const QualityRow& row : rows) {
    out << format_g17(row.f_hz) << ',' << format_g17(row.sigma_deg) << ','
        << format_g17(row.n_bit) << '\n';
  }
  finish_output(out, path);
}

}  // namespace risim
