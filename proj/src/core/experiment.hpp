// SPDX-License-Identifier: Apache-2.0
//
// risim - physics-based simulator for RIS-assisted wireless links
// Copyright (c) 2026 risim contributors

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/optimizer.hpp"
#include "core/rng.hpp"

namespace risim {

// A scenario file fully resolved into the surface-local frame: the surface
// center is the origin and broadside is +x.
struct LoadedScenario {
  Scenario scenario;
  SurfaceGrid grid;
  GroupMap groups;
};

LoadedScenario parse_scenario(const std::string& json_text);
LoadedScenario load_scenario(const std::string& path);

struct SweepPoint {
  double f_hz = 0.0;
  double p_r = 0.0;  // [W]
};

struct SweepResult {
  std::string label;
  std::optional<double> f_opt_hz;
  std::vector<SweepPoint> points;  // sorted by frequency
};

struct SweepRun {
  SweepResult sweep;
  Configuration config;
  OptimizationTrace trace;
};

// Greedy-optimize at f_opt, freeze the assignment, then evaluate it across
// the band re-expanding the (possibly dispersive) codebook at each point.
SweepRun optimize_and_sweep(const LoadedScenario& ls, const Codebook& cb, double f_opt_hz,
                            double f_lo_hz, double f_hi_hz, double f_step_hz,
                            const OptimizerSettings& settings = {});

// Same sweep path for an arbitrary frozen assignment.
SweepResult sweep_assignment(const LoadedScenario& ls, const Codebook& cb,
                             const std::vector<std::string>& codes, const std::string& label,
                             std::optional<double> f_opt_hz, double f_lo_hz, double f_hi_hz,
                             double f_step_hz);

// Reference reflector of the same dimensions, swept over the same band.
SweepResult sweep_plate(const LoadedScenario& ls, const std::string& label, double f_lo_hz,
                        double f_hi_hz, double f_step_hz);

// Width of the maximal contiguous interval around f_opt where the swept power
// stays at or above half its value at f_opt, on linear interpolation.
double bandwidth_3db(const SweepResult& sweep, double f_opt_hz);

struct ResolutionEntry {
  std::string label;
  double p_r = 0.0;      // optimized power [W]
  double delta_db = 0.0; // vs the reference (last) label
};

struct ResolutionReport {
  std::string reference_label;
  std::vector<ResolutionEntry> entries;
};

// Greedy-optimize independently per codebook subset; deltas are against the
// last label given. Duplicate labels collapse to the first occurrence.
ResolutionReport compare_resolutions(const LoadedScenario& ls, const Codebook& cb,
                                     const std::vector<std::string>& labels,
                                     const OptimizerSettings& settings = {});

struct QuantizationEntry {
  std::string label;
  int n_states = 0;
  double mean_loss_db = 0.0;
  double stddev_loss_db = 0.0;
};

struct QuantizationStudy {
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<QuantizationEntry> entries;
};

// Far-field geometry draw: both antennas at 100x the aperture diagonal with
// uniform-random direction cosines inside the 60-degree front cone.
Vec3 random_farfield_point(const SurfaceGrid& grid, Rng& rng);

// Mean received-power penalty of projecting the co-phasing profile onto each
// codebook, against the continuous-phase bound, over seeded random far-field
// draws with per-element control.
QuantizationStudy quantization_study(const SurfaceGrid& grid, const std::vector<Codebook>& codebooks,
                                     const std::vector<std::string>& labels, int trials,
                                     std::uint64_t seed, double f_hz);

// --- result emission ------------------------------------------------------

std::string format_g17(double value);

void write_sweep_csv(std::span<const SweepResult> sweeps, const std::string& path);
void write_sweep_json(const SweepResult& sweep, const std::string& path);
void write_report_json(const ResolutionReport& report, const std::string& path);
void write_study_csv(const QuantizationStudy& study, const std::string& path);
void write_trace_csv(const OptimizationTrace& trace, const std::string& path);
void write_config_json(const std::vector<std::string>& codes, const std::string& path);
void write_quality_csv(std::span<const QualityRow> rows, const std::string& path);

}  // namespace risim
