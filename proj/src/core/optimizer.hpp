// SPDX-License-Identifier: Apache-2.0
//
// risim - physics-based simulator for RIS-assisted wireless links
// Copyright (c) 2026 risim contributors

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/channel.hpp"

namespace risim {

struct OptimizerSettings {
  int max_iterations = 5;       // full passes over all groups
  double epsilon = 1e-4;        // relative per-pass improvement threshold
  double noise_sigma_db = 0.0;  // optional dB-domain Gaussian measurement noise (0 = off)
  std::uint64_t noise_seed = 0;
};

struct TraceStep {
  int pass = 0;
  int group_id = 0;
  std::string code;
  double p_r_after = 0.0;  // model power after this commit [W]
};

struct OptimizationTrace {
  std::vector<TraceStep> steps;
  int iterations_completed = 0;
  long long evaluations = 0;

  double final_power() const { return steps.empty() ? 0.0 : steps.back().p_r_after; }
};

struct GreedyResult {
  Configuration config;
  OptimizationTrace trace;
};

// Iterative per-group sweep: for each group in index order every code is
// evaluated with the rest of the surface held fixed and the argmax committed
// (ties break to the lowest code index, which also makes a commit never
// decrease power since the incumbent is among the candidates). Full passes
// repeat until max_iterations, or until a pass improves on the previous pass
// by less than epsilon (checked from the second pass on). Starts from a
// uniform assignment of the first code unless initial_codes is given.
GreedyResult greedy_optimize(const Scenario& s, const SurfaceGrid& grid, const GroupMap& groups,
                             const Codebook& cb, const OptimizerSettings& settings = {},
                             const std::vector<std::string>* initial_codes = nullptr);

// Ground-truth search over every assignment; ties resolve to the
// lexicographically smallest code-index vector. Guarded against search
// spaces above 10^7 configurations.
Configuration exhaustive_optimize(const Scenario& s, const SurfaceGrid& grid,
                                  const GroupMap& groups, const Codebook& cb);

// Nearest-state projection of an ideal per-element phase profile: each group
// gets the code whose phase is circularly closest to the (circular-mean)
// ideal phase over its elements. Magnitudes are ignored.
Configuration quantize_profile(const std::vector<double>& ideal_phase_rad, const GroupMap& groups,
                               const Codebook& cb, double f_hz);

// Baseline assignments.
std::vector<std::string> uniform_codes(const GroupMap& groups, const Codebook& cb,
                                       const std::string& code);
std::vector<std::string> random_codes(const GroupMap& groups, const Codebook& cb,
                                      std::uint64_t seed);

}  // namespace risim
