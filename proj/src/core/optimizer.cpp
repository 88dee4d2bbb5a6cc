// SPDX-License-Identifier: Apache-2.0
//
// risim - physics-based simulator for RIS-assisted wireless links
// Copyright (c) 2026 risim contributors

#include "core/optimizer.hpp"

#include <cmath>

#include "core/numerics.hpp"
#include "core/rng.hpp"

namespace risim {

namespace {

void check_groups(const SurfaceGrid& grid, const GroupMap& groups) {
  if (static_cast<int>(groups.group_of_element.size()) != grid.n_elements()) {
    fail(ErrorCode::invalid_argument, "group map does not cover the grid's elements");
  }
}

void check_settings(const OptimizerSettings& settings) {
  if (settings.max_iterations < 1) {
    fail(ErrorCode::invalid_argument, "max_iterations must be >= 1");
  }
  if (!(settings.epsilon >= 0.0)) {
    fail(ErrorCode::invalid_argument, "epsilon must be >= 0");
  }
  if (!(settings.noise_sigma_db >= 0.0)) {
    fail(ErrorCode::invalid_argument, "noise_sigma_db must be >= 0");
  }
}

}  // namespace

GreedyResult greedy_optimize(const Scenario& s, const SurfaceGrid& grid, const GroupMap& groups,
                             const Codebook& cb, const OptimizerSettings& settings,
                             const std::vector<std::string>* initial_codes) {
  check_groups(grid, groups);
  check_settings(settings);

  const int n_states = cb.size();
  const LinkTable table = build_link_table(s, grid, s.f);

  std::vector<std::complex<double>> state_gamma(static_cast<std::size_t>(n_states));
  for (int k = 0; k < n_states; ++k) state_gamma[static_cast<std::size_t>(k)] = cb.gamma(k, s.f);

  std::vector<int> assignment(static_cast<std::size_t>(groups.n_groups), 0);
  if (initial_codes != nullptr) {
    if (static_cast<int>(initial_codes->size()) != groups.n_groups) {
      fail(ErrorCode::invalid_argument, "initial assignment does not match the group count");
    }
    for (int g = 0; g < groups.n_groups; ++g) {
      assignment[static_cast<std::size_t>(g)] = cb.require_index((*initial_codes)[static_cast<std::size_t>(g)]);
    }
  }

  std::vector<std::complex<double>> gamma(groups.group_of_element.size());
  for (std::size_t e = 0; e < gamma.size(); ++e) {
    gamma[e] = state_gamma[static_cast<std::size_t>(assignment[static_cast<std::size_t>(groups.group_of_element[e])])];
  }

  const bool noisy = settings.noise_sigma_db > 0.0;
  Rng noise_rng(settings.noise_seed);

  GreedyResult result;
  std::vector<std::complex<double>> scratch;
  double previous_pass_power = 0.0;

  for (int pass = 1; pass <= settings.max_iterations; ++pass) {
    double pass_power = 0.0;
    for (int g = 0; g < groups.n_groups; ++g) {
      const std::vector<int>& members = groups.elements_of_group[static_cast<std::size_t>(g)];
      int best_k = -1;
      double best_measured = 0.0;
      double best_model = 0.0;
      for (int k = 0; k < n_states; ++k) {
        for (const int e : members) gamma[static_cast<std::size_t>(e)] = state_gamma[static_cast<std::size_t>(k)];
        const double model = received_power(table, gamma, scratch);
        result.trace.evaluations += 1;
        double measured = model;
        if (noisy) measured = model * db10_to_linear(settings.noise_sigma_db * noise_rng.gaussian());
        if (best_k < 0 || measured > best_measured) {
          best_k = k;
          best_measured = measured;
          best_model = model;
        }
      }
      assignment[static_cast<std::size_t>(g)] = best_k;
      for (const int e : members) gamma[static_cast<std::size_t>(e)] = state_gamma[static_cast<std::size_t>(best_k)];
      result.trace.steps.push_back({pass, g, cb.state(best_k).code, best_model});
      pass_power = best_model;
    }
    result.trace.iterations_completed = pass;
    if (pass >= 2) {
      const bool negligible = previous_pass_power > 0.0
                                  ? (pass_power - previous_pass_power) / previous_pass_power <
                                        settings.epsilon
                                  : pass_power <= 0.0;
      if (negligible) break;
    }
    previous_pass_power = pass_power;
  }

  result.config.codes.resize(static_cast<std::size_t>(groups.n_groups));
  for (int g = 0; g < groups.n_groups; ++g) {
    result.config.codes[static_cast<std::size_t>(g)] = cb.state(assignment[static_cast<std::size_t>(g)]).code;
  }
  result.config.gamma = std::move(gamma);
  result.config.expanded_at_hz = s.f;
  return result;
}

Configuration exhaustive_optimize(const Scenario& s, const SurfaceGrid& grid,
                                  const GroupMap& groups, const Codebook& cb) {
  check_groups(grid, groups);
  const int n_states = cb.size();
  const double space = std::pow(static_cast<double>(n_states), static_cast<double>(groups.n_groups));
  if (space > 1e7) {
    fail(ErrorCode::too_large,
         "exhaustive search over " + std::to_string(groups.n_groups) + " groups x " +
             std::to_string(n_states) + " states exceeds the 1e7 configuration guard");
  }

  const LinkTable table = build_link_table(s, grid, s.f);
  std::vector<std::complex<double>> state_gamma(static_cast<std::size_t>(n_states));
  for (int k = 0; k < n_states; ++k) state_gamma[static_cast<std::size_t>(k)] = cb.gamma(k, s.f);

  std::vector<int> indices(static_cast<std::size_t>(groups.n_groups), 0);
  std::vector<std::complex<double>> gamma(groups.group_of_element.size());
  std::vector<std::complex<double>> scratch;

  std::vector<int> best_indices;
  double best_power = -1.0;
  for (;;) {
    for (std::size_t e = 0; e < gamma.size(); ++e) {
      gamma[e] = state_gamma[static_cast<std::size_t>(indices[static_cast<std::size_t>(groups.group_of_element[e])])];
    }
    const double p = received_power(table, gamma, scratch);
    if (p > best_power) {
      best_power = p;
      best_indices = indices;
    }
    // Odometer over code indices; the last group advances fastest, so the
    // visit order is lexicographic and the first maximum seen is the
    // lexicographically smallest one.
    int g = groups.n_groups - 1;
    while (g >= 0) {
      if (++indices[static_cast<std::size_t>(g)] < n_states) break;
      indices[static_cast<std::size_t>(g)] = 0;
      --g;
    }
    if (g < 0) break;
  }

  std::vector<std::string> codes(static_cast<std::size_t>(groups.n_groups));
  for (int g = 0; g < groups.n_groups; ++g) {
    codes[static_cast<std::size_t>(g)] = cb.state(best_indices[static_cast<std::size_t>(g)]).code;
  }
  return expand_configuration(codes, groups, cb, s.f);
}

Configuration quantize_profile(const std::vector<double>& ideal_phase_rad, const GroupMap& groups,
                               const Codebook& cb, double f_hz) {
  if (ideal_phase_rad.size() != groups.group_of_element.size()) {
    fail(ErrorCode::invalid_argument, "ideal phase profile does not match the element count");
  }
  std::vector<double> state_phase(static_cast<std::size_t>(cb.size()));
  for (int k = 0; k < cb.size(); ++k) {
    state_phase[static_cast<std::size_t>(k)] = deg_to_rad(cb.phase_deg(k, f_hz));
  }
  std::vector<std::string> codes(static_cast<std::size_t>(groups.n_groups));
  for (int g = 0; g < groups.n_groups; ++g) {
    const std::vector<int>& members = groups.elements_of_group[static_cast<std::size_t>(g)];
    std::complex<double> resultant{0.0, 0.0};
    for (const int e : members) resultant += std::polar(1.0, ideal_phase_rad[static_cast<std::size_t>(e)]);
    const double target = std::arg(resultant);
    int best_k = 0;
    double best_dist = circular_distance_rad(state_phase[0], target);
    for (int k = 1; k < cb.size(); ++k) {
      const double dist = circular_distance_rad(state_phase[static_cast<std::size_t>(k)], target);
      if (dist < best_dist) {
        best_dist = dist;
        best_k = k;
      }
    }
    codes[static_cast<std::size_t>(g)] = cb.state(best_k).code;
  }
  return expand_configuration(codes, groups, cb, f_hz);
}

std::vector<std::string> uniform_codes(const GroupMap& groups, const Codebook& cb,
                                       const std::string& code) {
  cb.require_index(code);
  return std::vector<std::string>(static_cast<std::size_t>(groups.n_groups), code);
}

std::vector<std::string> random_codes(const GroupMap& groups, const Codebook& cb,
                                      std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::string> codes(static_cast<std::size_t>(groups.n_groups));
  for (int g = 0; g < groups.n_groups; ++g) {
    codes[static_cast<std::size_t>(g)] =
        cb.state(static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(cb.size())))).code;
  }
  return codes;
}

}  // namespace risim
