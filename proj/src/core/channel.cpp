// SPDX-License-Identifier: Apache-2.0
//
// risim - physics-based simulator for RIS-assisted wireless links
// Copyright (c) 2026 risim contributors

#include "core/channel.hpp"

#include <cmath>

#include "core/numerics.hpp"
#include "core/parallel.hpp"

namespace risim {

AntennaPattern make_isotropic(double gain) {
  if (!(gain > 0.0) || !std::isfinite(gain)) {
    fail(ErrorCode::invalid_argument, "antenna gain must be positive");
  }
  return AntennaPattern{PatternKind::isotropic, 0.0, gain};
}

AntennaPattern make_cosine_power(double q, double gain) {
  if (!(q >= 0.0) || !std::isfinite(q)) {
    fail(ErrorCode::invalid_argument, "cosine-power exponent must be >= 0");
  }
  if (!(gain > 0.0) || !std::isfinite(gain)) {
    fail(ErrorCode::invalid_argument, "antenna gain must be positive");
  }
  return AntennaPattern{PatternKind::cosine_power, q, gain};
}

double pattern_value(const AntennaPattern& p, double theta) {
  if (theta >= pi / 2.0) return 0.0;
  if (p.kind == PatternKind::isotropic) return 1.0;
  return std::pow(std::cos(theta), 2.0 * p.q);
}

double gain_from_exponent(double q) { return 2.0 * (q + 1.0); }

double exponent_from_gain(double gain) { return gain / 2.0 - 1.0; }

PathGeometry scenario_geometry(const Scenario& s, const SurfaceGrid& grid) {
  const Vec3 bs_t = s.tx_boresight ? *s.tx_boresight : grid.origin - s.tx_pos;
  const Vec3 bs_r = s.rx_boresight ? *s.rx_boresight : grid.origin - s.rx_pos;
  return path_geometry(grid, s.tx_pos, s.rx_pos, bs_t, bs_r);
}

std::vector<double> combined_pattern(const Scenario& s, const SurfaceGrid& grid,
                                     const PathGeometry& geo) {
  (void)grid;
  std::vector<double> f(geo.elements.size());
  for (std::size_t i = 0; i < geo.elements.size(); ++i) {
    const ElementPath& e = geo.elements[i];
    f[i] = pattern_value(s.tx_pattern, e.theta_tx) * pattern_value(s.cell_pattern, e.theta_inc) *
           pattern_value(s.cell_pattern, e.theta_dep) * pattern_value(s.rx_pattern, e.theta_rx);
  }
  return f;
}

Configuration expand_configuration(const std::vector<std::string>& codes, const GroupMap& groups,
                                   const Codebook& cb, double f_hz) {
  if (static_cast<int>(codes.size()) != groups.n_groups) {
    fail(ErrorCode::invalid_argument,
         "assignment has " + std::to_string(codes.size()) + " codes for " +
             std::to_string(groups.n_groups) + " groups");
  }
  Configuration config;
  config.codes = codes;
  config.expanded_at_hz = f_hz;
  config.gamma.assign(groups.group_of_element.size(), {0.0, 0.0});
  for (int g = 0; g < groups.n_groups; ++g) {
    const std::complex<double> value = cb.gamma(codes[static_cast<std::size_t>(g)], f_hz);
    for (const int e : groups.elements_of_group[static_cast<std::size_t>(g)]) {
      config.gamma[static_cast<std::size_t>(e)] = value;
    }
  }
  return config;
}

LinkTable build_link_table(const Scenario& s, const SurfaceGrid& grid, double f_hz) {
  if (!(f_hz > 0.0)) {
    fail(ErrorCode::invalid_argument, "carrier frequency must be positive");
  }
  const PathGeometry geo = scenario_geometry(s, grid);
  const std::vector<double> f_combine = combined_pattern(s, grid, geo);
  const double lambda = wavelength_m(f_hz);
  const double k_wave = 2.0 * pi / lambda;

  LinkTable table;
  table.f_hz = f_hz;
  table.prefactor = s.p_t * s.tx_pattern.gain * s.rx_pattern.gain * grid.d_x * grid.d_y *
                    lambda * lambda / (64.0 * pi * pi * pi);
  table.base.resize(geo.elements.size());
  parallel_for(geo.elements.size(), [&](std::size_t i) {
    const ElementPath& e = geo.elements[i];
    const double amplitude = std::sqrt(f_combine[i]) / (e.r_t * e.r_r);
    table.base[i] = amplitude * std::polar(1.0, -k_wave * (e.r_t + e.r_r));
  });
  return table;
}

double received_power(const LinkTable& table, std::span<const std::complex<double>> gamma,
                      std::vector<std::complex<double>>& scratch) {
  if (gamma.size() != table.base.size()) {
    fail(ErrorCode::invalid_argument, "gamma vector size does not match the element count");
  }
  scratch.resize(table.base.size());
  parallel_for(table.base.size(), [&](std::size_t i) { scratch[i] = table.base[i] * gamma[i]; });
  const std::complex<double> sum =
      pairwise_sum(std::span<const std::complex<double>>(scratch.data(), scratch.size()));
  return table.prefactor * std::norm(sum);
}

double received_power(const LinkTable& table, std::span<const std::complex<double>> gamma) {
  std::vector<std::complex<double>> scratch;
  return received_power(table, gamma, scratch);
}

double received_power(const Scenario& s, const SurfaceGrid& grid, const Configuration& config) {
  if (config.expanded_at_hz != s.f) {
    fail(ErrorCode::invalid_argument,
         "configuration was expanded at " + std::to_string(config.expanded_at_hz) +
             " Hz, scenario runs at " + std::to_string(s.f) + " Hz");
  }
  const LinkTable table = build_link_table(s, grid, s.f);
  return received_power(table, config.gamma);
}

double coherent_upper_bound(const LinkTable& table, std::span<const std::complex<double>> gamma) {
  if (gamma.size() != table.base.size()) {
    fail(ErrorCode::invalid_argument, "gamma vector size does not match the element count");
  }
  std::vector<double> mags(table.base.size());
  for (std::size_t i = 0; i < mags.size(); ++i) {
    mags[i] = std::abs(table.base[i]) * std::abs(gamma[i]);
  }
  const double sum = pairwise_sum(std::span<const double>(mags.data(), mags.size()));
  return table.prefactor * sum * sum;
}

std::vector<double> ideal_phase_profile(const Scenario& s, const SurfaceGrid& grid) {
  const PathGeometry geo = scenario_geometry(s, grid);
  const double k_wave = 2.0 * pi / wavelength_m(s.f);
  std::vector<double> phase(geo.elements.size());
  for (std::size_t i = 0; i < phase.size(); ++i) {
    const ElementPath& e = geo.elements[i];
    phase[i] = std::fmod(k_wave * (e.r_t + e.r_r), 2.0 * pi);
  }
  return phase;
}

std::complex<double> plate_gamma() { return std::polar(1.0, pi); }

double reference_plate_power(const Scenario& s, const SurfaceGrid& grid) {
  const LinkTable table = build_link_table(s, grid, s.f);
  const std::vector<std::complex<double>> gamma(table.base.size(), plate_gamma());
  return received_power(table, gamma);
}

}  // namespace risim
