// SPDX-License-Identifier: Apache-2.0
//
// risim - physics-based simulator for RIS-assisted wireless links
// Copyright (c) 2026 risim contributors

#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/codebook.hpp"
#include "core/geometry.hpp"

namespace risim {

enum class PatternKind { isotropic, cosine_power };

// Normalized radiation pattern plus a boresight gain. The pattern value is 1
// at boresight and 0 in the back half-space for every kind; cosine-power
// falls off as cos^(2q) within the front half-space.
struct AntennaPattern {
  PatternKind kind = PatternKind::isotropic;
  double q = 0.0;     // cosine-power exponent, >= 0
  double gain = 1.0;  // linear boresight gain, > 0
};

AntennaPattern make_isotropic(double gain = 1.0);
AntennaPattern make_cosine_power(double q, double gain = 1.0);

// Normalized pattern value at angle theta (radians) off boresight.
double pattern_value(const AntennaPattern& p, double theta);

// Idealized link between boresight gain and cosine-power exponent,
// G = 2(q + 1); measured antennas rarely match it, so scenario files state
// gain and exponent independently.
double gain_from_exponent(double q);
double exponent_from_gain(double gain);

struct Scenario {
  Vec3 tx_pos;
  Vec3 rx_pos;
  AntennaPattern tx_pattern;
  AntennaPattern rx_pattern;
  AntennaPattern cell_pattern;
  std::optional<Vec3> tx_boresight;  // unit direction; default aims at the surface center
  std::optional<Vec3> rx_boresight;
  double p_t = 1.0;  // transmit power [W]
  double f = 0.0;    // carrier frequency [Hz]
};

PathGeometry scenario_geometry(const Scenario& s, const SurfaceGrid& grid);

// Per-element product of the four pattern factors: transmitter, cell
// reception, cell reradiation, receiver.
std::vector<double> combined_pattern(const Scenario& s, const SurfaceGrid& grid,
                                     const PathGeometry& geo);

// Per-group code assignment expanded to per-element reflection coefficients
// at one frequency.
struct Configuration {
  std::vector<std::string> codes;            // one per group
  std::vector<std::complex<double>> gamma;   // one per element
  double expanded_at_hz = 0.0;
};

Configuration expand_configuration(const std::vector<std::string>& codes, const GroupMap& groups,
                                   const Codebook& cb, double f_hz);

// Everything about a (scenario, grid, frequency) triple that does not depend
// on the reflection coefficients: prefactor and per-element complex weights
// sqrt(F)/(r_t*r_r) * exp(-j*2pi/lambda*(r_t+r_r)).
struct LinkTable {
  double f_hz = 0.0;
  double prefactor = 0.0;
  std::vector<std::complex<double>> base;
};

LinkTable build_link_table(const Scenario& s, const SurfaceGrid& grid, double f_hz);

double received_power(const LinkTable& table, std::span<const std::complex<double>> gamma);
double received_power(const LinkTable& table, std::span<const std::complex<double>> gamma,
                      std::vector<std::complex<double>>& scratch);
double received_power(const Scenario& s, const SurfaceGrid& grid, const Configuration& config);

// Coherent cap prefactor * (sum |base|*|gamma|)^2; no configuration of the
// same magnitudes can exceed it.
double coherent_upper_bound(const LinkTable& table, std::span<const std::complex<double>> gamma);

// Per-element phase (radians) that co-phases every summand: 2pi/lambda *
// (r_t + r_r) mod 2pi.
std::vector<double> ideal_phase_profile(const Scenario& s, const SurfaceGrid& grid);

// Same-size perfect reflector: uniform gamma = 1 at 180 degrees.
double reference_plate_power(const Scenario& s, const SurfaceGrid& grid);
std::complex<double> plate_gamma();

}  // namespace risim
