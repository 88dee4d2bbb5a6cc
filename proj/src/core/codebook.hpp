// SPDX-License-Identifier: Apache-2.0
//
// risim - physics-based simulator for RIS-assisted wireless links
// Copyright (c) 2026 risim contributors

#pragma once

#include <complex>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/error.hpp"

namespace risim {

struct ResponseSample {
  double f_hz = 0.0;
  double mag_db = 0.0;
  double phase_deg = 0.0;
};

// One digital code and its complex reflection response. Single-sample states
// are frequency-flat; multi-sample states are interpolated in (dB magnitude,
// unwrapped phase) and refuse queries outside their sampled band.
struct ReflectionState {
  std::string code;
  std::vector<ResponseSample> samples;        // sorted by strictly increasing f_hz
  std::vector<double> unwrapped_phase_deg;    // one entry per sample

  bool frequency_flat() const { return samples.size() == 1; }
};

// Ordered set of reflection states (order is the sweep order used by the
// optimizer) plus named resolution subsets.
class Codebook {
 public:
  static Codebook from_states(std::vector<ReflectionState> states,
                              std::map<std::string, std::vector<std::string>> subsets);
  static Codebook parse(const std::string& json_text);
  static Codebook load(const std::string& path);

  // M states with unity magnitude and uniformly spaced phases, frequency-flat.
  static Codebook ideal(int n_states);

  Codebook restrict_to(const std::string& subset_label) const;

  int size() const { return static_cast<int>(states_.size()); }
  const ReflectionState& state(int k) const { return states_[static_cast<std::size_t>(k)]; }
  const std::vector<ReflectionState>& states() const { return states_; }
  // Index of a code in sweep order, or -1 if absent.
  int index_of(const std::string& code) const;
  int require_index(const std::string& code) const;

  std::complex<double> gamma(int k, double f_hz) const;
  std::complex<double> gamma(const std::string& code, double f_hz) const;
  double phase_deg(int k, double f_hz) const;  // wrapped to [-180, 180)
  double mag_db(int k, double f_hz) const;

  const std::map<std::string, std::vector<std::string>>& subsets() const { return subsets_; }

 private:
  // (mag_db, phase_deg) with phase unwrapped along the state's samples.
  std::pair<double, double> response_at(int k, double f_hz) const;

  std::vector<ReflectionState> states_;
  std::map<std::string, std::vector<std::string>> subsets_;
  std::unordered_map<std::string, int> index_;
};

// Gap-based phase spread over the circle [-180, 180): phases are sorted and
// the gaps between neighbours (including the wrap-around gap, so they always
// total 360) feed sigma = sqrt(sum gap^3 / (12*360)). Degrees in, degrees out.
double phase_std_deg(std::vector<double> phases_deg);

// N_bit = log2(360 / (sqrt(12) * sigma)); sigma in degrees, > 0.
double equivalent_bits(double sigma_deg);

// Inclusive frequency ladder f_lo, f_lo + step, ... up to f_hi.
std::vector<double> frequency_grid(double f_lo_hz, double f_hi_hz, double f_step_hz);

struct QualityRow {
  double f_hz = 0.0;
  double sigma_deg = 0.0;
  double n_bit = 0.0;
};

// Per-frequency phase spread and equivalent bit number over all states.
std::vector<QualityRow> quality_sweep(const Codebook& cb, double f_lo_hz, double f_hi_hz,
                                      double f_step_hz);

// Single row for codebooks whose states all share one sample frequency.
QualityRow quality_single(const Codebook& cb);

}  // namespace risim
