// SPDX-License-Identifier: Apache-2.0
//
// risim - physics-based simulator for RIS-assisted wireless links
// Copyright (c) 2026 risim contributors

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>

namespace risim {

inline constexpr double speed_of_light_mps = 299792458.0;
inline constexpr double pi = std::numbers::pi;

inline double wavelength_m(double f_hz) { return speed_of_light_mps / f_hz; }
inline double deg_to_rad(double deg) { return deg * pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / pi; }
inline double db10_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double db20_to_linear(double db) { return std::pow(10.0, db / 20.0); }
inline double linear_to_db10(double x) { return 10.0 * std::log10(x); }
inline double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }
inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts / 1e-3); }

// Wraps an angle in degrees onto [-180, 180).
inline double wrap_deg_180(double deg) {
  double w = std::remainder(deg, 360.0);
  if (w >= 180.0) w -= 360.0;
  return w;
}

// Smallest absolute separation between two angles in radians, in [0, pi].
inline double circular_distance_rad(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * pi));
}

// Fixed-structure pairwise accumulation. The reduction tree depends only on
// the element count, so results are identical no matter how the inputs were
// produced (serially or by several workers).
template <class T>
T pairwise_sum(std::span<const T> values) {
  if (values.size() <= 8) {
    T acc{};
    for (const T& v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace risim
