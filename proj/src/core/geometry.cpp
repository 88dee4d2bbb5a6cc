// SPDX-License-Identifier: Apache-2.0
//
// risim - physics-based simulator for RIS-assisted wireless links
// Copyright (c) 2026 risim contributors

#include "core/geometry.hpp"

#include <algorithm>
#include <string>

#include "core/numerics.hpp"

namespace risim {

Vec3 normalize(Vec3 v) {
  const double len = norm(v);
  if (!(len > 1e-300) || !std::isfinite(len)) {
    fail(ErrorCode::invalid_argument, "cannot normalize a zero-length vector");
  }
  return (1.0 / len) * v;
}

SurfaceGrid build_grid(int n_rows, int n_cols, double d_x, double d_y, Vec3 origin) {
  if (n_rows < 1 || n_cols < 1) {
    fail(ErrorCode::invalid_argument,
         "grid dimensions must be >= 1 (got " + std::to_string(n_rows) + "x" +
             std::to_string(n_cols) + ")");
  }
  if (!(d_x > 0.0) || !(d_y > 0.0)) {
    fail(ErrorCode::invalid_argument, "element pitches d_x and d_y must be positive");
  }
  if (!is_finite(origin)) {
    fail(ErrorCode::invalid_argument, "grid origin must be finite");
  }
  return SurfaceGrid{n_rows, n_cols, d_x, d_y, origin};
}

Vec3 element_position_rc(const SurfaceGrid& grid, int row, int col) {
  if (row < 0 || row >= grid.n_rows || col < 0 || col >= grid.n_cols) {
    fail(ErrorCode::invalid_argument,
         "element (" + std::to_string(row) + "," + std::to_string(col) +
             ") outside a " + std::to_string(grid.n_rows) + "x" +
             std::to_string(grid.n_cols) + " grid");
  }
  const double y = (col - (grid.n_cols - 1) / 2.0) * grid.d_x;
  const double z = (row - (grid.n_rows - 1) / 2.0) * grid.d_y;
  return grid.origin + Vec3{0.0, y, z};
}

namespace {

// Centered index -> 0-based index. For even N the centered range is
// [1-N/2, N/2]; for odd N it is [-(N-1)/2, (N-1)/2]. Both map via the same
// integer shift.
int centered_to_zero_based(int idx, int count) {
  return idx + (count - 1) / 2;
}

}  // namespace

Vec3 element_position(const SurfaceGrid& grid, int n, int m) {
  const int row = centered_to_zero_based(n, grid.n_rows);
  const int col = centered_to_zero_based(m, grid.n_cols);
  if (row < 0 || row >= grid.n_rows || col < 0 || col >= grid.n_cols) {
    fail(ErrorCode::invalid_argument,
         "centered element index (" + std::to_string(n) + "," + std::to_string(m) +
             ") outside a " + std::to_string(grid.n_rows) + "x" +
             std::to_string(grid.n_cols) + " grid");
  }
  return element_position_rc(grid, row, col);
}

GroupMap column_groups(const SurfaceGrid& grid, int cells_per_group) {
  if (cells_per_group < 1) {
    fail(ErrorCode::invalid_argument, "cells_per_group must be >= 1");
  }
  if (grid.n_rows % cells_per_group != 0) {
    fail(ErrorCode::invalid_argument,
         "n_rows (" + std::to_string(grid.n_rows) + ") is not divisible by cells_per_group (" +
             std::to_string(cells_per_group) + ")");
  }
  const int blocks = grid.n_rows / cells_per_group;
  GroupMap map;
  map.scheme = cells_per_group == 1 ? GroupScheme::per_element : GroupScheme::column_of_k;
  map.n_groups = blocks * grid.n_cols;
  map.group_of_element.assign(static_cast<std::size_t>(grid.n_elements()), -1);
  map.elements_of_group.resize(static_cast<std::size_t>(map.n_groups));
  for (int row = 0; row < grid.n_rows; ++row) {
    const int block = row / cells_per_group;
    for (int col = 0; col < grid.n_cols; ++col) {
      const int group = block * grid.n_cols + col;
      const int element = row * grid.n_cols + col;
      map.group_of_element[static_cast<std::size_t>(element)] = group;
      map.elements_of_group[static_cast<std::size_t>(group)].push_back(element);
    }
  }
  return map;
}

GroupMap whole_surface_group(const SurfaceGrid& grid) {
  GroupMap map;
  map.scheme = GroupScheme::whole_surface;
  map.n_groups = 1;
  map.group_of_element.assign(static_cast<std::size_t>(grid.n_elements()), 0);
  map.elements_of_group.resize(1);
  map.elements_of_group[0].resize(static_cast<std::size_t>(grid.n_elements()));
  for (int e = 0; e < grid.n_elements(); ++e) map.elements_of_group[0][static_cast<std::size_t>(e)] = e;
  return map;
}

namespace {

double angle_between(Vec3 a, Vec3 b, double norm_a, double norm_b) {
  const double c = dot(a, b) / (norm_a * norm_b);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

PathGeometry path_geometry(const SurfaceGrid& grid, Vec3 tx, Vec3 rx,
                           Vec3 tx_boresight, Vec3 rx_boresight) {
  if (!is_finite(tx) || !is_finite(rx)) {
    fail(ErrorCode::invalid_argument, "antenna positions must be finite");
  }
  if (tx.x == grid.origin.x) {
    fail(ErrorCode::degenerate_geometry, "tx position lies in the surface plane");
  }
  if (rx.x == grid.origin.x) {
    fail(ErrorCode::degenerate_geometry, "rx position lies in the surface plane");
  }
  const Vec3 normal{1.0, 0.0, 0.0};
  const Vec3 bs_t = normalize(tx_boresight);
  const Vec3 bs_r = normalize(rx_boresight);

  PathGeometry geo;
  geo.elements.resize(static_cast<std::size_t>(grid.n_elements()));
  for (int row = 0; row < grid.n_rows; ++row) {
    for (int col = 0; col < grid.n_cols; ++col) {
      const Vec3 pos = element_position_rc(grid, row, col);
      const Vec3 to_tx = tx - pos;
      const Vec3 to_rx = rx - pos;
      ElementPath& e = geo.elements[static_cast<std::size_t>(row * grid.n_cols + col)];
      e.r_t = norm(to_tx);
      e.r_r = norm(to_rx);
      e.theta_inc = angle_between(to_tx, normal, e.r_t, 1.0);
      e.theta_dep = angle_between(to_rx, normal, e.r_r, 1.0);
      e.theta_tx = angle_between({-to_tx.x, -to_tx.y, -to_tx.z}, bs_t, e.r_t, 1.0);
      e.theta_rx = angle_between({-to_rx.x, -to_rx.y, -to_rx.z}, bs_r, e.r_r, 1.0);
    }
  }
  return geo;
}

PathGeometry path_geometry(const SurfaceGrid& grid, Vec3 tx, Vec3 rx) {
  return path_geometry(grid, tx, rx, grid.origin - tx, grid.origin - rx);
}

}  // namespace risim
