// SPDX-License-Identifier: Apache-2.0
//
// risim - physics-based simulator for RIS-assisted wireless links
// Copyright (c) 2026 risim contributors

#pragma once

#include <cmath>
#include <vector>

#include "core/error.hpp"

namespace risim {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }
inline bool is_finite(Vec3 v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}
Vec3 normalize(Vec3 v);

// Planar element lattice. The surface lies in the plane x = origin.x with
// broadside along +x; rows run vertically (z, pitch d_y) and columns
// horizontally (y, pitch d_x). Element storage order is row * n_cols + col.
struct SurfaceGrid {
  int n_rows = 0;
  int n_cols = 0;
  double d_x = 0.0;
  double d_y = 0.0;
  Vec3 origin;

  int n_elements() const { return n_rows * n_cols; }
  double width() const { return n_cols * d_x; }
  double height() const { return n_rows * d_y; }
};

SurfaceGrid build_grid(int n_rows, int n_cols, double d_x, double d_y, Vec3 origin = {});

// Position of the element at 0-based (row, col).
Vec3 element_position_rc(const SurfaceGrid& grid, int row, int col);

// Position using centered indices: n spans [1-N/2, N/2] for even N and
// [-(N-1)/2, (N-1)/2] for odd N; likewise m with M. The lattice centroid is
// the grid origin in both cases.
Vec3 element_position(const SurfaceGrid& grid, int n, int m);

enum class GroupScheme { per_element, column_of_k, whole_surface };

// Partition of the element set into control groups sharing one code.
struct GroupMap {
  GroupScheme scheme = GroupScheme::per_element;
  int n_groups = 0;
  std::vector<int> group_of_element;
  std::vector<std::vector<int>> elements_of_group;
};

// Vertical runs of cells_per_group elements within each column; n_rows must
// be divisible by cells_per_group. Group ids are row-major over
// (block row, column).
GroupMap column_groups(const SurfaceGrid& grid, int cells_per_group);
GroupMap whole_surface_group(const SurfaceGrid& grid);

struct ElementPath {
  double r_t = 0.0;        // element-to-transmitter distance [m]
  double r_r = 0.0;        // element-to-receiver distance [m]
  double theta_inc = 0.0;  // from surface normal, toward tx [rad]
  double theta_dep = 0.0;  // from surface normal, toward rx [rad]
  double theta_tx = 0.0;   // off tx boresight [rad]
  double theta_rx = 0.0;   // off rx boresight [rad]
};

struct PathGeometry {
  std::vector<ElementPath> elements;
};

// Per-element path quantities for a tx/rx pair. Antennas must be strictly off
// the surface plane. Boresights default to the ray from each antenna to the
// surface center; the second overload takes explicit boresight directions.
PathGeometry path_geometry(const SurfaceGrid& grid, Vec3 tx, Vec3 rx);
PathGeometry path_geometry(const SurfaceGrid& grid, Vec3 tx, Vec3 rx,
                           Vec3 tx_boresight, Vec3 rx_boresight);

}  // namespace risim
