#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

namespace alignaug {

using Vec2 = Eigen::Vector2d;

// Axis-aligned rectangular domain; the unit square by default.
struct Rect {
  double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  bool contains(const Vec2& p) const {
    return p.x() >= x0 && p.x() <= x1 && p.y() >= y0 && p.y() <= y1;
  }
};

// Triangulation of the domain into nx*ny square cells, each split into four
// triangles by its center ("crossed" scheme). Immutable after construction.
struct Tessellation {
  Rect domain;
  int nx = 0, ny = 0;
  std::vector<Vec2> vertices;
  std::vector<std::array<int, 3>> triangles;  // counter-clockwise
  std::vector<Vec2> centroids;
  std::vector<bool> interior_vertex_flags;    // true iff vertex not on the boundary

  int triangle_count() const { return static_cast<int>(triangles.size()); }
  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int interior_vertex_count() const;
};

// Cell (cx, cy) owns triangles 4*(cy*nx+cx) + k with k = 0 bottom, 1 right,
// 2 top, 3 left. Grid vertices come first (row-major), then cell centers.
Tessellation build_crossed_tessellation(int nx, int ny, const Rect& domain = Rect{});

// Index of a triangle whose closed set contains p; constant-time cell
// arithmetic plus diagonal sign tests. Points on shared edges or vertices
// resolve to the lowest-index incident triangle. Throws out_of_domain.
int locate(const Tessellation& tess, const Vec2& p);

// Barycentric coordinates of p with respect to triangle t.
Eigen::Vector3d barycentric(const Tessellation& tess, int t, const Vec2& p);

// Signed (counter-clockwise positive) area of triangle t.
double signed_area(const Tessellation& tess, int t);

}  // namespace alignaug
