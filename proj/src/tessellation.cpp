#include "alignaug/tessellation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "alignaug/errors.hpp"

namespace alignaug {

int Tessellation::interior_vertex_count() const {
  int n = 0;
  for (bool f : interior_vertex_flags) n += f ? 1 : 0;
  return n;
}

Tessellation build_crossed_tessellation(int nx, int ny, const Rect& domain) {
  if (nx < 1 || ny < 1)
    throw data_error("build_crossed_tessellation: cell counts must be positive");
  if (!(domain.width() > 0.0) || !(domain.height() > 0.0))
    throw data_error("build_crossed_tessellation: degenerate domain");

  Tessellation tess;
  tess.domain = domain;
  tess.nx = nx;
  tess.ny = ny;

  const double dx = domain.width() / nx;
  const double dy = domain.height() / ny;

  // Grid vertices, row-major.
  for (int row = 0; row <= ny; ++row) {
    for (int col = 0; col <= nx; ++col) {
      tess.vertices.emplace_back(domain.x0 + col * dx, domain.y0 + row * dy);
      const bool interior = col > 0 && col < nx && row > 0 && row < ny;
      tess.interior_vertex_flags.push_back(interior);
    }
  }
  // Cell centers; always interior.
  const int grid_count = (nx + 1) * (ny + 1);
  for (int cy = 0; cy < ny; ++cy) {
    for (int cx = 0; cx < nx; ++cx) {
      tess.vertices.emplace_back(domain.x0 + (cx + 0.5) * dx,
                                 domain.y0 + (cy + 0.5) * dy);
      tess.interior_vertex_flags.push_back(true);
    }
  }

  auto grid_id = [nx](int col, int row) { return row * (nx + 1) + col; };

  for (int cy = 0; cy < ny; ++cy) {
    for (int cx = 0; cx < nx; ++cx) {
      const int v00 = grid_id(cx, cy);
      const int v10 = grid_id(cx + 1, cy);
      const int v11 = grid_id(cx + 1, cy + 1);
      const int v01 = grid_id(cx, cy + 1);
      const int ctr = grid_count + cy * nx + cx;
      tess.triangles.push_back({v00, v10, ctr});  // bottom
      tess.triangles.push_back({v10, v11, ctr});  // right
      tess.triangles.push_back({v11, v01, ctr});  // top
      tess.triangles.push_back({v01, v00, ctr});  // left
    }
  }

  tess.centroids.reserve(tess.triangles.size());
  for (const auto& tri : tess.triangles) {
    tess.centroids.push_back(
        (tess.vertices[tri[0]] + tess.vertices[tri[1]] + tess.vertices[tri[2]]) / 3.0);
  }
  return tess;
}

int locate(const Tessellation& tess, const Vec2& p) {
  const Rect& r = tess.domain;
  if (!r.contains(p))
    throw out_of_domain("locate: point (" + std::to_string(p.x()) + ", " +
                        std::to_string(p.y()) + ") outside domain");

  const double fx = (p.x() - r.x0) / r.width() * tess.nx;
  const double fy = (p.y() - r.y0) / r.height() * tess.ny;
  const int cx = std::clamp(static_cast<int>(std::floor(fx)), 0, tess.nx - 1);
  const int cy = std::clamp(static_cast<int>(std::floor(fy)), 0, tess.ny - 1);

  // A point on a cell border belongs to both cells; scan candidates in
  // ascending cell-index order so ties resolve to the lowest triangle index.
  int cxs[2], ncx = 0;
  if (fx == static_cast<double>(cx) && cx > 0) cxs[ncx++] = cx - 1;
  cxs[ncx++] = cx;
  int cys[2], ncy = 0;
  if (fy == static_cast<double>(cy) && cy > 0) cys[ncy++] = cy - 1;
  cys[ncy++] = cy;

  for (int iy = 0; iy < ncy; ++iy) {
    for (int ix = 0; ix < ncx; ++ix) {
      const int ccx = cxs[ix], ccy = cys[iy];
      const double u = fx - ccx;
      const double v = fy - ccy;
      if (u < 0.0 || u > 1.0 || v < 0.0 || v > 1.0) continue;
      // Diagonal sign tests; the branch order makes every tie pick the
      // lowest incident triangle within the cell.
      const double s1 = v - u;        // above main diagonal when positive
      const double s2 = u + v - 1.0;  // above anti-diagonal when positive
      int k;
      if (s1 <= 0.0 && s2 <= 0.0)
        k = 0;  // bottom
      else if (s1 <= 0.0)
        k = 1;  // right
      else if (s2 >= 0.0)
        k = 2;  // top
      else
        k = 3;  // left
      return 4 * (ccy * tess.nx + ccx) + k;
    }
  }
  // Unreachable: the clamped cell always contains the point.
  return 4 * (cy * tess.nx + cx);
}

Eigen::Vector3d barycentric(const Tessellation& tess, int t, const Vec2& p) {
  const auto& tri = tess.triangles[t];
  const Vec2& a = tess.vertices[tri[0]];
  const Vec2& b = tess.vertices[tri[1]];
  const Vec2& c = tess.vertices[tri[2]];
  const double det = (b.x() - a.x()) * (c.y() - a.y()) - (c.x() - a.x()) * (b.y() - a.y());
  const double l1 = ((b.x() - p.x()) * (c.y() - p.y()) - (c.x() - p.x()) * (b.y() - p.y())) / det;
  const double l2 = ((c.x() - p.x()) * (a.y() - p.y()) - (a.x() - p.x()) * (c.y() - p.y())) / det;
  return {l1, l2, 1.0 - l1 - l2};
}

double signed_area(const Tessellation& tess, int t) {
  const auto& tri = tess.triangles[t];
  const Vec2& a = tess.vertices[tri[0]];
  const Vec2& b = tess.vertices[tri[1]];
  const Vec2& c = tess.vertices[tri[2]];
  return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (c.x() - a.x()) * (b.y() - a.y()));
}

}  // namespace alignaug
