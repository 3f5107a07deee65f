#include "alignaug/cpab.hpp"

#include <algorithm>
#include <cmath>

#include "alignaug/errors.hpp"

namespace alignaug {

namespace {

inline Vec2 clamp_to(const Rect& r, const Vec2& p, long& clamps) {
  const double x = std::clamp(p.x(), r.x0, r.x1);
  const double y = std::clamp(p.y(), r.y0, r.y1);
  if (x != p.x() || y != p.y()) {
    ++clamps;
    return {x, y};
  }
  return p;
}

}  // namespace

Vec2 flow_point(const CpaVelocityField& field, const Rect& r, Vec2 p,
                const IntegrationConfig& cfg, long& clamps) {
  const double dt = 1.0 / cfg.n_steps;
  if (cfg.method == IntegrationMethod::euler) {
    for (int s = 0; s < cfg.n_steps; ++s)
      p = clamp_to(r, Vec2(p + dt * field(p)), clamps);
    return p;
  }
  long stage_clamps = 0;  // stage-point guards, not reported
  for (int s = 0; s < cfg.n_steps; ++s) {
    const Vec2 k1 = field(p);
    const Vec2 k2 = field(clamp_to(r, Vec2(p + (0.5 * dt) * k1), stage_clamps));
    const Vec2 k3 = field(clamp_to(r, Vec2(p + (0.5 * dt) * k2), stage_clamps));
    const Vec2 k4 = field(clamp_to(r, Vec2(p + dt * k3), stage_clamps));
    p = clamp_to(r, Vec2(p + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)), clamps);
  }
  return p;
}

Transformation inverse(const Transformation& T) {
  return Transformation{T.basis, -T.theta};
}

std::vector<Vec2> transform_points(const Transformation& T,
                                   std::span<const Vec2> points,
                                   const IntegrationConfig& cfg,
                                   long* clamp_events) {
  if (!T.theta.allFinite())
    throw numerical_error("transform_points: non-finite theta");
  if (cfg.n_steps < 1)
    throw data_error("transform_points: n_steps must be >= 1");

  const Rect& r = T.basis->tess.domain;
  for (const Vec2& p : points)
    if (!r.contains(p)) throw out_of_domain("transform_points: point outside domain");

  const CpaVelocityField field(*T.basis, T.theta);
  std::vector<Vec2> out;
  out.reserve(points.size());
  long clamps = 0;
  for (const Vec2& p : points) out.push_back(flow_point(field, r, p, cfg, clamps));
  if (clamp_events) *clamp_events += clamps;
  return out;
}

Image warp_image(const Image& src, const Transformation& T,
                 const IntegrationConfig& cfg, long* clamp_events) {
  if (src.empty()) throw data_error("warp_image: empty image");
  if (!T.theta.allFinite()) throw numerical_error("warp_image: non-finite theta");
  if (cfg.n_steps < 1) throw data_error("warp_image: n_steps must be >= 1");

  const CpaVelocityField field(*T.basis, T.theta);
  if (field.stack.isZero(0.0)) return src;  // zero field: exact identity

  const Rect& r = T.basis->tess.domain;
  const int h = src.height, w = src.width;
  Image out = Image::zeros(h, w);
  long clamps = 0;
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      const Vec2 xi(r.x0 + (j + 0.5) * r.width() / w,
                    r.y0 + (i + 0.5) * r.height() / h);
      const Vec2 q = flow_point(field, r, xi, cfg, clamps);
      const double px = (q.x() - r.x0) / r.width() * w - 0.5;
      const double py = (q.y() - r.y0) / r.height() * h - 0.5;
      out.at(i, j) = bilinear_sample(src, px, py);
    }
  }
  if (clamp_events) *clamp_events += clamps;
  return out;
}

bool jacobian_sign_check(const Transformation& T, int grid_n,
                         const IntegrationConfig& cfg) {
  if (grid_n < 2) throw data_error("jacobian_sign_check: grid_n must be >= 2");
  if (!T.theta.allFinite())
    throw numerical_error("jacobian_sign_check: non-finite theta");

  const Rect& r = T.basis->tess.domain;
  const CpaVelocityField field(*T.basis, T.theta);
  const double hx = r.width() / (4.0 * grid_n);
  const double hy = r.height() / (4.0 * grid_n);
  long clamps = 0;

  for (int a = 0; a < grid_n; ++a) {
    for (int b = 0; b < grid_n; ++b) {
      const double x = r.x0 + (a + 0.5) * r.width() / grid_n;
      const double y = r.y0 + (b + 0.5) * r.height() / grid_n;
      const Vec2 xp = flow_point(field, r, {x + hx, y}, cfg, clamps);
      const Vec2 xm = flow_point(field, r, {x - hx, y}, cfg, clamps);
      const Vec2 yp = flow_point(field, r, {x, y + hy}, cfg, clamps);
      const Vec2 ym = flow_point(field, r, {x, y - hy}, cfg, clamps);
      const double j00 = (xp.x() - xm.x()) / (2.0 * hx);
      const double j10 = (xp.y() - xm.y()) / (2.0 * hx);
      const double j01 = (yp.x() - ym.x()) / (2.0 * hy);
      const double j11 = (yp.y() - ym.y()) / (2.0 * hy);
      if (j00 * j11 - j10 * j01 <= 0.0) return false;
    }
  }
  return true;
}

}  // namespace alignaug
