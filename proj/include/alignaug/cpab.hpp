#pragma once

#include <Eigen/Core>
#include <memory>
#include <span>
#include <vector>

#include "alignaug/cpa_basis.hpp"
#include "alignaug/image.hpp"

namespace alignaug {

enum class IntegrationMethod { rk4, euler };

struct IntegrationConfig {
  int n_steps = 50;
  IntegrationMethod method = IntegrationMethod::rk4;
};

// A diffeomorphism of the domain, parametrized by tangent coordinates theta:
// the unit-time flow of the velocity field with weights theta. theta = 0 is
// the identity map, and the inverse of theta is -theta.
struct Transformation {
  std::shared_ptr<const CpaBasis> basis;
  Eigen::VectorXd theta;
};

Transformation inverse(const Transformation& T);

// Unit-time flow of a single point under a precomputed velocity field.
// Overshooting steps are clamped to the domain and counted in clamps.
Vec2 flow_point(const CpaVelocityField& field, const Rect& r, Vec2 p,
                const IntegrationConfig& cfg, long& clamps);

// Integrates each point from t=0 to t=1 under the velocity field. Steps that
// overshoot the domain (a discretization artifact; the exact flow cannot
// leave, since the velocity vanishes on the boundary) are clamped back and
// counted in *clamp_events when provided. Throws out_of_domain for input
// points outside the closed domain and numerical_error for non-finite theta.
std::vector<Vec2> transform_points(const Transformation& T,
                                   std::span<const Vec2> points,
                                   const IntegrationConfig& cfg = {},
                                   long* clamp_events = nullptr);

// Output pixel at center xi samples the source image at T(xi), bilinearly,
// with zero padding outside the pixel lattice. The whole pixel grid is
// transformed in one pass. theta = 0 returns the input unchanged.
Image warp_image(const Image& src, const Transformation& T,
                 const IntegrationConfig& cfg = {}, long* clamp_events = nullptr);

// True iff the central-difference Jacobian determinant of the transformation
// is strictly positive on a grid_n x grid_n grid of interior sample points
// (stencil half-width 1/(4*grid_n) in relative units).
bool jacobian_sign_check(const Transformation& T, int grid_n,
                         const IntegrationConfig& cfg = {});

}  // namespace alignaug
