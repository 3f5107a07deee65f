#pragma once

#include <Eigen/Core>

#include "alignaug/tessellation.hpp"

namespace alignaug {

// Orthonormal basis of the space of continuous piecewise-affine velocity
// fields on the tessellation that vanish on the domain boundary.
//
// A velocity field is stored as an "affine stack": for triangle t, entries
// 6t..6t+5 hold the row-major 2x3 affine matrix A_t, so the velocity at a
// point p inside t is A_t * (p.x, p.y, 1)^T. The stack space has dimension
// D = 6 * triangle_count; the constrained subspace has dimension d and basis
// matrix B (D x d, orthonormal columns).
struct CpaBasis {
  Tessellation tess;
  Eigen::MatrixXd B;

  int D() const { return static_cast<int>(B.rows()); }
  int d() const { return static_cast<int>(B.cols()); }
};

// Rows encode (a) equality of incident triangles' affine maps at every shared
// vertex (affine maps agreeing at a triangle's two shared vertices agree on
// the whole edge) and (b) zero velocity at boundary vertices, for each
// incident triangle. Two scalar rows (x and y components) per constraint.
Eigen::MatrixXd build_constraint_matrix(const Tessellation& tess);

// Orthonormal null-space basis of L via SVD; singular values below
// 1e-10 * sigma_max count as zero. Column signs are fixed (first
// significantly-nonzero entry positive) so the basis is deterministic.
// Throws numerical_error if the null space is empty.
CpaBasis null_space_basis(const Tessellation& tess, const Eigen::MatrixXd& L);

// Convenience: constraint assembly plus null-space extraction.
CpaBasis build_cpa_basis(const Tessellation& tess);

// Velocity of the field with weights theta at point p (locate + affine
// evaluation). Throws out_of_domain for points outside the domain.
Vec2 velocity_at(const CpaBasis& basis, const Eigen::VectorXd& theta, const Vec2& p);

// Precomputed affine stack B*theta for evaluation in hot loops.
struct CpaVelocityField {
  const Tessellation* tess;
  Eigen::VectorXd stack;

  CpaVelocityField(const CpaBasis& basis, const Eigen::VectorXd& theta);

  Vec2 operator()(const Vec2& p) const {
    const int t = locate(*tess, p);
    const double* a = stack.data() + 6 * t;
    return {a[0] * p.x() + a[1] * p.y() + a[2],
            a[3] * p.x() + a[4] * p.y() + a[5]};
  }
};

}  // namespace alignaug
