#include "alignaug/cpa_basis.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <vector>

#include "alignaug/errors.hpp"

namespace alignaug {

Eigen::MatrixXd build_constraint_matrix(const Tessellation& tess) {
  const int nt = tess.triangle_count();
  const int D = 6 * nt;

  std::vector<std::vector<int>> incident(tess.vertex_count());
  for (int t = 0; t < nt; ++t)
    for (int k = 0; k < 3; ++k) incident[tess.triangles[t][k]].push_back(t);

  std::size_t rows = 0;
  for (int v = 0; v < tess.vertex_count(); ++v) {
    const std::size_t m = incident[v].size();
    rows += m * (m - 1);  // 2 rows per unordered pair
    if (!tess.interior_vertex_flags[v]) rows += 2 * m;
  }

  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(rows, D);
  std::size_t r = 0;
  for (int v = 0; v < tess.vertex_count(); ++v) {
    const Vec2& p = tess.vertices[v];
    const auto& inc = incident[v];

    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        for (int comp = 0; comp < 2; ++comp) {
          const int bi = 6 * inc[i] + 3 * comp;
          const int bj = 6 * inc[j] + 3 * comp;
          L(r, bi) = p.x();
          L(r, bi + 1) = p.y();
          L(r, bi + 2) = 1.0;
          L(r, bj) = -p.x();
          L(r, bj + 1) = -p.y();
          L(r, bj + 2) = -1.0;
          ++r;
        }
      }
    }

    if (!tess.interior_vertex_flags[v]) {
      for (int t : inc) {
        for (int comp = 0; comp < 2; ++comp) {
          const int b = 6 * t + 3 * comp;
          L(r, b) = p.x();
          L(r, b + 1) = p.y();
          L(r, b + 2) = 1.0;
          ++r;
        }
      }
    }
  }
  return L;
}

CpaBasis null_space_basis(const Tessellation& tess, const Eigen::MatrixXd& L) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(L, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  const double tol = 1e-10 * sigma_max;

  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++rank;

  const int d = static_cast<int>(L.cols()) - rank;
  if (d <= 0)
    throw numerical_error("null_space_basis: constraint matrix has empty null space");

  Eigen::MatrixXd B = svd.matrixV().rightCols(d);

  // Deterministic sign convention: first significantly-nonzero entry positive.
  for (int c = 0; c < d; ++c) {
    const double scale = B.col(c).cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < B.rows(); ++i) {
      if (std::abs(B(i, c)) > 1e-9 * scale) {
        if (B(i, c) < 0.0) B.col(c) = -B.col(c);
        break;
      }
    }
  }
  return CpaBasis{tess, std::move(B)};
}

CpaBasis build_cpa_basis(const Tessellation& tess) {
  return null_space_basis(tess, build_constraint_matrix(tess));
}

CpaVelocityField::CpaVelocityField(const CpaBasis& basis, const Eigen::VectorXd& theta)
    : tess(&basis.tess) {
  stack.noalias() = basis.B * theta;
}

Vec2 velocity_at(const CpaBasis& basis, const Eigen::VectorXd& theta, const Vec2& p) {
  return CpaVelocityField(basis, theta)(p);
}

}  // namespace alignaug
