#include <cmath>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "steklov/rect.hpp"
#include "steklov/verify.hpp"

namespace steklov {

namespace {

struct BoundaryNode {
  int n1 = 0;      // interior index one step inward
  int n2 = 0;      // interior index two steps inward
  double w = 0.0;  // boundary measure owned by this node
};

}  // namespace

DtnOracleResult fd_dtn_rect(double a, int grid_n, int k_eigs) {
  if (!(a > 0.0) || !(a <= 1.0)) {
    throw DomainError("aspect ratio must satisfy 0 < a <= 1");
  }
  if (grid_n < 16) throw DomainError("grid_n must be at least 16");
  const int m_a = static_cast<int>(std::llround(a * grid_n));
  if (m_a < 2) throw DomainError("aspect ratio too thin for this grid");

  const double a_actual = static_cast<double>(m_a) / grid_n;
  const double h = 1.0 / grid_n;
  const int nx = 2 * grid_n;  // cells across [-1, 1]
  const int ny = 2 * m_a;     // cells across [-a_actual, a_actual]
  const int mx = nx - 1;      // interior nodes per row
  const int my = ny - 1;
  const int n_int = mx * my;
  auto idx = [&](int i, int j) { return (j - 1) * mx + (i - 1); };

  // 5-point Laplacian on interior nodes, Dirichlet data eliminated.
  const double inv_h2 = 1.0 / (h * h);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<std::size_t>(n_int) * 5);
  for (int j = 1; j <= my; ++j) {
    for (int i = 1; i <= mx; ++i) {
      const int r = idx(i, j);
      trips.emplace_back(r, r, 4.0 * inv_h2);
      if (i > 1) trips.emplace_back(r, idx(i - 1, j), -inv_h2);
      if (i < mx) trips.emplace_back(r, idx(i + 1, j), -inv_h2);
      if (j > 1) trips.emplace_back(r, idx(i, j - 1), -inv_h2);
      if (j < my) trips.emplace_back(r, idx(i, j + 1), -inv_h2);
    }
  }
  Eigen::SparseMatrix<double> A(n_int, n_int);
  A.setFromTriplets(trips.begin(), trips.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver;
  solver.compute(A);
  if (solver.info() != Eigen::Success) {
    throw SingularSystem("interior Laplacian factorization failed");
  }

  // Non-corner boundary nodes: bottom, top, left, right. Each owns a
  // trapezoid weight of h, except nodes one step from a corner, which also
  // own the half cell the excluded corner leaves behind.
  std::vector<BoundaryNode> bnodes;
  auto side_weight = [&](int q, int len) {
    return (q == 1 || q == len - 1) ? 1.5 * h : h;
  };
  for (int i = 1; i <= mx; ++i) {
    bnodes.push_back({idx(i, 1), idx(i, 2), side_weight(i, nx)});
  }
  for (int i = 1; i <= mx; ++i) {
    bnodes.push_back({idx(i, my), idx(i, my - 1), side_weight(i, nx)});
  }
  for (int j = 1; j <= my; ++j) {
    bnodes.push_back({idx(1, j), idx(2, j), side_weight(j, ny)});
  }
  for (int j = 1; j <= my; ++j) {
    bnodes.push_back({idx(mx, j), idx(mx - 1, j), side_weight(j, ny)});
  }
  const int nb = static_cast<int>(bnodes.size());

  // One harmonic extension per boundary node; its normal derivative column
  // comes from a second-order one-sided difference through the two interior
  // neighbors (the boundary value itself is the identity).
  Eigen::MatrixXd U1 = Eigen::MatrixXd::Zero(nb, nb);
  Eigen::MatrixXd U2 = Eigen::MatrixXd::Zero(nb, nb);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n_int);
  for (int q = 0; q < nb; ++q) {
    rhs[bnodes[q].n1] = inv_h2;
    const Eigen::VectorXd u = solver.solve(rhs);
    if (solver.info() != Eigen::Success) {
      throw SingularSystem("Dirichlet solve failed");
    }
    rhs[bnodes[q].n1] = 0.0;
    for (int p = 0; p < nb; ++p) {
      U1(p, q) = u[bnodes[p].n1];
      U2(p, q) = u[bnodes[p].n2];
    }
  }
  Eigen::MatrixXd K =
      (3.0 * Eigen::MatrixXd::Identity(nb, nb) - 4.0 * U1 + U2) / (2.0 * h);

  // Symmetrize against the boundary measure and solve the generalized
  // symmetric problem through the W^{-1/2} similarity transform.
  Eigen::VectorXd w(nb);
  for (int p = 0; p < nb; ++p) w[p] = bnodes[p].w;
  Eigen::MatrixXd B =
      0.5 * (w.asDiagonal() * K + K.transpose() * w.asDiagonal());
  const Eigen::VectorXd wh = w.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd C = wh.asDiagonal() * B * wh.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C);
  if (es.info() != Eigen::Success) {
    throw SingularSystem("eigendecomposition failed");
  }

  DtnOracleResult out;
  out.grid_n = grid_n;
  out.a_actual = a_actual;
  out.h = h;
  const auto& evs = es.eigenvalues();
  const int keep = std::min<int>(k_eigs, nb);
  out.eigenvalues.assign(evs.data(), evs.data() + keep);
  out.sigma1_fd = 0.0;
  for (int p = 0; p < nb; ++p) {
    if (evs[p] > kTrivialEigTol) {
      out.sigma1_fd = evs[p];
      break;
    }
  }
  if (out.sigma1_fd == 0.0) {
    throw SingularSystem("no nontrivial eigenvalue found");
  }
  return out;
}

}  // namespace steklov
