#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "steklov/box.hpp"
#include "steklov/rect.hpp"

namespace steklov {

// All fields are normalized: the stencil residuals by max |s| over the
// sample set, the Rayleigh gap by sigma.
struct ResidualReport {
  double interior_residual = 0.0;  // max |laplacian s| over interior samples
  double boundary_residual = 0.0;  // max |dn s - sigma s| over boundary samples
  double rayleigh_gap = 0.0;       // |rayleigh(s) - sigma| / sigma
};

struct DegenerateFunction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Central-difference step for the pointwise stencils.
inline constexpr double kFdStep = 1e-4;

// Checks that s is harmonic and satisfies dn s = sigma s on the boundary,
// with no reference to how (s, sigma) was produced. Interior Laplacian by
// 5-point (2-D) or 7-point (3-D) central differences at grid samples at
// least 2*kFdStep from the boundary; normal derivative by a one-sided
// 4-point stencil; Rayleigh quotient as boundary flux over boundary mass,
// both by composite trapezoid at the same density. Corner (edge) samples
// are excluded from the boundary gate: the outward normal is undefined
// there. sample_density is samples per unit length, at least 8.
ResidualReport residual_check(const std::function<double(double, double)>& s,
                              double sigma, const RectDomain& dims,
                              int sample_density = 64);

ResidualReport residual_check(
    const std::function<double(double, double, double)>& s, double sigma,
    const BoxDomain& dims, int sample_density = 32);

struct SingularSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DtnOracleResult {
  int grid_n = 0;        // requested cells per unit length
  double a_actual = 1.0; // a snapped so that a * grid_n is an integer
  double h = 0.0;
  double sigma1_fd = 0.0;         // smallest eigenvalue above the trivial one
  std::vector<double> eigenvalues; // ascending, including the near-zero mode
};

// Independent finite-difference oracle for the rectangle: assembles the
// discrete Dirichlet-to-Neumann matrix column by column (one interior
// Dirichlet solve per non-corner boundary node, normal derivative by a
// second-order one-sided difference), symmetrizes against the boundary
// measure, and returns the k_eigs smallest eigenvalues. The boundary
// measure gives corner-adjacent nodes 3h/2 (they own the half cell left by
// the excluded corner); with plain uniform weights the corner-local
// asymmetry of the matrix pollutes the whole spectrum.
DtnOracleResult fd_dtn_rect(double a, int grid_n, int k_eigs = 8);

// Trivial-eigenvalue cutoff when selecting sigma1_fd.
inline constexpr double kTrivialEigTol = 1e-6;

struct ConvergenceRow {
  int grid_n = 0;
  double sigma1_fd = 0.0;
  double error = 0.0;  // vs the closed-form sigma1 at the snapped a
};

struct ConvergenceStudy {
  std::vector<ConvergenceRow> rows;
  std::vector<double> orders;  // log2(err[i-1]/err[i]) per successive pair
};

ConvergenceStudy convergence_study(double a, const std::vector<int>& grids);

}  // namespace steklov
