#include "steklov/verify.hpp"

#include <cmath>
#include <cstdlib>

#include "steklov/rect.hpp"

namespace steklov {

namespace {

// Uniform closed samples on [-half + margin, half - margin] at the given
// density per unit length.
std::vector<double> axis_samples(double half, int density, double margin) {
  const double lo = -half + margin;
  const double hi = half - margin;
  if (!(hi > lo)) throw DomainError("domain too thin to sample");
  const int n = std::max(2, static_cast<int>(std::llround(density * (hi - lo))));
  std::vector<double> xs(n + 1);
  for (int i = 0; i <= n; ++i) xs[i] = lo + (hi - lo) * i / n;
  return xs;
}

struct BoundarySample {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double nx = 0.0;
  double ny = 0.0;
  double nz = 0.0;
  double w = 0.0;
  bool on_corner = false;  // corner (2-D) or edge (3-D) point
};

// One-sided third-order derivative along the outward normal, evaluated from
// the sample point inward. At corners the stencil follows the side's own
// normal and stays inside the closed domain.
template <class Eval>
double normal_derivative(const Eval& s, const BoundarySample& p) {
  const double h = kFdStep;
  const double f0 = s(p.x, p.y, p.z);
  const double f1 = s(p.x - h * p.nx, p.y - h * p.ny, p.z - h * p.nz);
  const double f2 = s(p.x - 2 * h * p.nx, p.y - 2 * h * p.ny, p.z - 2 * h * p.nz);
  const double f3 = s(p.x - 3 * h * p.nx, p.y - 3 * h * p.ny, p.z - 3 * h * p.nz);
  return (11.0 * f0 - 18.0 * f1 + 9.0 * f2 - 2.0 * f3) / (6.0 * h);
}

template <class Eval, class Lap>
ResidualReport run_check(const Eval& s, const Lap& laplacian, double sigma,
                         const std::vector<std::array<double, 3>>& interior,
                         const std::vector<BoundarySample>& boundary) {
  double smax = 0.0;
  for (const auto& p : interior) {
    smax = std::max(smax, std::abs(s(p[0], p[1], p[2])));
  }
  for (const auto& p : boundary) {
    smax = std::max(smax, std::abs(s(p.x, p.y, p.z)));
  }
  if (smax < 1e-14) {
    throw DegenerateFunction("function vanishes on the sample set");
  }

  ResidualReport rep;
  for (const auto& p : interior) {
    rep.interior_residual =
        std::max(rep.interior_residual, std::abs(laplacian(p[0], p[1], p[2])));
  }
  rep.interior_residual /= smax;

  double flux = 0.0;
  double mass = 0.0;
  for (const auto& p : boundary) {
    const double f0 = s(p.x, p.y, p.z);
    const double dn = normal_derivative(s, p);
    if (!p.on_corner) {
      rep.boundary_residual =
          std::max(rep.boundary_residual, std::abs(dn - sigma * f0));
    }
    flux += p.w * f0 * dn;
    mass += p.w * f0 * f0;
  }
  rep.boundary_residual /= smax;
  if (mass == 0.0) throw DegenerateFunction("zero boundary trace");
  const double rayleigh = flux / mass;
  rep.rayleigh_gap =
      std::abs(rayleigh - sigma) / (sigma != 0.0 ? std::abs(sigma) : 1.0);
  return rep;
}

}  // namespace

ResidualReport residual_check(const std::function<double(double, double)>& s,
                              double sigma, const RectDomain& dims,
                              int sample_density) {
  if (sample_density < 8) throw DomainError("sample_density must be >= 8");
  const double a = dims.a;
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("rectangle half height must be positive");
  }
  const double margin = 2.0 * kFdStep;

  std::vector<std::array<double, 3>> interior;
  for (double x : axis_samples(1.0, sample_density, margin)) {
    for (double y : axis_samples(a, sample_density, margin)) {
      interior.push_back({x, y, 0.0});
    }
  }

  std::vector<BoundarySample> boundary;
  auto add_side = [&](double len, auto point_at, double nx, double ny) {
    const int n = std::max(2, static_cast<int>(std::llround(sample_density * len)));
    for (int i = 0; i <= n; ++i) {
      const auto [px, py] = point_at(len * i / n);
      BoundarySample p;
      p.x = px;
      p.y = py;
      p.nx = nx;
      p.ny = ny;
      p.w = (i == 0 || i == n) ? 0.5 * len / n : len / n;
      p.on_corner = (i == 0 || i == n);
      boundary.push_back(p);
    }
  };
  add_side(2.0, [&](double t) { return std::pair{-1.0 + t, -a}; }, 0.0, -1.0);
  add_side(2.0, [&](double t) { return std::pair{-1.0 + t, a}; }, 0.0, 1.0);
  add_side(2.0 * a, [&](double t) { return std::pair{-1.0, -a + t}; }, -1.0, 0.0);
  add_side(2.0 * a, [&](double t) { return std::pair{1.0, -a + t}; }, 1.0, 0.0);

  auto eval = [&](double x, double y, double) { return s(x, y); };
  auto laplacian = [&](double x, double y, double) {
    const double h = kFdStep;
    return (s(x + h, y) + s(x - h, y) + s(x, y + h) + s(x, y - h) -
            4.0 * s(x, y)) /
           (h * h);
  };
  return run_check(eval, laplacian, sigma, interior, boundary);
}

ResidualReport residual_check(
    const std::function<double(double, double, double)>& s, double sigma,
    const BoxDomain& dims, int sample_density) {
  if (sample_density < 8) throw DomainError("sample_density must be >= 8");
  for (int axis = 0; axis < 3; ++axis) {
    if (!(dims.len(axis) > 0.0) || !std::isfinite(dims.len(axis))) {
      throw DomainError("box half lengths must be positive");
    }
  }
  const double margin = 2.0 * kFdStep;

  std::vector<std::array<double, 3>> interior;
  for (double x : axis_samples(dims.a, sample_density, margin)) {
    for (double y : axis_samples(dims.b, sample_density, margin)) {
      for (double z : axis_samples(dims.c, sample_density, margin)) {
        interior.push_back({x, y, z});
      }
    }
  }

  std::vector<BoundarySample> boundary;
  // One face per axis and sign; tangential axes keep their coordinate order.
  for (int axis = 0; axis < 3; ++axis) {
    const int t1 = axis == 0 ? 1 : 0;
    const int t2 = axis == 2 ? 1 : 2;
    const double len1 = 2.0 * dims.len(t1);
    const double len2 = 2.0 * dims.len(t2);
    const int n1 = std::max(2, static_cast<int>(std::llround(sample_density * len1)));
    const int n2 = std::max(2, static_cast<int>(std::llround(sample_density * len2)));
    for (double sign : {-1.0, 1.0}) {
      for (int i = 0; i <= n1; ++i) {
        for (int j = 0; j <= n2; ++j) {
          std::array<double, 3> pt{};
          pt[axis] = sign * dims.len(axis);
          pt[t1] = -dims.len(t1) + len1 * i / n1;
          pt[t2] = -dims.len(t2) + len2 * j / n2;
          BoundarySample p;
          p.x = pt[0];
          p.y = pt[1];
          p.z = pt[2];
          std::array<double, 3> nrm{};
          nrm[axis] = sign;
          p.nx = nrm[0];
          p.ny = nrm[1];
          p.nz = nrm[2];
          const double w1 = (i == 0 || i == n1) ? 0.5 * len1 / n1 : len1 / n1;
          const double w2 = (j == 0 || j == n2) ? 0.5 * len2 / n2 : len2 / n2;
          p.w = w1 * w2;
          p.on_corner = (i == 0 || i == n1 || j == 0 || j == n2);
          boundary.push_back(p);
        }
      }
    }
  }

  auto eval = [&](double x, double y, double z) { return s(x, y, z); };
  auto laplacian = [&](double x, double y, double z) {
    const double h = kFdStep;
    return (s(x + h, y, z) + s(x - h, y, z) + s(x, y + h, z) + s(x, y - h, z) +
            s(x, y, z + h) + s(x, y, z - h) - 6.0 * s(x, y, z)) /
           (h * h);
  };
  return run_check(eval, laplacian, sigma, interior, boundary);
}

ConvergenceStudy convergence_study(double a, const std::vector<int>& grids) {
  ConvergenceStudy out;
  for (int n : grids) {
    const DtnOracleResult r = fd_dtn_rect(a, n);
    ConvergenceRow row;
    row.grid_n = n;
    row.sigma1_fd = r.sigma1_fd;
    row.error = std::abs(r.sigma1_fd - rect_spectrum(r.a_actual).sigma1);
    out.rows.push_back(row);
  }
  for (std::size_t i = 1; i < out.rows.size(); ++i) {
    out.orders.push_back(
        std::log2(out.rows[i - 1].error / out.rows[i].error));
  }
  return out;
}

}  // namespace steklov
