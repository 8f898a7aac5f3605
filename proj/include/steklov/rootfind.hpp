#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

namespace steklov {

// Open interval known to contain exactly one root of a strictly monotone
// function. Endpoint signs are the expected signs of f just inside each end.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  int f_lo_sign = 0;
  int f_hi_sign = 0;
};

struct RootResult {
  double root = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct NoSignChange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rejected domain parameters or an evaluation outside a function's domain.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MaxIterations : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultRootTol = 1e-12;
inline constexpr int kMaxBisectIterations = 200;

// Grouping tolerance for eigenvalue multiplicity, relative to max(1, sigma1).
// Roots are solved to 1e-12, so genuine degeneracies coincide far tighter
// than distinct eigenvalues separate.
inline constexpr double kDefaultMultTol = 1e-9;

// Endpoints are open: the determining equations blow up exactly at branch
// edges, so evaluation happens at an inset of 1e-9 * (hi - lo).
inline constexpr double kEndpointInsetFraction = 1e-9;

// Plain bisection. Deterministic, guaranteed on a sign-changing bracket,
// and fast enough at this problem size that no acceleration is warranted.
// Terminates when the bracket width is <= tol or the bracket has collapsed
// to adjacent doubles; tolerances below one ulp of the root are capped by
// representation, not treated as failure.
template <class F>
RootResult solve_monotone(F&& f, const Bracket& br, double tol = kDefaultRootTol) {
  if (!(br.lo < br.hi)) throw NoSignChange("bracket is empty");
  const double inset = kEndpointInsetFraction * (br.hi - br.lo);
  double lo = br.lo + inset;
  double hi = br.hi - inset;
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0, true};
  if (fhi == 0.0) return {hi, 0.0, 0, true};
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw NoSignChange("no sign change across bracket");
  }
  int it = 0;
  while (hi - lo > tol) {
    if (it >= kMaxBisectIterations) {
      throw MaxIterations(
          "bisection did not reach tolerance; bracket is suspect");
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = f(mid);
    if (fmid == 0.0) return {mid, 0.0, it + 1, true};
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
    ++it;
  }
  const double root = 0.5 * (lo + hi);
  return {root, f(root), it, true};
}

// The two monotone frequency-to-eigenvalue maps. nu_tanh is nu*tanh(nu*s)
// with range (0, inf); nu_coth is nu*coth(nu*s) with range (1/s, inf).
enum class MonotoneMap { nu_tanh, nu_coth };

// Forward evaluation, with the nu -> 0 limits (0 and 1/s) handled exactly.
double monotone_map_eval(MonotoneMap kind, double scale, double nu);

// sigma*s within 1e-9 of 1 counts as the degenerate nu = 0 limit of the
// coth map; this is the linear-in-coordinate eigenvalue sigma = 1/s.
inline constexpr double kDegenerateCothTol = 1e-9;

// Unique nu >= 0 with map(nu) = target_sigma. Returns nullopt when the coth
// map cannot reach target_sigma (sigma below 1/s), and nu = 0 exactly on the
// degenerate boundary. The search bracket expands by doubling, which always
// captures the root because both maps grow without bound.
std::optional<double> invert_monotone_map(MonotoneMap kind, double scale,
                                          double target_sigma);

}  // namespace steklov
