#include "steklov/rootfind.hpp"

#include <cmath>

namespace steklov {

double monotone_map_eval(MonotoneMap kind, double scale, double nu) {
  const double t = nu * scale;
  if (kind == MonotoneMap::nu_tanh) {
    return nu * std::tanh(t);
  }
  // nu * coth(nu * scale) -> 1/scale as nu -> 0. coth as 1/tanh so large
  // arguments saturate to 1 instead of overflowing into inf/inf.
  if (t == 0.0) return 1.0 / scale;
  return nu / std::tanh(t);
}

std::optional<double> invert_monotone_map(MonotoneMap kind, double scale,
                                          double target_sigma) {
  if (kind == MonotoneMap::nu_coth) {
    const double floor = 1.0 / scale;
    if (std::abs(target_sigma * scale - 1.0) <= kDegenerateCothTol) return 0.0;
    if (target_sigma < floor) return std::nullopt;
  } else {
    if (target_sigma <= 0.0) return (target_sigma == 0.0)
                                        ? std::optional<double>(0.0)
                                        : std::nullopt;
  }
  auto f = [&](double nu) {
    return monotone_map_eval(kind, scale, nu) - target_sigma;
  };
  double hi = 1.0;
  while (f(hi) < 0.0) hi *= 2.0;
  // The map is increasing from its nu = 0 limit, which we just checked is
  // below target_sigma, so [0, hi] brackets the root.
  double lo = 0.0;
  double flo = f(lo);
  if (flo == 0.0) return 0.0;
  for (int it = 0; it < kMaxBisectIterations && hi - lo > kDefaultRootTol;
       ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace steklov
