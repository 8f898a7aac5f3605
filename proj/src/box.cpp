#include "steklov/box.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace steklov {

namespace {

constexpr double kPi = std::numbers::pi;

// Trig branches scanned for the coupled families. The first admissible
// branch nearly always carries the first root; the extras cover boxes where
// early windows are empty or sign-change free.
constexpr int kMuBranches = 5;

enum class Fk { Cos, Sin, Cosh, Sinh };

const char* fk_name(Fk k) {
  switch (k) {
    case Fk::Cos: return "cos";
    case Fk::Sin: return "sin";
    case Fk::Cosh: return "cosh";
    case Fk::Sinh: return "sinh";
  }
  return "?";
}

// Eigenvalue each face condition assigns to a single factor of frequency k
// on an axis of half length d. The k = 0 limits (1/d for sin and sinh, 0
// for cos and cosh) are exact.
double axis_sigma(Fk kind, double d, double k) {
  const double t = k * d;
  switch (kind) {
    case Fk::Cosh:
      return k * std::tanh(t);
    case Fk::Sinh:
      // 1/tanh rather than cosh/sinh: the ratio overflows to inf/inf = nan
      // once t exceeds ~710, and thin boxes do reach such arguments.
      return t == 0.0 ? 1.0 / d : k / std::tanh(t);
    case Fk::Cos:
      return t == 0.0 ? 0.0 : -k * std::tan(t);
    case Fk::Sin:
      return t == 0.0 ? 1.0 / d : k * std::cos(t) / std::sin(t);
  }
  return 0.0;
}

Fk factor_kind(const BoxFamily& fam, int axis) {
  const bool trig = (axis == fam.mu_axis) ? fam.mu_on_trig : !fam.mu_on_trig;
  const bool odd = fam.odd[axis];
  if (trig) return odd ? Fk::Sin : Fk::Cos;
  return odd ? Fk::Sinh : Fk::Cosh;
}

MonotoneMap hyp_map(Fk kind) {
  return kind == Fk::Sinh ? MonotoneMap::nu_coth : MonotoneMap::nu_tanh;
}

// Frequency of the hyperbolic factor producing eigenvalue sigma, continued
// by 0 below the coth floor (the k -> 0 limit).
double hyp_inverse(Fk kind, double d, double sigma) {
  return invert_monotone_map(hyp_map(kind), d, sigma).value_or(0.0);
}

// Smallest k > 0 whose trig factor produces eigenvalue sigma > 0. cos
// factors answer on kd in (pi/2, pi) for every sigma; sin factors answer on
// (0, pi/2) while sigma < 1/d and jump to (pi, 3pi/2) beyond it. A root
// lying inside the bracket's endpoint inset (sigma at the extreme end of
// the branch's range) snaps to that endpoint instead of failing.
double trig_smallest_inverse(Fk kind, double d, double sigma) {
  double th_lo = 0.5 * kPi;
  double th_hi = kPi;
  if (kind == Fk::Sin) {
    if (sigma < 1.0 / d) {
      th_lo = 0.0;
      th_hi = 0.5 * kPi;
    } else {
      th_lo = kPi;
      th_hi = 1.5 * kPi;
    }
  }
  const double lo = th_lo / d;
  const double hi = th_hi / d;
  auto g = [&](double k) { return axis_sigma(kind, d, k) - sigma; };
  const double inset = kEndpointInsetFraction * (hi - lo);
  if (g(lo + inset) < 0.0) return lo;  // g decreasing: root below the inset
  if (g(hi - inset) > 0.0) return hi;
  return solve_monotone(g, {lo, hi, +1, -1}).root;
}

// Largest frequency trig_smallest_inverse can return for any sigma.
double trig_inverse_sup(Fk kind, double d) {
  return (kind == Fk::Sin ? 1.5 * kPi : kPi) / d;
}

struct SeparatedAxes {
  int l1 = 0;  // lower-numbered non-mu axis
  int l2 = 0;
};

SeparatedAxes lambda_axes(const BoxFamily& fam) {
  SeparatedAxes ax;
  ax.l1 = fam.mu_axis == 0 ? 1 : 0;
  ax.l2 = fam.mu_axis == 2 ? 1 : 2;
  return ax;
}

BoxCandidate make_separated_candidate(const BoxFamily& fam,
                                      const BoxDomain& dims, double sigma,
                                      double lambda1, double lambda2) {
  BoxCandidate cand;
  cand.family = fam;
  cand.lambda1 = lambda1;
  cand.lambda2 = lambda2;
  cand.mu = std::hypot(lambda1, lambda2);
  cand.sigma = sigma;
  const auto ax = lambda_axes(fam);
  const double norm = std::max(1.0, sigma);
  auto axis_res = [&](int axis, double freq) {
    return std::abs(axis_sigma(factor_kind(fam, axis), dims.len(axis), freq) -
                    sigma) /
           norm;
  };
  cand.residuals[0] = axis_res(ax.l1, lambda1);
  cand.residuals[1] = axis_res(ax.l2, lambda2);
  cand.residuals[2] = axis_res(fam.mu_axis, cand.mu);
  return cand;
}

// Coupled solve, mu factor trigonometric: both lambda axes invert their
// hyperbolic relation exactly as functions of sigma, so mu(sigma) =
// hypot(lambda1, lambda2) is continuous and increasing, and each trig
// branch occupies one sigma window. Within a window the window's residual
// trig_sigma(mu(sigma)) - sigma falls from the branch pole to below zero,
// so the first window with a sign change holds the smallest eigenvalue.
std::optional<BoxCandidate> solve_mu_trig(const BoxFamily& fam,
                                          const BoxDomain& dims) {
  const auto ax = lambda_axes(fam);
  const double d1 = dims.len(ax.l1);
  const double d2 = dims.len(ax.l2);
  const double d_mu = dims.len(fam.mu_axis);
  const Fk k1 = factor_kind(fam, ax.l1);
  const Fk k2 = factor_kind(fam, ax.l2);
  const Fk kmu = factor_kind(fam, fam.mu_axis);

  double sigma_floor = 0.0;
  if (k1 == Fk::Sinh) sigma_floor = std::max(sigma_floor, 1.0 / d1);
  if (k2 == Fk::Sinh) sigma_floor = std::max(sigma_floor, 1.0 / d2);

  auto mu_of = [&](double s) {
    return std::hypot(hyp_inverse(k1, d1, s), hyp_inverse(k2, d2, s));
  };
  auto residual = [&](double s) {
    return axis_sigma(kmu, d_mu, mu_of(s)) - s;
  };
  // Smallest sigma >= sigma_floor with mu(sigma) * d_mu = theta; sigma_floor
  // itself when the window edge falls below the admissible range.
  auto window_edge = [&](double theta) {
    if (mu_of(sigma_floor) * d_mu >= theta) return sigma_floor;
    double lo = sigma_floor;
    double hi = sigma_floor + 1.0;
    while (mu_of(hi) * d_mu < theta) hi = sigma_floor + 2.0 * (hi - sigma_floor);
    for (int it = 0;
         it < kMaxBisectIterations && hi - lo > 1e-13 * std::max(1.0, hi);
         ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mu_of(mid) * d_mu < theta) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  for (int branch = 0; branch < kMuBranches; ++branch) {
    double th_lo = 0.0;
    double th_hi = 0.0;
    if (kmu == Fk::Sin) {
      th_lo = branch == 0 ? 0.0 : branch * kPi;
      th_hi = branch == 0 ? 0.5 * kPi : (branch + 0.5) * kPi;
    } else {
      th_lo = (branch + 0.5) * kPi;
      th_hi = (branch + 1.0) * kPi;
    }
    const double lo = window_edge(th_lo);
    const double hi = window_edge(th_hi);
    if (!(hi - lo > 1e-12 * std::max(1.0, hi))) continue;
    RootResult res;
    try {
      res = solve_monotone(residual, {lo, hi, +1, -1});
    } catch (const NoSignChange&) {
      continue;
    }
    const double s = res.root;
    return make_separated_candidate(fam, dims, s, hyp_inverse(k1, d1, s),
                                    hyp_inverse(k2, d2, s));
  }
  return std::nullopt;
}

// Coupled solve, mu factor hyperbolic: both lambda axes take their smallest
// trig inverse as functions of sigma, mu inverts the hyperbolic relation,
// and the residual lambda1^2 + lambda2^2 - mu^2 decreases on each piece
// between sin-branch jump points. The residual starts positive and is
// eventually dominated by mu, so the first piece with a sign change holds
// the smallest eigenvalue.
std::optional<BoxCandidate> solve_mu_hyp(const BoxFamily& fam,
                                         const BoxDomain& dims) {
  const auto ax = lambda_axes(fam);
  const double d1 = dims.len(ax.l1);
  const double d2 = dims.len(ax.l2);
  const double d_mu = dims.len(fam.mu_axis);
  const Fk k1 = factor_kind(fam, ax.l1);
  const Fk k2 = factor_kind(fam, ax.l2);
  const Fk kmu = factor_kind(fam, fam.mu_axis);

  const double sigma_start = kmu == Fk::Sinh ? 1.0 / d_mu : 0.0;
  const double mu_bound =
      std::hypot(trig_inverse_sup(k1, d1), trig_inverse_sup(k2, d2)) + 1.0;
  const double sigma_end = monotone_map_eval(hyp_map(kmu), d_mu, mu_bound);

  auto residual = [&](double s) {
    const double l1 = trig_smallest_inverse(k1, d1, s);
    const double l2 = trig_smallest_inverse(k2, d2, s);
    const double mu = hyp_inverse(kmu, d_mu, s);
    return l1 * l1 + l2 * l2 - mu * mu;
  };

  std::vector<double> cuts = {sigma_start, sigma_end};
  for (const auto& [kind, d] : {std::pair{k1, d1}, std::pair{k2, d2}}) {
    if (kind == Fk::Sin && sigma_start < 1.0 / d && 1.0 / d < sigma_end) {
      cuts.push_back(1.0 / d);
    }
  }
  std::sort(cuts.begin(), cuts.end());

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    RootResult res;
    try {
      res = solve_monotone(residual, {cuts[i], cuts[i + 1], +1, -1});
    } catch (const NoSignChange&) {
      continue;
    }
    const double s = res.root;
    return make_separated_candidate(fam, dims, s,
                                    trig_smallest_inverse(k1, d1, s),
                                    trig_smallest_inverse(k2, d2, s));
  }
  return std::nullopt;
}

struct LinearParts {
  Fk trig_kind = Fk::Sin;
  Fk hyp_kind = Fk::Cosh;
  double d_lin = 1.0;
  double d_trig = 1.0;
  double d_hyp = 1.0;
};

LinearParts linear_parts(const LinearFamily& fam, const BoxDomain& dims) {
  LinearParts p;
  p.trig_kind = fam.odd[fam.trig_axis] ? Fk::Sin : Fk::Cos;
  p.hyp_kind = fam.odd[fam.hyp_axis] ? Fk::Sinh : Fk::Cosh;
  p.d_lin = dims.len(fam.linear_axis);
  p.d_trig = dims.len(fam.trig_axis);
  p.d_hyp = dims.len(fam.hyp_axis);
  return p;
}

// Oscillatory condition for a linear family, tan term isolated:
// lambda*d_lin = tan(lambda*d_trig) for a sin factor and
// lambda*d_lin = -cot(lambda*d_trig) for a cos factor.
double linear_osc_residual(const LinearParts& p, double lambda) {
  const double t = lambda * p.d_trig;
  if (p.trig_kind == Fk::Sin) {
    return lambda * p.d_lin - std::tan(t);
  }
  return lambda * p.d_lin + std::cos(t) / std::sin(t);
}

// Hyperbolic condition in the same standardized form:
// lambda*d_lin = coth(lambda*d_hyp) for cosh, tanh(lambda*d_hyp) for sinh.
double linear_hyp_residual(const LinearParts& p, double lambda) {
  const double t = lambda * p.d_hyp;
  if (p.hyp_kind == Fk::Cosh) {
    return lambda * p.d_lin - 1.0 / std::tanh(t);
  }
  return lambda * p.d_lin - std::tanh(t);
}

const char* axis_letter(int axis) { return axis == 0 ? "x" : (axis == 1 ? "y" : "z"); }

std::string fmt_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return buf;
}

}  // namespace

std::vector<BoxFamilyVariant> enumerate_families(const BoxDomain& dims) {
  const bool cube = std::max({dims.a, dims.b, dims.c}) -
                        std::min({dims.a, dims.b, dims.c}) <=
                    kCubeTol;
  std::vector<BoxFamilyVariant> out;
  for (int ox = 0; ox < 2; ++ox) {
    for (int oy = 0; oy < 2; ++oy) {
      for (int oz = 0; oz < 2; ++oz) {
        const std::array<bool, 3> odd = {ox != 0, oy != 0, oz != 0};
        if (!odd[0] && !odd[1] && !odd[2]) out.push_back(ConstantFamily{});
        if (odd[0] && odd[1] && odd[2] && cube) out.push_back(XyzFamily{});
        for (int mu_axis = 0; mu_axis < 3; ++mu_axis) {
          out.push_back(BoxFamily{odd, mu_axis, true});
        }
        for (int mu_axis = 0; mu_axis < 3; ++mu_axis) {
          out.push_back(BoxFamily{odd, mu_axis, false});
        }
        for (int lin = 0; lin < 3; ++lin) {
          if (!odd[lin]) continue;
          const int o1 = lin == 0 ? 1 : 0;
          const int o2 = lin == 2 ? 1 : 2;
          out.push_back(LinearFamily{odd, lin, o1, o2});
          out.push_back(LinearFamily{odd, lin, o2, o1});
        }
      }
    }
  }
  return out;
}

std::string family_label(const BoxFamilyVariant& fam) {
  struct Visitor {
    std::string operator()(const ConstantFamily&) const { return "1"; }
    std::string operator()(const XyzFamily&) const { return "x y z"; }
    std::string operator()(const BoxFamily& f) const {
      const auto ax = lambda_axes(f);
      std::string out;
      for (int axis = 0; axis < 3; ++axis) {
        const char* freq = axis == f.mu_axis ? "mu" : (axis == ax.l1 ? "l1" : "l2");
        if (!out.empty()) out += ' ';
        out += fk_name(factor_kind(f, axis));
        out += '(';
        out += freq;
        out += ' ';
        out += axis_letter(axis);
        out += ')';
      }
      return out;
    }
    std::string operator()(const LinearFamily& f) const {
      std::string out;
      for (int axis = 0; axis < 3; ++axis) {
        if (!out.empty()) out += ' ';
        if (axis == f.linear_axis) {
          out += axis_letter(axis);
          continue;
        }
        const Fk kind = axis == f.trig_axis
                            ? (f.odd[axis] ? Fk::Sin : Fk::Cos)
                            : (f.odd[axis] ? Fk::Sinh : Fk::Cosh);
        out += fk_name(kind);
        out += "(l ";
        out += axis_letter(axis);
        out += ')';
      }
      return out;
    }
  };
  return std::visit(Visitor{}, fam);
}

std::string family_label(const BoxCandidate& cand) {
  return family_label(cand.family);
}

std::string family_signature(const BoxCandidate& cand) {
  struct Visitor {
    std::string operator()(const ConstantFamily&) const { return "const"; }
    std::string operator()(const XyzFamily&) const { return "id·id·id"; }
    std::string operator()(const BoxFamily& f) const {
      std::array<std::string, 3> names;
      for (int axis = 0; axis < 3; ++axis) {
        names[axis] = fk_name(factor_kind(f, axis));
        if (axis == f.mu_axis) names[axis] += "_mu";
      }
      std::sort(names.begin(), names.end());
      return names[0] + "·" + names[1] + "·" + names[2];
    }
    std::string operator()(const LinearFamily& f) const {
      std::array<std::string, 3> names;
      for (int axis = 0; axis < 3; ++axis) {
        if (axis == f.linear_axis) {
          names[axis] = "id";
        } else if (axis == f.trig_axis) {
          names[axis] = f.odd[axis] ? "sin" : "cos";
        } else {
          names[axis] = f.odd[axis] ? "sinh" : "cosh";
        }
      }
      std::sort(names.begin(), names.end());
      return names[0] + "·" + names[1] + "·" + names[2];
    }
  };
  return std::visit(Visitor{}, cand.family);
}

std::optional<BoxCandidate> solve_coupled(const BoxFamily& fam,
                                          const BoxDomain& dims) {
  return fam.mu_on_trig ? solve_mu_trig(fam, dims) : solve_mu_hyp(fam, dims);
}

LinearSolveResult solve_linear_family(const LinearFamily& fam,
                                      const BoxDomain& dims,
                                      double consistency_tol) {
  const LinearParts p = linear_parts(fam, dims);
  LinearSolveResult out;
  out.best_residual = std::numeric_limits<double>::infinity();
  for (int branch = 0; branch < kLinearBranches; ++branch) {
    double th_lo = 0.0;
    double th_hi = 0.0;
    if (p.trig_kind == Fk::Sin) {
      // lambda*d_lin - tan crosses on (0, pi/2) only when the linear side
      // is longer; later branches always cross between consecutive poles.
      if (branch == 0) {
        if (!(p.d_lin > p.d_trig)) continue;
        th_lo = 0.0;
        th_hi = 0.5 * kPi;
      } else {
        th_lo = branch * kPi - 0.5 * kPi;
        th_hi = branch * kPi + 0.5 * kPi;
      }
    } else {
      th_lo = branch * kPi;
      th_hi = (branch + 1.0) * kPi;
    }
    RootResult res;
    try {
      res = solve_monotone(
          [&](double lambda) { return linear_osc_residual(p, lambda); },
          {th_lo / p.d_trig, th_hi / p.d_trig, +1, -1});
    } catch (const NoSignChange&) {
      continue;
    }
    const double lambda = res.root;
    const double hyp_res = std::abs(linear_hyp_residual(p, lambda));
    out.best_residual = std::min(out.best_residual, hyp_res);
    if (hyp_res < consistency_tol) {
      BoxCandidate cand;
      cand.family = fam;
      cand.lambda1 = lambda;
      cand.lambda2 = 0.0;
      cand.mu = lambda;
      cand.sigma = 1.0 / p.d_lin;
      cand.residuals = {std::abs(res.residual), hyp_res, 0.0};
      out.accepted.push_back(cand);
    }
  }
  if (!std::isfinite(out.best_residual)) out.best_residual = 0.0;
  return out;
}

BoxSpectrum box_spectrum(const BoxDomain& dims, double mult_tol) {
  for (int axis = 0; axis < 3; ++axis) {
    if (!(dims.len(axis) > 0.0) || !std::isfinite(dims.len(axis))) {
      throw DomainError("box half lengths must be positive and finite");
    }
  }
  BoxSpectrum out;
  for (const auto& fam : enumerate_families(dims)) {
    if (std::holds_alternative<ConstantFamily>(fam)) {
      out.diagnostics.push_back(
          {family_label(fam), "trivial eigenvalue 0, excluded"});
      continue;
    }
    if (std::holds_alternative<XyzFamily>(fam)) {
      BoxCandidate cand;
      cand.family = fam;
      cand.sigma = 1.0 / dims.a;
      out.candidates.push_back(cand);
      continue;
    }
    if (const auto* sep = std::get_if<BoxFamily>(&fam)) {
      if (auto cand = solve_coupled(*sep, dims)) {
        out.candidates.push_back(*cand);
      } else {
        out.diagnostics.push_back(
            {family_label(fam), "no admissible root on scanned branches"});
      }
      continue;
    }
    const auto& lin = std::get<LinearFamily>(fam);
    const auto res = solve_linear_family(lin, dims);
    for (const auto& cand : res.accepted) out.candidates.push_back(cand);
    if (res.accepted.empty()) {
      out.diagnostics.push_back(
          {family_label(fam), "frequency conditions incompatible, best residual " +
                                  fmt_residual(res.best_residual)});
    } else {
      out.diagnostics.push_back(
          {family_label(fam), "compatible frequency found, residual " +
                                  fmt_residual(res.best_residual)});
    }
  }
  if (out.candidates.empty()) {
    throw std::runtime_error("no nontrivial eigenvalue candidates found");
  }
  std::stable_sort(
      out.candidates.begin(), out.candidates.end(),
      [](const BoxCandidate& x, const BoxCandidate& y) { return x.sigma < y.sigma; });
  out.sigma1 = out.candidates.front().sigma;
  const double tol = mult_tol * std::max(1.0, out.sigma1);
  for (std::size_t i = 0; i < out.candidates.size(); ++i) {
    if (std::abs(out.candidates[i].sigma - out.sigma1) <= tol) {
      out.eigenspace.push_back(i);
    }
  }
  out.invariant = out.sigma1 * std::sqrt(8.0 * (dims.a * dims.b +
                                                dims.b * dims.c +
                                                dims.c * dims.a));
  return out;
}

double box_invariant(const BoxDomain& dims) {
  return box_spectrum(dims).invariant;
}

std::vector<BoxSweepRow> sweep_box(const std::vector<double>& a_grid,
                                   const std::vector<double>& b_grid) {
  std::vector<BoxSweepRow> rows;
  for (double a : a_grid) {
    for (double b : b_grid) {
      if (b < a - 1e-12) continue;
      BoxSweepRow row;
      row.a = a;
      row.b = b;
      try {
        row.spectrum = box_spectrum({a, b, 1.0});
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

double box_eigenfunction_eval(const BoxCandidate& cand, double x, double y,
                              double z) {
  const std::array<double, 3> pt = {x, y, z};
  struct Visitor {
    const BoxCandidate& cand;
    const std::array<double, 3>& pt;
    double operator()(const ConstantFamily&) const { return 1.0; }
    double operator()(const XyzFamily&) const { return pt[0] * pt[1] * pt[2]; }
    double operator()(const BoxFamily& f) const {
      const auto ax = lambda_axes(f);
      double v = 1.0;
      for (int axis = 0; axis < 3; ++axis) {
        const double freq = axis == f.mu_axis
                                ? cand.mu
                                : (axis == ax.l1 ? cand.lambda1 : cand.lambda2);
        const double t = freq * pt[axis];
        switch (factor_kind(f, axis)) {
          case Fk::Cos: v *= std::cos(t); break;
          case Fk::Sin: v *= std::sin(t); break;
          case Fk::Cosh: v *= std::cosh(t); break;
          case Fk::Sinh: v *= std::sinh(t); break;
        }
      }
      return v;
    }
    double operator()(const LinearFamily& f) const {
      double v = 1.0;
      for (int axis = 0; axis < 3; ++axis) {
        if (axis == f.linear_axis) {
          v *= pt[axis];
          continue;
        }
        const double t = cand.lambda1 * pt[axis];
        if (axis == f.trig_axis) {
          v *= f.odd[axis] ? std::sin(t) : std::cos(t);
        } else {
          v *= f.odd[axis] ? std::sinh(t) : std::cosh(t);
        }
      }
      return v;
    }
  };
  return std::visit(Visitor{cand, pt}, cand.family);
}

BoxNormalization normalize_box(double half_a, double half_b, double half_c) {
  if (!(half_a > 0.0) || !(half_b > 0.0) || !(half_c > 0.0)) {
    throw DomainError("box half lengths must be positive");
  }
  std::array<double, 3> s = {half_a, half_b, half_c};
  std::sort(s.begin(), s.end());
  BoxNormalization out;
  out.scale = s[2];
  out.dims = {s[0] / s[2], s[1] / s[2], 1.0};
  return out;
}

}  // namespace steklov
