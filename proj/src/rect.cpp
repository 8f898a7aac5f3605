#include "steklov/rect.hpp"

#include <cmath>
#include <numbers>

namespace steklov {

namespace {

constexpr double kPi = std::numbers::pi;

// Evaluation this close to a tan pole is meaningless noise.
constexpr double kTanPoleTol = 1e-12;

// Half length of the axis carrying the oscillatory factor. The y axis has
// half length a, the x axis 1.
double trig_scale(const RectClass& cls, double a) {
  return cls.trig_axis == 'y' ? a : 1.0;
}

double hyp_scale(const RectClass& cls, double a) {
  return cls.trig_axis == 'y' ? 1.0 : a;
}

// 1/tanh rather than cosh/sinh: the ratio form turns into inf/inf = nan
// once t exceeds ~710, and extreme aspect ratios do reach such arguments.
double coth(double t) { return 1.0 / std::tanh(t); }

}  // namespace

const std::array<RectClassTag, 8>& rect_class_tags() {
  static const std::array<RectClassTag, 8> tags = {
      RectClassTag::I_i,   RectClassTag::I_ii, RectClassTag::II_i,
      RectClassTag::II_ii, RectClassTag::III_i, RectClassTag::III_ii,
      RectClassTag::IV_i,  RectClassTag::IV_ii};
  return tags;
}

std::string rect_class_name(RectClassTag tag) {
  switch (tag) {
    case RectClassTag::I_i: return "I_i";
    case RectClassTag::I_ii: return "I_ii";
    case RectClassTag::II_i: return "II_i";
    case RectClassTag::II_ii: return "II_ii";
    case RectClassTag::III_i: return "III_i";
    case RectClassTag::III_ii: return "III_ii";
    case RectClassTag::IV_i: return "IV_i";
    case RectClassTag::IV_ii: return "IV_ii";
    case RectClassTag::XY: return "XY";
  }
  return "?";
}

RectClass rect_class(RectClassTag tag) {
  // The (i) member of each pair oscillates in y, the (ii) member in x; the
  // hyperbolic factor lives on the other axis and its half length sets the
  // scale inside sigma's tanh/coth.
  switch (tag) {
    case RectClassTag::I_i:
      return {tag, 'y', TrigKind::tan_plus_tanh, MonotoneMap::nu_tanh, false};
    case RectClassTag::I_ii:
      return {tag, 'x', TrigKind::tan_plus_tanh, MonotoneMap::nu_tanh, true};
    case RectClassTag::II_i:
      return {tag, 'y', TrigKind::tan_eq_tanh, MonotoneMap::nu_coth, false};
    case RectClassTag::II_ii:
      return {tag, 'x', TrigKind::tan_eq_tanh, MonotoneMap::nu_coth, true};
    case RectClassTag::III_i:
      return {tag, 'y', TrigKind::tan_eq_coth, MonotoneMap::nu_tanh, false};
    case RectClassTag::III_ii:
      return {tag, 'x', TrigKind::tan_plus_coth, MonotoneMap::nu_coth, true};
    case RectClassTag::IV_i:
      return {tag, 'y', TrigKind::tan_plus_coth, MonotoneMap::nu_coth, false};
    case RectClassTag::IV_ii:
      return {tag, 'x', TrigKind::tan_eq_coth, MonotoneMap::nu_tanh, true};
    case RectClassTag::XY:
      throw DomainError("XY has no determining equation");
  }
  throw DomainError("unknown class tag");
}

double determining_residual(const RectClass& cls, double a, double nu) {
  const double t = trig_scale(cls, a);
  const double h = hyp_scale(cls, a);
  const double theta = nu * t;
  if (std::abs(std::cos(theta)) < kTanPoleTol) {
    throw DomainError("evaluation at a tan pole");
  }
  const double tan_term = std::tan(theta);
  switch (cls.trig_kind) {
    case TrigKind::tan_plus_tanh: return tan_term + std::tanh(nu * h);
    case TrigKind::tan_eq_tanh: return tan_term - std::tanh(nu * h);
    case TrigKind::tan_eq_coth: return tan_term - coth(nu * h);
    case TrigKind::tan_plus_coth: return tan_term + coth(nu * h);
  }
  throw DomainError("unknown trig kind");
}

Bracket first_branch_bracket(const RectClass& cls, double a) {
  const double t = trig_scale(cls, a);
  const double h = hyp_scale(cls, a);
  double theta_lo = 0.0;
  double theta_hi = 0.0;
  switch (cls.trig_kind) {
    case TrigKind::tan_plus_tanh:
    case TrigKind::tan_plus_coth:
      // tan must be negative to cancel a positive hyperbolic term.
      theta_lo = 0.5 * kPi;
      theta_hi = kPi;
      break;
    case TrigKind::tan_eq_coth:
      theta_lo = 0.0;
      theta_hi = 0.5 * kPi;
      break;
    case TrigKind::tan_eq_tanh:
      // tan and tanh both start at slope 1. When the tan argument grows
      // slower (t < h) the tanh side pulls ahead immediately and the curves
      // recross before the first pole; otherwise tan stays above tanh on
      // all of (0, pi/2) and the first crossing sits past the pole.
      if (t < h) {
        theta_lo = 0.0;
        theta_hi = 0.5 * kPi;
      } else {
        theta_lo = kPi;
        theta_hi = 1.5 * kPi;
      }
      break;
  }
  return {theta_lo / t, theta_hi / t, -1, +1};
}

RectCandidate first_candidate(const RectClass& cls, double a) {
  const Bracket br = first_branch_bracket(cls, a);
  const auto res = solve_monotone(
      [&](double nu) { return determining_residual(cls, a, nu); }, br);
  const double h = hyp_scale(cls, a);
  const double sigma = monotone_map_eval(cls.sigma_kind, h, res.root);
  return {cls, res.root, sigma, res.residual};
}

RectCandidate first_candidate(RectClassTag tag, double a) {
  if (tag == RectClassTag::XY) {
    if (std::abs(a - 1.0) > kSquareTol) {
      throw DomainError("x*y is an eigenfunction only on the square");
    }
    RectCandidate cand;
    cand.cls.tag = RectClassTag::XY;
    cand.nu = 0.0;
    cand.sigma = 1.0;
    cand.residual = 0.0;
    return cand;
  }
  return first_candidate(rect_class(tag), a);
}

RectSpectrum rect_spectrum(double a, double mult_tol) {
  if (!(a > 0.0) || !(a <= 1.0)) {
    throw DomainError("rectangle half height must satisfy 0 < a <= 1");
  }
  RectSpectrum out;
  for (RectClassTag tag : rect_class_tags()) {
    out.candidates.push_back(first_candidate(tag, a));
  }
  if (std::abs(a - 1.0) <= kSquareTol) {
    out.candidates.push_back(first_candidate(RectClassTag::XY, a));
  }
  out.sigma1 = out.candidates.front().sigma;
  for (const auto& c : out.candidates) {
    if (c.sigma < out.sigma1) out.sigma1 = c.sigma;
  }
  const double tol = mult_tol * std::max(1.0, out.sigma1);
  for (const auto& c : out.candidates) {
    if (std::abs(c.sigma - out.sigma1) <= tol) {
      out.eigenspace.push_back(c.cls.tag);
    }
  }
  out.invariant = 4.0 * out.sigma1 * (1.0 + a);
  return out;
}

double rect_invariant(double a) { return rect_spectrum(a).invariant; }

std::vector<RectSweepRow> sweep_rect(const std::vector<double>& a_grid) {
  std::vector<RectSweepRow> rows;
  rows.reserve(a_grid.size());
  for (double a : a_grid) {
    RectSweepRow row;
    row.a = a;
    try {
      row.spectrum = rect_spectrum(a);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double rect_eigenfunction_eval(const RectCandidate& cand, double x, double y) {
  const double nu = cand.nu;
  switch (cand.cls.tag) {
    case RectClassTag::I_i: return std::cosh(nu * x) * std::cos(nu * y);
    case RectClassTag::I_ii: return std::cos(nu * x) * std::cosh(nu * y);
    case RectClassTag::II_i: return std::sinh(nu * x) * std::sin(nu * y);
    case RectClassTag::II_ii: return std::sin(nu * x) * std::sinh(nu * y);
    case RectClassTag::III_i: return std::cosh(nu * x) * std::sin(nu * y);
    case RectClassTag::III_ii: return std::cos(nu * x) * std::sinh(nu * y);
    case RectClassTag::IV_i: return std::sinh(nu * x) * std::cos(nu * y);
    case RectClassTag::IV_ii: return std::sin(nu * x) * std::cosh(nu * y);
    case RectClassTag::XY: return x * y;
  }
  throw DomainError("unknown class tag");
}

RectNormalization normalize_rect(double width, double height) {
  if (!(width > 0.0) || !(height > 0.0)) {
    throw DomainError("rectangle sides must be positive");
  }
  RectNormalization out;
  out.scale = 0.5 * std::max(width, height);
  out.a = std::min(width, height) / std::max(width, height);
  return out;
}

}  // namespace steklov
