#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "steklov/rootfind.hpp"

namespace steklov {

// Rectangle [-1,1] x [-a,a] with 0 < a <= 1. Any other rectangle maps onto
// this form by normalize_rect below; the core solver never rescales.
struct RectDomain {
  double a = 1.0;
};

enum class RectClassTag { I_i, I_ii, II_i, II_ii, III_i, III_ii, IV_i, IV_ii, XY };

const std::array<RectClassTag, 8>& rect_class_tags();
std::string rect_class_name(RectClassTag tag);

enum class TrigKind { tan_plus_tanh, tan_eq_tanh, tan_eq_coth, tan_plus_coth };

// One row of the eight-class catalog. The tag fixes every other field:
// trig_axis says which coordinate carries the oscillatory factor (and hence
// whether the tan argument is nu or nu*a), trig_kind is the determining
// equation shape, and sigma is nu*tanh or nu*coth of the hyperbolic axis.
struct RectClass {
  RectClassTag tag = RectClassTag::IV_ii;
  char trig_axis = 'x';
  TrigKind trig_kind = TrigKind::tan_eq_coth;
  MonotoneMap sigma_kind = MonotoneMap::nu_tanh;
  bool sigma_scale_is_a = true;
};

RectClass rect_class(RectClassTag tag);

struct RectCandidate {
  RectClass cls;
  double nu = 0.0;
  double sigma = 0.0;
  double residual = 0.0;
};

struct RectSpectrum {
  std::vector<RectCandidate> candidates;
  double sigma1 = 0.0;
  std::vector<RectClassTag> eigenspace;
  double invariant = 0.0;  // 4 * sigma1 * (1 + a)
};

// Signed residual of the class's determining equation, standardized with the
// tan term isolated: tan(nu*t) - hyp(nu*h) for the equality forms and
// tan(nu*t) + hyp(nu*h) for the plus forms. Strictly one sign change on the
// first branch. Throws DomainError within floating tolerance of a tan pole.
double determining_residual(const RectClass& cls, double a, double nu);

// Bracket around the smallest positive root. In terms of theta = nu * t
// (t the trig-axis half length): the plus forms need tan negative, so
// theta in (pi/2, pi); tan = coth crosses in (0, pi/2); tan = tanh crosses
// in (0, pi/2) only when the tan argument scale is the smaller side, and
// otherwise first crosses in (pi, 3pi/2).
Bracket first_branch_bracket(const RectClass& cls, double a);

// Smallest-nu candidate for one class. XY is the square-only eigenfunction
// x*y with sigma = 1 and no frequency parameter (nu stored as 0).
RectCandidate first_candidate(const RectClass& cls, double a);
RectCandidate first_candidate(RectClassTag tag, double a);

// XY participates only when the rectangle is a square to within this.
inline constexpr double kSquareTol = 1e-12;

RectSpectrum rect_spectrum(double a, double mult_tol = kDefaultMultTol);
double rect_invariant(double a);

struct RectSweepRow {
  double a = 0.0;
  std::optional<RectSpectrum> spectrum;
  std::string error;  // empty on success
};

std::vector<RectSweepRow> sweep_rect(const std::vector<double>& a_grid);

double rect_eigenfunction_eval(const RectCandidate& cand, double x, double y);

// CLI-level helper: width x height -> unit half-width form. original sides
// equal scale times the normalized sides, so sigma maps back as sigma/scale.
struct RectNormalization {
  double a = 1.0;
  double scale = 1.0;
};

RectNormalization normalize_rect(double width, double height);

}  // namespace steklov
