#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "steklov/rootfind.hpp"

namespace steklov {

// Cuboid [-a,a] x [-b,b] x [-c,c]. The solver accepts any positive half
// lengths; normalize_box below produces the sorted unit form a <= b <= c = 1.
struct BoxDomain {
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
  double len(int axis) const { return axis == 0 ? a : (axis == 1 ? b : c); }
};

// Two-parameter separated family. One axis carries a factor in
// mu = sqrt(lambda1^2 + lambda2^2); the other two carry lambda1 and lambda2
// (lambda1 on the lower-numbered axis). Parity decides each factor:
// even -> cos/cosh, odd -> sin/sinh. mu_on_trig true means the mu factor is
// trigonometric and both lambda axes are hyperbolic; false is the reverse.
// Every row of the eight parity-class catalogs is one such descriptor.
struct BoxFamily {
  std::array<bool, 3> odd{};
  int mu_axis = 2;
  bool mu_on_trig = true;
};

// Degenerate family with a bare coordinate factor on linear_axis, where
// sigma = 1 / half-length of that axis exactly. The two remaining factors
// share one frequency lambda: a trigonometric factor on trig_axis and a
// hyperbolic one on hyp_axis, parity-matched to the class bits.
struct LinearFamily {
  std::array<bool, 3> odd{};
  int linear_axis = 2;
  int trig_axis = 0;
  int hyp_axis = 1;
};

struct XyzFamily {};       // x*y*z, admissible only when a = b = c
struct ConstantFamily {};  // s = 1, the trivial eigenvalue sigma = 0

using BoxFamilyVariant =
    std::variant<ConstantFamily, BoxFamily, LinearFamily, XyzFamily>;

// Catalog for the given dims: per parity class the six separated rows, the
// linear rows (two per odd axis), the constant row for class 000, and xyz
// for class 111 when the box is a cube within kCubeTol.
std::vector<BoxFamilyVariant> enumerate_families(const BoxDomain& dims);

inline constexpr double kCubeTol = 1e-12;

struct BoxCandidate {
  BoxFamilyVariant family;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double mu = 0.0;  // always sqrt(lambda1^2 + lambda2^2)
  double sigma = 0.0;
  // Per-axis residuals of the determining equalities, each normalized by
  // max(1, sigma). Linear families store the two consistency residuals in
  // the first two slots.
  std::array<double, 3> residuals{};
};

// Eigenfunction-shaped label, e.g. "cosh(l1 x) cosh(l2 y) sin(mu z)".
std::string family_label(const BoxFamilyVariant& fam);
std::string family_label(const BoxCandidate& cand);

// Axis-order-independent grouping key: the three factor names sorted, with
// the mu-bearing factor marked. Degenerate rotations share a signature.
std::string family_signature(const BoxCandidate& cand);

// Smallest-sigma solution of the family's determining triple on the trig
// factor's first admissible branch, found by parametrizing everything by
// sigma and bisecting one scalar residual. nullopt when no admissible sigma
// window on the scanned branches contains a sign change.
std::optional<BoxCandidate> solve_coupled(const BoxFamily& fam,
                                          const BoxDomain& dims);

inline constexpr double kConsistencyTol = 1e-8;
inline constexpr int kLinearBranches = 8;

struct LinearSolveResult {
  std::vector<BoxCandidate> accepted;
  double best_residual = 0.0;  // smallest hyperbolic-condition residual seen
};

// sigma is pinned at 1/half-length, leaving one over-determined unknown
// lambda. The oscillatory condition is solved branch by branch (first
// kLinearBranches) and a root is accepted only if the hyperbolic condition
// agrees within consistency_tol. Generically empty: solvability is a
// codimension-one condition on the dims.
LinearSolveResult solve_linear_family(const LinearFamily& fam,
                                      const BoxDomain& dims,
                                      double consistency_tol = kConsistencyTol);

struct FamilyDiagnostic {
  std::string family;
  std::string note;
};

struct BoxSpectrum {
  std::vector<BoxCandidate> candidates;  // sorted by (sigma, class, axis)
  double sigma1 = 0.0;
  std::vector<std::size_t> eigenspace;  // indices into candidates
  double invariant = 0.0;               // sigma1 * sqrt(8(ab+bc+ca))
  std::vector<FamilyDiagnostic> diagnostics;
};

BoxSpectrum box_spectrum(const BoxDomain& dims,
                         double mult_tol = kDefaultMultTol);
double box_invariant(const BoxDomain& dims);

struct BoxSweepRow {
  double a = 0.0;
  double b = 0.0;
  std::optional<BoxSpectrum> spectrum;
  std::string error;
};

// Rows over the b >= a triangle of a_grid x b_grid, in grid order.
std::vector<BoxSweepRow> sweep_box(const std::vector<double>& a_grid,
                                   const std::vector<double>& b_grid);

double box_eigenfunction_eval(const BoxCandidate& cand, double x, double y,
                              double z);

struct BoxNormalization {
  BoxDomain dims;     // sorted, largest side scaled to 1
  double scale = 1.0; // original half sides = scale * normalized half sides
};

BoxNormalization normalize_box(double half_a, double half_b, double half_c);

}  // namespace steklov
