#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "steklov/box.hpp"

using namespace steklov;

namespace {

bool near(double x, double y, double tol) { return std::abs(x - y) < tol; }

std::array<bool, 3> family_parity(const BoxFamilyVariant& fam) {
  if (const auto* sep = std::get_if<BoxFamily>(&fam)) return sep->odd;
  if (const auto* lin = std::get_if<LinearFamily>(&fam)) return lin->odd;
  if (std::holds_alternative<XyzFamily>(fam)) return {true, true, true};
  return {false, false, false};
}

struct CubeGroup {
  const char* signature;
  std::size_t count;
  double sigma;
  double lam_lo;
  double lam_hi;
};

// Unit cube, grouped by the axis-order-independent signature. sigma and the
// unordered frequency pair were solved once at tol 1e-12 and frozen here.
const CubeGroup kCubeTable[] = {
    {"cos_mu·cosh·cosh", 3, 1.708931942012949, 1.804131942938966, 1.804131942938966},
    {"cos_mu·cosh·sinh", 6, 1.798569275676068, 1.677148914993722, 1.883677478318077},
    {"cos_mu·sinh·sinh", 3, 1.872889508251005, 1.766569782088027, 1.766569782088027},
    {"cosh_mu·sin·sin", 3, 0.811951980642798, 0.737144836288121, 0.737144836288121},
    {"cosh·cosh·sin_mu", 3, 0.531509106085256, 0.800251667491921, 0.800251667491921},
    {"cosh·sin_mu·sinh", 6, 2.897409010700028, 2.879176335113243, 2.914501872641722},
    {"cos·cosh_mu·sin", 6, 4.353808456258221, 2.001743980555831, 3.867967478617397},
    {"cos·cos·cosh_mu", 3, 3.081927405908552, 2.188211504701612, 2.188211504701612},
    {"cos·cos·sinh_mu", 3, 3.101938827133605, 2.184321844688009, 2.184321844688009},
    {"cos·sin·sinh_mu", 6, 4.356273201431263, 2.001478994058608, 3.867645099547517},
    {"sin_mu·sinh·sinh", 3, 2.912673880816762, 2.894911235952804, 2.894911235952804},
    {"sin·sin·sinh_mu", 3, 5.313528181039455, 3.757049486673217, 3.757049486673217},
};

// Dims built so the even-even-odd linear family on z is solvable with
// frequency exactly 2: a = atanh(1/2)/2 pins the hyperbolic condition and
// b = (pi - atan(1/2))/2 pins the oscillatory one.
constexpr double kLinearDimA = 0.274653072167027;
constexpr double kLinearDimB = 1.338972522294493;

}  // namespace

TEST_CASE("family catalog has the expected shape") {
  const BoxDomain generic{1.0, 0.9, 0.8};
  const auto fams = enumerate_families(generic);
  std::size_t n_const = 0, n_sep = 0, n_lin = 0, n_xyz = 0;
  for (const auto& f : fams) {
    n_const += std::holds_alternative<ConstantFamily>(f);
    n_sep += std::holds_alternative<BoxFamily>(f);
    n_lin += std::holds_alternative<LinearFamily>(f);
    n_xyz += std::holds_alternative<XyzFamily>(f);
  }
  CHECK(n_const == 1);
  CHECK(n_sep == 48);   // 8 parity classes x (3 trig-mu + 3 hyp-mu rows)
  CHECK(n_lin == 24);   // two rows per odd axis across all classes
  CHECK(n_xyz == 0);
  CHECK(fams.size() == 73);
  CHECK(std::holds_alternative<ConstantFamily>(fams.front()));

  const auto cube_fams = enumerate_families(BoxDomain{1.0, 1.0, 1.0});
  CHECK(cube_fams.size() == 74);
  // xyz leads its fully odd class.
  const auto it = std::find_if(
      cube_fams.begin(), cube_fams.end(), [](const BoxFamilyVariant& f) {
        return family_parity(f) == std::array<bool, 3>{true, true, true};
      });
  REQUIRE(it != cube_fams.end());
  CHECK(std::holds_alternative<XyzFamily>(*it));
}

TEST_CASE("unit cube catalog reproduces the degenerate group structure") {
  const auto spec = box_spectrum(BoxDomain{1.0, 1.0, 1.0});
  REQUIRE(spec.candidates.size() == 49);

  std::map<std::string, std::vector<const BoxCandidate*>> groups;
  for (const auto& c : spec.candidates) {
    groups[family_signature(c)].push_back(&c);
    CHECK(near(c.mu, std::hypot(c.lambda1, c.lambda2), 1e-12));
    for (const double r : c.residuals) CHECK(r <= 1e-8);
  }
  CHECK(groups.size() == 13);  // 12 separated categories + xyz

  for (const auto& g : kCubeTable) {
    const auto it = groups.find(g.signature);
    REQUIRE(it != groups.end());
    CHECK(it->second.size() == g.count);
    for (const auto* c : it->second) {
      CHECK(near(c->sigma, g.sigma, 1e-10));
      const double lo = std::min(c->lambda1, c->lambda2);
      const double hi = std::max(c->lambda1, c->lambda2);
      CHECK(near(lo, g.lam_lo, 1e-10));
      CHECK(near(hi, g.lam_hi, 1e-10));
    }
  }

  const auto xyz = groups.find("id·id·id");
  REQUIRE(xyz != groups.end());
  CHECK(xyz->second.size() == 1);
  CHECK(xyz->second.front()->sigma == 1.0);
}

TEST_CASE("cube sigma1 carries multiplicity three") {
  const auto spec = box_spectrum(BoxDomain{1.0, 1.0, 1.0});
  CHECK(near(spec.sigma1, 0.531509106085256, 1e-10));
  REQUIRE(spec.eigenspace.size() == 3);
  for (const auto idx : spec.eigenspace) {
    const auto& c = spec.candidates[idx];
    CHECK(family_signature(c) == "cosh·cosh·sin_mu");
    for (const double r : c.residuals) CHECK(r < 1e-9);
  }
  CHECK(near(spec.invariant, 2.6038522071033805, 1e-9));
  CHECK(near(spec.invariant, spec.sigma1 * std::sqrt(24.0), 1e-14));
}

TEST_CASE("half-by-three-quarter box ladder") {
  const BoxDomain dims{0.5, 0.75, 1.0};
  const auto spec = box_spectrum(dims);
  CHECK(spec.candidates.size() == 48);
  CHECK(near(spec.sigma1, 0.423977310580368, 1e-10));
  CHECK(near(spec.invariant, 1.528671932930839, 1e-10));
  REQUIRE(spec.eigenspace.size() == 1);

  const auto& low = spec.candidates[spec.eigenspace[0]];
  const auto* fam = std::get_if<BoxFamily>(&low.family);
  REQUIRE(fam != nullptr);
  CHECK(fam->mu_on_trig);
  CHECK(fam->mu_axis == 2);
  CHECK(fam->odd == std::array<bool, 3>{false, false, true});
  CHECK(near(low.lambda1, 0.954672303554162, 1e-10));
  CHECK(near(low.lambda2, 0.794113125879903, 1e-10));
  CHECK(near(low.mu, 1.241778911025695, 1e-10));

  // First distinct levels above sigma1.
  std::vector<double> distinct;
  for (const auto& c : spec.candidates) {
    if (distinct.empty() || c.sigma > distinct.back() + 1e-9) {
      distinct.push_back(c.sigma);
    }
  }
  REQUIRE(distinct.size() >= 5);
  CHECK(near(distinct[1], 0.676849757254480, 1e-10));
  CHECK(near(distinct[2], 0.879477959336344, 1e-10));
  CHECK(near(distinct[3], 1.235171712726056, 1e-10));
  CHECK(near(distinct[4], 1.343518125834749, 1e-10));
}

TEST_CASE("axis permutation leaves the spectrum alone") {
  const auto base = box_spectrum(BoxDomain{0.5, 0.75, 1.0});
  for (const auto& dims :
       {BoxDomain{1.0, 0.5, 0.75}, BoxDomain{0.75, 1.0, 0.5}}) {
    const auto spec = box_spectrum(dims);
    CHECK(near(spec.sigma1, base.sigma1, 1e-12));
    CHECK(near(spec.invariant, base.invariant, 1e-12));
    REQUIRE(spec.candidates.size() == base.candidates.size());
    for (std::size_t i = 0; i < spec.candidates.size(); ++i) {
      CHECK(near(spec.candidates[i].sigma, base.candidates[i].sigma, 1e-11));
    }
  }
}

TEST_CASE("rescaling the box rescales sigma and fixes the invariant") {
  // Scaling is exact analytically; numerically the two solves are
  // independent bisections at 1e-12 each, so agreement is a few ulps looser.
  const auto base = box_spectrum(BoxDomain{0.5, 0.75, 1.0});
  const auto scaled = box_spectrum(BoxDomain{1.0, 1.5, 2.0});
  CHECK(near(scaled.sigma1 * 2.0, base.sigma1, 1e-10));
  CHECK(near(scaled.invariant, base.invariant, 1e-10));

  const auto big_cube = box_spectrum(BoxDomain{2.0, 2.0, 2.0});
  CHECK(near(big_cube.sigma1 * 2.0, 0.531509106085256, 1e-10));
  const auto xyz = std::find_if(
      big_cube.candidates.begin(), big_cube.candidates.end(),
      [](const BoxCandidate& c) {
        return std::holds_alternative<XyzFamily>(c.family);
      });
  REQUIRE(xyz != big_cube.candidates.end());
  CHECK(xyz->sigma == 0.5);
}

TEST_CASE("thin slab pushes sigma1 toward zero") {
  const auto spec = box_spectrum(BoxDomain{0.01, 1.0, 1.0});
  CHECK(near(spec.sigma1, 0.023949361336394, 1e-9));
  CHECK(spec.eigenspace.size() == 2);  // b = c symmetry
}

TEST_CASE("degenerate linear family appears only on matched dims") {
  const BoxDomain dims{kLinearDimA, kLinearDimB, 1.0};
  const auto spec = box_spectrum(dims);
  const auto it = std::find_if(
      spec.candidates.begin(), spec.candidates.end(), [](const BoxCandidate& c) {
        return std::holds_alternative<LinearFamily>(c.family);
      });
  REQUIRE(it != spec.candidates.end());
  CHECK(it->sigma == 1.0);  // exactly 1 / half-length of the bare axis
  CHECK(near(it->lambda1, 2.0, 1e-9));
  CHECK(it->lambda2 == 0.0);
  CHECK(it->mu == it->lambda1);
  CHECK(it->residuals[0] < 1e-8);
  CHECK(it->residuals[1] < 1e-8);
  CHECK(it->residuals[2] == 0.0);

  LinearFamily fam;
  fam.odd = {false, false, true};
  fam.linear_axis = 2;
  fam.trig_axis = 1;
  fam.hyp_axis = 0;
  const auto direct = solve_linear_family(fam, dims);
  REQUIRE(direct.accepted.size() == 1);
  CHECK(near(direct.accepted.front().lambda1, 2.0, 1e-9));
  CHECK(direct.best_residual < 1e-10);

  // Solvability is codimension one: nudging a kills it.
  const BoxDomain off{kLinearDimA + 1e-3, kLinearDimB, 1.0};
  CHECK(solve_linear_family(fam, off).accepted.empty());

  // On the cube every linear row is incompatible and lands in diagnostics.
  const auto cube = box_spectrum(BoxDomain{1.0, 1.0, 1.0});
  for (const auto& c : cube.candidates) {
    CHECK(!std::holds_alternative<LinearFamily>(c.family));
  }
  std::size_t linear_notes = 0;
  for (const auto& d : cube.diagnostics) {
    if (d.note.find("incompatible") != std::string::npos) ++linear_notes;
  }
  CHECK(linear_notes == 24);
}

TEST_CASE("eigenfunction evaluation matches the closed form") {
  const auto cube = box_spectrum(BoxDomain{1.0, 1.0, 1.0});
  const BoxCandidate* low = nullptr;
  for (const auto idx : cube.eigenspace) {
    const auto& fam = std::get<BoxFamily>(cube.candidates[idx].family);
    if (fam.mu_axis == 2) low = &cube.candidates[idx];
  }
  REQUIRE(low != nullptr);
  CHECK(near(box_eigenfunction_eval(*low, 0.5, 0.5, 1.0), 1.057962965744789,
             1e-10));

  // Parity even-even-odd.
  const double v = box_eigenfunction_eval(*low, 0.3, 0.4, 0.5);
  CHECK(near(box_eigenfunction_eval(*low, -0.3, 0.4, 0.5), v, 1e-14));
  CHECK(near(box_eigenfunction_eval(*low, 0.3, -0.4, 0.5), v, 1e-14));
  CHECK(near(box_eigenfunction_eval(*low, 0.3, 0.4, -0.5), -v, 1e-14));

  BoxCandidate xyz;
  xyz.family = XyzFamily{};
  CHECK(box_eigenfunction_eval(xyz, 0.5, -0.5, 2.0) == -0.5);

  const auto lin_spec = box_spectrum(BoxDomain{kLinearDimA, kLinearDimB, 1.0});
  for (const auto& c : lin_spec.candidates) {
    if (!std::holds_alternative<LinearFamily>(c.family)) continue;
    CHECK(near(box_eigenfunction_eval(c, 0.1, 0.2, 0.3),
               std::cosh(2.0 * 0.1) * std::cos(2.0 * 0.2) * 0.3, 1e-9));
  }
}

TEST_CASE("sweep covers the upper triangle in grid order") {
  const std::vector<double> grid = {0.2, 0.4, 0.6, 0.8, 1.0};
  const auto rows = sweep_box(grid, grid);
  REQUIRE(rows.size() == 15);
  CHECK(rows[0].a == 0.2);
  CHECK(rows[0].b == 0.2);
  CHECK(rows[1].b == 0.4);
  CHECK(rows[5].a == 0.4);
  CHECK(rows[5].b == 0.4);
  for (const auto& row : rows) {
    CHECK(row.b >= row.a - 1e-12);
    REQUIRE(row.spectrum.has_value());
    CHECK(row.error.empty());
  }
  CHECK(near(rows.back().spectrum->sigma1, 0.531509106085256, 1e-12));

  const auto bad = sweep_box({-0.5}, {1.0});
  REQUIRE(bad.size() == 1);
  CHECK(!bad[0].spectrum.has_value());
  CHECK(!bad[0].error.empty());
}

TEST_CASE("solver rejects degenerate dims") {
  CHECK_THROWS_AS(box_spectrum(BoxDomain{0.0, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(box_spectrum(BoxDomain{1.0, -1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(
      box_spectrum(BoxDomain{1.0, 1.0, std::numeric_limits<double>::infinity()}),
      DomainError);
  CHECK_THROWS_AS(box_spectrum(BoxDomain{1.0, 1.0, std::nan("")}), DomainError);
}

TEST_CASE("normalize_box sorts and scales to the unit form") {
  const auto n = normalize_box(2.0, 0.5, 1.0);
  CHECK(n.scale == 2.0);
  CHECK(near(n.dims.a, 0.25, 1e-15));
  CHECK(near(n.dims.b, 0.5, 1e-15));
  CHECK(n.dims.c == 1.0);

  const auto cube = normalize_box(3.0, 3.0, 3.0);
  CHECK(cube.scale == 3.0);
  CHECK(cube.dims.a == 1.0);

  CHECK_THROWS_AS(normalize_box(0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("spectrum is deterministic") {
  const auto s1 = box_spectrum(BoxDomain{0.5, 0.75, 1.0});
  const auto s2 = box_spectrum(BoxDomain{0.5, 0.75, 1.0});
  CHECK(s1.sigma1 == s2.sigma1);
  CHECK(s1.invariant == s2.invariant);
}
