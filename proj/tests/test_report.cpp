#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <string>
#include <vector>

#include "steklov/report.hpp"

using namespace steklov;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      out.push_back(text.substr(pos));
      break;
    }
    out.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return out;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    if (comma == std::string::npos) {
      out.push_back(line.substr(pos));
      break;
    }
    out.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

double parse(const std::string& field) {
  return std::strtod(field.c_str(), nullptr);
}

}  // namespace

TEST_CASE("machine format round trips exactly") {
  for (const double v : {0.688252742336085, 1.0 / 3.0, 5.313528181039455,
                         1e-300, 0.0, -2.5}) {
    const std::string s = fmt_machine(v);
    CHECK(parse(s) == v);
  }
  CHECK(fmt_machine(1.0) == "1");
  CHECK(fmt_machine(0.5) == "0.5");
}

TEST_CASE("human format pins seven decimals") {
  CHECK(fmt_human(1.0) == "1.0000000");
  CHECK(fmt_human(0.531509106085256) == "0.5315091");
  CHECK(fmt_human(-0.25) == "-0.2500000");
}

TEST_CASE("output record shape") {
  const auto rec = output_record("rect", {{"a", 1.0}}, {{"x", 1}},
                                 nlohmann::json::object());
  CHECK(rec["schema_version"] == "1");
  CHECK(rec["command"] == "rect");
  CHECK(rec.contains("inputs"));
  CHECK(rec.contains("results"));
  CHECK(rec.contains("diagnostics"));
}

TEST_CASE("rectangle csv layout") {
  const auto spec = rect_spectrum(1.0);
  const auto rows = lines_of(rect_csv(spec));
  REQUIRE(rows.size() == 12);  // header + 9 candidates + 2 summary rows
  CHECK(rows[0] == "family,nu,sigma,residual,attains_sigma1");

  bool saw_attaining = false;
  for (std::size_t i = 1; i + 2 < rows.size(); ++i) {
    const auto fields = split_fields(rows[i]);
    REQUIRE(fields.size() == 5);
    if (fields[0] == "IV_ii") {
      CHECK(parse(fields[2]) == spec.sigma1);
      CHECK(fields[4] == "1");
      saw_attaining = true;
    }
    if (fields[0] == "I_i") CHECK(fields[4] == "0");
  }
  CHECK(saw_attaining);

  const auto sigma_row = split_fields(rows[rows.size() - 2]);
  CHECK(sigma_row[0] == "sigma1");
  CHECK(parse(sigma_row[2]) == spec.sigma1);
  const auto inv_row = split_fields(rows.back());
  CHECK(inv_row[0] == "invariant");
  CHECK(parse(inv_row[2]) == spec.invariant);
}

TEST_CASE("box csv layout") {
  const auto spec = box_spectrum(BoxDomain{1.0, 1.0, 1.0});
  const auto rows = lines_of(box_csv(spec));
  REQUIRE(rows.size() == 52);  // header + 49 candidates + 2 summary rows
  CHECK(rows[0] == "family,lambda1,lambda2,mu,sigma,attains_sigma1");

  std::size_t attaining = 0;
  for (std::size_t i = 1; i + 2 < rows.size(); ++i) {
    const auto fields = split_fields(rows[i]);
    REQUIRE(fields.size() == 6);
    if (fields[5] == "1") ++attaining;
  }
  CHECK(attaining == 3);

  const auto sigma_row = split_fields(rows[rows.size() - 2]);
  CHECK(sigma_row[0] == "sigma1");
  CHECK(parse(sigma_row[4]) == spec.sigma1);
}

TEST_CASE("rect sweep csv carries per-class columns and failures") {
  const auto rows = sweep_rect({0.5, -1.0, 1.0});
  const auto csv = lines_of(rect_sweep_csv(rows));
  REQUIRE(csv.size() == 4);
  CHECK(csv[0] ==
        "a,sigma1,invariant,attaining_family,sigma_I_i,sigma_I_ii,sigma_II_i,"
        "sigma_II_ii,sigma_III_i,sigma_III_ii,sigma_IV_i,sigma_IV_ii,sigma_XY,"
        "diagnostics");

  const auto good = split_fields(csv[1]);
  REQUIRE(good.size() == 14);
  CHECK(good[0] == "0.5");
  CHECK(good[3] == "IV_ii");
  CHECK(parse(good[1]) == rows[0].spectrum->sigma1);
  CHECK(good[12].empty());  // no xy column off the square
  CHECK(good[13].empty());

  const auto bad = split_fields(csv[2]);
  REQUIRE(bad.size() == 14);
  CHECK(bad[0] == "-1");
  for (std::size_t i = 1; i < 13; ++i) CHECK(bad[i].empty());
  CHECK(!bad[13].empty());

  const auto square = split_fields(csv[3]);
  REQUIRE(square.size() == 14);
  CHECK(square[12] == "1");  // xy column present on the square
}

TEST_CASE("box sweep csv layout and failures") {
  const auto rows = sweep_box({0.5, -0.5}, {1.0});
  const auto csv = lines_of(box_sweep_csv(rows));
  REQUIRE(csv.size() == 3);
  CHECK(csv[0] == "a,b,sigma1,invariant,attaining_family,diagnostics");

  const auto good = split_fields(csv[1]);
  REQUIRE(good.size() == 6);
  CHECK(good[0] == "0.5");
  CHECK(good[1] == "1");
  CHECK(parse(good[2]) == rows[0].spectrum->sigma1);
  CHECK(good[5].empty());

  const auto bad = split_fields(csv[2]);
  CHECK(bad[0] == "-0.5");
  CHECK(bad[2].empty());
  CHECK(!bad[5].empty());
}

TEST_CASE("json results carry labeled eigenspace") {
  const auto rect = rect_results(rect_spectrum(1.0));
  CHECK(rect["sigma1"].get<double>() == rect_spectrum(1.0).sigma1);
  REQUIRE(rect["candidates"].size() == 9);
  REQUIRE(rect["eigenspace"].size() == 2);
  CHECK(rect["eigenspace"][0] == "III_i");
  CHECK(rect["eigenspace"][1] == "IV_ii");
  CHECK(rect["multiplicity"] == 2);

  const auto box = box_results(box_spectrum(BoxDomain{1.0, 1.0, 1.0}));
  CHECK(box["multiplicity"] == 3);
  REQUIRE(box["eigenspace"].size() == 3);
  for (const auto& label : box["eigenspace"]) {
    const std::string text = label.get<std::string>();
    CHECK(text.find("sin(mu") != std::string::npos);
  }
}
