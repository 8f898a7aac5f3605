#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "steklov/box.hpp"
#include "steklov/rect.hpp"
#include "steklov/verify.hpp"

namespace steklov {

// Human output carries 7 decimals; machine output (JSON, CSV) carries
// 17 significant digits so every number round-trips exactly.
std::string fmt_human(double v);
std::string fmt_machine(double v);

inline constexpr const char* kSchemaVersion = "1";

// Top-level object emitted once per invocation.
nlohmann::json output_record(const std::string& command,
                             nlohmann::json inputs, nlohmann::json results,
                             nlohmann::json diagnostics);

nlohmann::json rect_results(const RectSpectrum& spec);
nlohmann::json box_results(const BoxSpectrum& spec);
nlohmann::json box_diagnostics(const BoxSpectrum& spec);
nlohmann::json rect_sweep_results(const std::vector<RectSweepRow>& rows);
nlohmann::json box_sweep_results(const std::vector<BoxSweepRow>& rows);

// CSV: UTF-8, comma separator, \n line endings, header row first. Fields
// containing separators or quotes are double-quoted.
std::string rect_csv(const RectSpectrum& spec);
std::string box_csv(const BoxSpectrum& spec);
std::string rect_sweep_csv(const std::vector<RectSweepRow>& rows);
std::string box_sweep_csv(const std::vector<BoxSweepRow>& rows);

std::string rect_human(const RectSpectrum& spec, double a);
std::string box_human(const BoxSpectrum& spec, const BoxDomain& dims);
std::string rect_sweep_human(const std::vector<RectSweepRow>& rows);
std::string box_sweep_human(const std::vector<BoxSweepRow>& rows);

}  // namespace steklov
