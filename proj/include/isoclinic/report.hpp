#pragma once

#include <string>

#include "json.hpp"

#include "isoclinic/count.hpp"

namespace isoc {

using json = nlohmann::json;

// Each report is a JSON object with "columns" and "rows" (strings) for
// rendering, plus command-specific machine fields.  Rendering reads only
// "title", "columns" and "rows", so a parsed report renders identically.
json count_report(const TypeContext& ctx, const BraidSpec& spec);
json interval_report(const TypeContext& ctx, const BraidSpec& spec);
json count_min_report(const TypeContext& ctx, const Slope& slope);
json springer_report(const std::string& label, int jobs = 1);
json validate_report(const std::string& label, const std::string& dir = "");
json oracle_report(int n, int q, const BraidSpec& spec, int jobs = 1);
json coxeter_report(int n, int jobs = 1);

std::string render(const json& report, const std::string& format);  // table | json | csv

// Terminal columns taken by a UTF-8 string (combining marks are free).
std::size_t display_width(const std::string& s);

std::string group_name(const TypeContext& ctx);

}  // namespace isoc
