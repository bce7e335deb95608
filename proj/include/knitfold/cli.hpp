#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knitfold/compiler.hpp"
#include "knitfold/gauge.hpp"
#include "knitfold/moments.hpp"

namespace knitfold {

enum class ChartFormat { Text, Svg, Machine };

/// Settings shared by the compile and analyze commands. Unset gauge
/// components stay zero until a flag supplies them.
struct ToolConfig {
    Gauge gauge{};
    RuleConfig rules{};
    std::vector<ChartFormat> chart_formats{ChartFormat::Text};
    RConvention convention = RConvention::TableI;
    bool convention_set = false;
};

/// Reads a JSON config. Known keys: stitch_w_mm, stitch_h_mm,
/// orientation_tol_deg, offgrid_policy, wale_buffer, twist_map,
/// fusible_fraction, chart_formats, r_convention. Unknown keys and wrong
/// types throw SchemaError; out-of-range values throw ParamError.
ToolConfig parse_tool_config(std::string_view text);

std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

const char* version();

/// Exit codes: 0 success, 1 diagnostics at error severity or domain errors,
/// 2 usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knitfold
