#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcolor/alpha_rooting.hpp"
#include "qcolor/image.hpp"
#include "qcolor/measures.hpp"

namespace qcolor::report {

inline constexpr std::string_view kCsvHeader = "alpha,CR,M1,M2,M3,M,EMEC,EMEC2";

/// Fixed 4-decimal rendering used in every table; "-0.0000" prints as "0.0000".
std::string fixed4(double v);

std::string csv_row(const MeasureRecord& rec);

/// Header line followed by one row per record, '\n' terminated.
std::string to_csv(std::span<const MeasureRecord> records);

/// Keys alpha, cr, m1, m2, m3, m, emec, emec2 at full precision. Non-finite
/// values are written as null.
nlohmann::json to_json(const MeasureRecord& rec);
MeasureRecord record_from_json(const nlohmann::json& j);

nlohmann::json sweep_to_json(const AlphaSweepResult& result);
std::vector<MeasureRecord> records_from_json(const nlohmann::json& j);

struct SheetLayout {
  std::size_t cols = 1;
  std::size_t rows = 1;
};

/// Near-square row-major grid holding `tiles` tiles.
SheetLayout sheet_layout(std::size_t tiles);

/// Tile 0 is the original, followed by one tile per alpha-rooted image,
/// each labelled with its alpha. Unused cells stay black.
ColorImage contact_sheet(const ColorImage& original, std::span<const ColorImage> variants,
                         std::span<const double> alphas);

/// "0.90", "1.00", "0.875": at least two decimals, more only when needed.
std::string alpha_label(double alpha);

}  // namespace qcolor::report
