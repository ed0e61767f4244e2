#include "qcolor/report.hpp"

#include <fmt/format.h>

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qcolor::report {

namespace {

double number_or_nan(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return v.get<double>();
}

nlohmann::json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

// 3x5 glyphs, one row per entry, bit 2 = left column.
constexpr std::array<std::array<unsigned char, 5>, 11> kGlyphs{{
    {7, 5, 5, 5, 7},  // 0
    {2, 6, 2, 2, 7},  // 1
    {7, 1, 7, 4, 7},  // 2
    {7, 1, 7, 1, 7},  // 3
    {5, 5, 7, 1, 1},  // 4
    {7, 4, 7, 1, 7},  // 5
    {7, 4, 7, 5, 7},  // 6
    {7, 1, 1, 1, 1},  // 7
    {7, 5, 7, 5, 7},  // 8
    {7, 5, 7, 1, 7},  // 9
    {0, 0, 0, 0, 2},  // .
}};

int glyph_index(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch == '.') return 10;
  return -1;
}

// Draws `text` in the tile whose top-left corner is (top, left), clipped to
// the tile bounds.
void draw_label(std::vector<Rgb>& px, std::size_t sheet_w, std::size_t top, std::size_t left,
                std::size_t tile_h, std::size_t tile_w, std::string_view text) {
  const std::size_t scale = std::max<std::size_t>(1, std::min(tile_h, tile_w) / 100);
  const std::size_t pad = scale;
  const std::size_t box_w = pad * 2 + text.size() * 4 * scale;
  const std::size_t box_h = pad * 2 + 5 * scale;
  const std::size_t bottom = top + tile_h;
  const std::size_t right = left + tile_w;
  auto put = [&](std::size_t n, std::size_t m, const Rgb& c) {
    if (n < bottom && m < right) px[n * sheet_w + m] = c;
  };
  for (std::size_t n = 0; n < box_h; ++n) {
    for (std::size_t m = 0; m < box_w; ++m) put(top + n, left + m, Rgb{});
  }
  const Rgb white{255.0, 255.0, 255.0};
  for (std::size_t k = 0; k < text.size(); ++k) {
    const int g = glyph_index(text[k]);
    if (g < 0) continue;
    const std::size_t gx = left + pad + k * 4 * scale;
    const std::size_t gy = top + pad;
    for (std::size_t row = 0; row < 5; ++row) {
      for (std::size_t col = 0; col < 3; ++col) {
        if (!((kGlyphs[static_cast<std::size_t>(g)][row] >> (2 - col)) & 1U)) continue;
        for (std::size_t dy = 0; dy < scale; ++dy) {
          for (std::size_t dx = 0; dx < scale; ++dx) put(gy + row * scale + dy, gx + col * scale + dx, white);
        }
      }
    }
  }
}

}  // namespace

std::string fixed4(double v) {
  std::string s = fmt::format("{:.4f}", v);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string csv_row(const MeasureRecord& r) {
  return fmt::format("{},{},{},{},{},{},{},{}", fixed4(r.alpha), fixed4(r.cr), fixed4(r.m1), fixed4(r.m2),
                     fixed4(r.m3), fixed4(r.m), fixed4(r.emec), fixed4(r.emec2));
}

std::string to_csv(std::span<const MeasureRecord> records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += csv_row(r);
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const MeasureRecord& r) {
  return {{"alpha", number_or_null(r.alpha)}, {"cr", number_or_null(r.cr)},
          {"m1", number_or_null(r.m1)},       {"m2", number_or_null(r.m2)},
          {"m3", number_or_null(r.m3)},       {"m", number_or_null(r.m)},
          {"emec", number_or_null(r.emec)},   {"emec2", number_or_null(r.emec2)}};
}

MeasureRecord record_from_json(const nlohmann::json& j) {
  MeasureRecord r;
  r.alpha = number_or_nan(j, "alpha");
  r.cr = number_or_nan(j, "cr");
  r.m1 = number_or_nan(j, "m1");
  r.m2 = number_or_nan(j, "m2");
  r.m3 = number_or_nan(j, "m3");
  r.m = number_or_nan(j, "m");
  r.emec = number_or_nan(j, "emec");
  r.emec2 = number_or_nan(j, "emec2");
  return r;
}

nlohmann::json sweep_to_json(const AlphaSweepResult& result) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : result.records) records.push_back(to_json(r));
  nlohmann::json values = nlohmann::json::array();
  for (double v : result.criterion_values) values.push_back(number_or_null(v));
  return {{"criterion", std::string(to_string(result.criterion))},
          {"best_alpha", result.best_alpha},
          {"criterion_values", values},
          {"records", records}};
}

std::vector<MeasureRecord> records_from_json(const nlohmann::json& j) {
  const nlohmann::json& arr = j.is_array() ? j : j.at("records");
  std::vector<MeasureRecord> out;
  out.reserve(arr.size());
  for (const auto& item : arr) out.push_back(record_from_json(item));
  return out;
}

SheetLayout sheet_layout(std::size_t tiles) {
  if (tiles == 0) throw std::invalid_argument("sheet_layout: no tiles");
  const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(tiles))));
  return {cols, (tiles + cols - 1) / cols};
}

ColorImage contact_sheet(const ColorImage& original, std::span<const ColorImage> variants,
                         std::span<const double> alphas) {
  if (variants.size() != alphas.size()) {
    throw std::invalid_argument("contact_sheet: one alpha per variant required");
  }
  const std::size_t th = original.height();
  const std::size_t tw = original.width();
  for (const auto& v : variants) {
    if (v.height() != th || v.width() != tw) throw std::invalid_argument("contact_sheet: tile size mismatch");
  }
  const SheetLayout layout = sheet_layout(variants.size() + 1);
  const std::size_t sheet_h = layout.rows * th;
  const std::size_t sheet_w = layout.cols * tw;
  std::vector<Rgb> px(sheet_h * sheet_w);
  for (std::size_t t = 0; t <= variants.size(); ++t) {
    const ColorImage& tile = t == 0 ? original : variants[t - 1];
    const std::size_t top = (t / layout.cols) * th;
    const std::size_t left = (t % layout.cols) * tw;
    for (std::size_t n = 0; n < th; ++n) {
      for (std::size_t m = 0; m < tw; ++m) px[(top + n) * sheet_w + left + m] = tile.at(n, m);
    }
    if (t > 0) draw_label(px, sheet_w, top, left, th, tw, alpha_label(alphas[t - 1]));
  }
  return ColorImage(sheet_h, sheet_w, std::move(px));
}

std::string alpha_label(double alpha) {
  std::string s = fmt::format("{:.9f}", alpha);
  const auto dot = s.find('.');
  while (s.size() > dot + 3 && s.back() == '0') s.pop_back();
  return s;
}

}  // namespace qcolor::report
