#pragma once

#include <array>
#include <cmath>
#include <span>
#include <string_view>
#include <vector>

#include "qcolor/image.hpp"
#include "qcolor/measures.hpp"

namespace qcolor {

struct NamedRatio {
  std::string_view name;
  double value;
};

namespace ratios {

// Golden ratio: the positive root of x^2 - x - 1.
inline const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;
inline const double kGoldenRoot = std::sqrt(kGolden);  // 1.2720...
inline constexpr double kAesthetic = 1.322;
inline const double kSilver = 1.0 + std::sqrt(2.0);
inline constexpr double kCopper = 2.0;
inline const double kBronze = (3.0 + std::sqrt(13.0)) / 2.0;
// 1 + sqrt(13) = 4.6056. The value 5.6055 sometimes quoted next to this
// formula does not match it; the formula wins.
inline const double kNickel = 1.0 + std::sqrt(13.0);

}  // namespace ratios

/// Named proportion constants, ascending by value.
std::span<const NamedRatio> ratio_catalog();

/// Published per-artist colour-ratio estimates.
std::span<const NamedRatio> artist_ratios();

/// Nearest catalog entry by absolute difference. Distances equal within
/// 1e-12 count as a tie and resolve to the smaller constant.
NamedRatio classify_ratio(double value, std::span<const NamedRatio> catalog = ratio_catalog());

/// Channels of one pixel in descending order. Equal values keep the
/// channel priority r, g, b. channel[i] is the source index of value[i].
struct SortedTriple {
  std::array<double, 3> value;
  std::array<std::size_t, 3> channel;
};

SortedTriple sort_descending(const Rgb& px);

/// True iff the sorted triple, divided by its smallest value (floored at
/// eps_floor), matches (Psi, sqrt(Psi), 1) within relative tolerance tol.
bool is_golden(const Rgb& px, double tol, double eps_floor = 0.001);

/// Keeps the two largest channels and replaces the smallest by y^2 / x,
/// so the sorted triple becomes a geometric progression x/y = y/z.
Rgb cmcr_pixel(const Rgb& px);

/// Keeps the two largest channels and sets the smallest to y / psi_t,
/// clamped to [0, 255].
Rgb cmcr_pixel(const Rgb& px, double psi_t);

ColorImage cmcr_self(const ColorImage& img);

/// Throws std::invalid_argument unless psi_t >= 1.
ColorImage cmcr_target(const ColorImage& img, double psi_t);

/// Arithmetic mean of cr over a non-empty collection.
double artist_ratio(std::span<const ColorImage> images, const MeasureConfig& cfg = {});

}  // namespace qcolor
