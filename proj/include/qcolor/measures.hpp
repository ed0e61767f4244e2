#pragma once

#include "qcolor/image.hpp"

namespace qcolor {

struct MeasureConfig {
  std::size_t block_size = 7;     // L
  double eps_denominator = 0.001; // added to the denominators of M1..M3
  double eps_log = 0.1;           // channel floor before every log10
  double eps_block = 0.001;       // (max + eps) / (min + eps) in EMEC/EMEQ
  double eps_cr = 0.001;          // (x + eps) / (y + eps) in CR

  /// Throws std::invalid_argument unless every epsilon is > 0 and L >= 1.
  void validate() const;
};

/// One row of a measure table.
struct MeasureRecord {
  double alpha = 1.0;
  double cr = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m = 0.0;
  double emec = 0.0;
  double emec2 = 0.0;

  bool operator==(const MeasureRecord&) const = default;
};

/// Mean over the floor(N/L) x floor(M/L) full blocks of
/// 20 log10((max + eps) / (min + eps)), extremes taken over r, g, b.
/// Trailing partial rows and columns are ignored. Throws
/// std::invalid_argument if the image holds no full block.
double emec(const ColorImage& img, const MeasureConfig& cfg = {});

/// As emec, with the extremes over all four quaternion components.
double emeq(const QuaternionImage& img, const MeasureConfig& cfg = {});

// Pixelwise mean of (log c_a - log Mean[c_a]) / (log c_b - log Mean[c_b] + eps)
double m1(const ColorImage& img, const MeasureConfig& cfg = {});  // red / blue
double m2(const ColorImage& img, const MeasureConfig& cfg = {});  // green / blue
double m3(const ColorImage& img, const MeasureConfig& cfg = {});  // blue / red

/// Sign-preserving cube root of m1 * m2 * m3.
double m_geo(double a, double b, double c);

/// Per-pixel colour ratio: largest over middle channel, both offset by eps.
double pixel_ratio(const Rgb& px, double eps);

/// Image mean of pixel_ratio. Always >= 1.
double cr(const ColorImage& img, const MeasureConfig& cfg = {});

/// EMEC after cmcr_target(img, cr(img)).
double emec2(const ColorImage& img, const MeasureConfig& cfg = {});

/// All measures of one image; M1..M3 share one pass over the channel logs.
MeasureRecord measure_record(const ColorImage& img, double alpha = 1.0, const MeasureConfig& cfg = {});

}  // namespace qcolor
