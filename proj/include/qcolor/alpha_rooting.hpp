#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qcolor/image.hpp"
#include "qcolor/measures.hpp"
#include "qcolor/qdft.hpp"

namespace qcolor {

/// Thrown when a computation yields no usable number (e.g. every criterion
/// value of a sweep is NaN).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficients at or below this modulus are left unscaled.
inline constexpr double kZeroMagnitude = 1e-12;

/// G(p,s) = |F(p,s)|^(alpha-1) F(p,s), so that |G| = |F|^alpha.
/// Throws std::invalid_argument unless 0 < alpha <= 1.
QSpectrum root_magnitudes(const QSpectrum& spectrum, double alpha);

/// Inverse transform of the rooted spectrum, before any clamping.
QuaternionImage alpha_root_quaternion(const QSpectrum& spectrum, double alpha);

/// forward -> root magnitudes -> inverse -> clamp to [0, 255].
ColorImage alpha_root(const ColorImage& img, double alpha, RealMode mode = RealMode::kBrightness);

/// Inclusive alpha grid lo, lo + step, ..., hi.
struct AlphaGrid {
  double lo = 0.80;
  double hi = 1.00;
  double step = 0.02;

  /// Throws std::invalid_argument unless 0 < lo <= hi <= 1 and step > 0.
  std::vector<double> values() const;

  /// Parses "LO:STEP:HI".
  static std::optional<AlphaGrid> parse(std::string_view text);
};

/// Grid used for measure tables: 0.80 to 1.00 by 0.02 (11 points).
inline constexpr AlphaGrid kTableGrid{0.80, 1.00, 0.02};
/// Grid used for best-alpha search: 0.70 to 1.00 by 0.01 (31 points).
inline constexpr AlphaGrid kSearchGrid{0.70, 1.00, 0.01};

enum class Criterion { kEmeq, kEmec, kCr, kM };

std::string_view to_string(Criterion c);
std::optional<Criterion> parse_criterion(std::string_view text);

struct AlphaSweepResult {
  std::vector<MeasureRecord> records;   // ascending alpha
  std::vector<double> criterion_values; // parallel to records
  Criterion criterion = Criterion::kCr;
  std::size_t best_index = 0;
  double best_alpha = 1.0;
};

struct SweepOptions {
  Criterion criterion = Criterion::kCr;
  RealMode real_mode = RealMode::kBrightness;
  MeasureConfig measures{};
  std::size_t workers = 1;
};

/// Index of the largest value; values within 1e-9 (relative to max(1, |max|))
/// of the maximum tie, and ties go to the larger alpha (higher index).
/// NaN entries are skipped. Throws NumericError if all are NaN.
std::size_t select_best(const std::vector<double>& values);

/// Measures every alpha of the list (strictly increasing, each in (0, 1]).
/// The forward transform is computed once and shared by all alphas.
AlphaSweepResult sweep(const ColorImage& img, const std::vector<double>& alphas, const SweepOptions& opts = {});

inline AlphaSweepResult sweep(const ColorImage& img, const AlphaGrid& grid, const SweepOptions& opts = {}) {
  return sweep(img, grid.values(), opts);
}

/// The value a criterion reads from a record; EMEQ is not part of the record
/// and needs the quaternion image.
double criterion_value(Criterion c, const MeasureRecord& rec, const QuaternionImage& rooted,
                       const MeasureConfig& cfg);

/// Clamps all four components to [0, 255]; used before EMEQ so the block
/// ratios stay positive.
QuaternionImage clamp_components(const QuaternionImage& img);

}  // namespace qcolor
