#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcolor/quaternion.hpp"

namespace qcolor {

/// Row-major N x M grid. Row index n in [0, height), column index m in [0, width).
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t height, std::size_t width, T fill = T{})
      : height_(height), width_(width), data_(checked_size(height, width), fill) {}
  Grid(std::size_t height, std::size_t width, std::vector<T> data)
      : height_(height), width_(width), data_(std::move(data)) {
    if (data_.size() != checked_size(height, width)) {
      throw std::invalid_argument("Grid: data size does not match dimensions");
    }
  }

  std::size_t height() const { return height_; }
  std::size_t width() const { return width_; }
  std::size_t size() const { return data_.size(); }

  const T& at(std::size_t n, std::size_t m) const { return data_[n * width_ + m]; }
  T& at(std::size_t n, std::size_t m) { return data_[n * width_ + m]; }

  std::span<const T> data() const { return data_; }
  std::span<T> data() { return data_; }

  bool operator==(const Grid&) const = default;

 private:
  static std::size_t checked_size(std::size_t height, std::size_t width) {
    if (height == 0 || width == 0) throw std::invalid_argument("Grid: dimensions must be positive");
    return height * width;
  }

  std::size_t height_ = 0;
  std::size_t width_ = 0;
  std::vector<T> data_;
};

struct Rgb {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;

  double operator[](std::size_t c) const { return c == 0 ? r : (c == 1 ? g : b); }
  double& operator[](std::size_t c) { return c == 0 ? r : (c == 1 ? g : b); }
  bool operator==(const Rgb&) const = default;
};

inline constexpr double kChannelMax = 255.0;

/// RGB image on the 0..255 scale, stored as reals. Every channel value is
/// kept inside [0, 255]; out-of-range input is rejected, not clamped.
class ColorImage {
 public:
  ColorImage(std::size_t height, std::size_t width, Rgb fill = {});
  ColorImage(std::size_t height, std::size_t width, std::vector<Rgb> pixels);

  std::size_t height() const { return grid_.height(); }
  std::size_t width() const { return grid_.width(); }
  std::size_t size() const { return grid_.size(); }

  const Rgb& at(std::size_t n, std::size_t m) const { return grid_.at(n, m); }
  void set(std::size_t n, std::size_t m, const Rgb& px);

  std::span<const Rgb> pixels() const { return grid_.data(); }

  bool operator==(const ColorImage&) const = default;

 private:
  Grid<Rgb> grid_;
};

class QuaternionImage : public Grid<Quaternion> {
 public:
  using Grid<Quaternion>::Grid;
};

/// Choice of scalar part when embedding RGB into quaternions.
enum class RealMode {
  kBrightness,  // 0.3 r + 0.59 g + 0.11 b
  kZero,
  kGrayMean,  // (r + g + b) / 3
};

std::string_view to_string(RealMode mode);
std::optional<RealMode> parse_real_mode(std::string_view text);

double brightness(const Rgb& px);

/// f(n,m) = a + r i + g j + b k.
QuaternionImage to_quaternion(const ColorImage& img, RealMode mode = RealMode::kBrightness);

/// Drops the scalar part and clamps the i, j, k parts to [0, 255].
/// NaN components map to 0.
ColorImage from_quaternion(const QuaternionImage& qimg);

double clamp_channel(double v);

}  // namespace qcolor
