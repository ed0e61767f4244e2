#include "qcolor/image.hpp"

#include <algorithm>
#include <cmath>

namespace qcolor {

namespace {

void check_pixel(const Rgb& px) {
  for (std::size_t c = 0; c < 3; ++c) {
    const double v = px[c];
    if (!(v >= 0.0 && v <= kChannelMax)) {
      throw std::invalid_argument("ColorImage: channel value outside [0, 255]");
    }
  }
}

}  // namespace

ColorImage::ColorImage(std::size_t height, std::size_t width, Rgb fill)
    : grid_(height, width, fill) {
  check_pixel(fill);
}

ColorImage::ColorImage(std::size_t height, std::size_t width, std::vector<Rgb> pixels)
    : grid_(height, width, std::move(pixels)) {
  for (const Rgb& px : grid_.data()) check_pixel(px);
}

void ColorImage::set(std::size_t n, std::size_t m, const Rgb& px) {
  check_pixel(px);
  grid_.at(n, m) = px;
}

std::string_view to_string(RealMode mode) {
  switch (mode) {
    case RealMode::kBrightness:
      return "brightness";
    case RealMode::kZero:
      return "zero";
    case RealMode::kGrayMean:
      return "gray_mean";
  }
  return "brightness";
}

std::optional<RealMode> parse_real_mode(std::string_view text) {
  if (text == "brightness") return RealMode::kBrightness;
  if (text == "zero") return RealMode::kZero;
  if (text == "gray_mean" || text == "gray-mean") return RealMode::kGrayMean;
  return std::nullopt;
}

double brightness(const Rgb& px) { return 0.3 * px.r + 0.59 * px.g + 0.11 * px.b; }

QuaternionImage to_quaternion(const ColorImage& img, RealMode mode) {
  QuaternionImage out(img.height(), img.width());
  auto dst = out.data();
  auto src = img.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const Rgb& px = src[i];
    double a = 0.0;
    switch (mode) {
      case RealMode::kBrightness:
        a = brightness(px);
        break;
      case RealMode::kZero:
        a = 0.0;
        break;
      case RealMode::kGrayMean:
        a = (px.r + px.g + px.b) / 3.0;
        break;
    }
    dst[i] = {a, px.r, px.g, px.b};
  }
  return out;
}

double clamp_channel(double v) {
  if (!std::isfinite(v)) return v > 0.0 ? kChannelMax : 0.0;
  return std::clamp(v, 0.0, kChannelMax);
}

ColorImage from_quaternion(const QuaternionImage& qimg) {
  std::vector<Rgb> px;
  px.reserve(qimg.size());
  for (const Quaternion& q : qimg.data()) {
    px.push_back({clamp_channel(q.x), clamp_channel(q.y), clamp_channel(q.z)});
  }
  return ColorImage(qimg.height(), qimg.width(), std::move(px));
}

}  // namespace qcolor
