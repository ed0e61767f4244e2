#pragma once

#include <filesystem>
#include <stdexcept>

#include "qcolor/image.hpp"

namespace qcolor {

class ImageIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DecodedImage {
  ColorImage image;
  bool alpha_dropped = false;
};

/// Decodes an 8-bit PNG or JPEG file (format sniffed from the header bytes).
/// Gray and palette images are expanded to RGB; an alpha channel is dropped
/// and reported through DecodedImage::alpha_dropped.
DecodedImage read_image(const std::filesystem::path& path);

/// Encodes an 8-bit RGB PNG. Channels are rounded half away from zero.
void write_png(const std::filesystem::path& path, const ColorImage& img);

/// Round half away from zero after clamping to [0, 255].
unsigned char quantize_channel(double v);

}  // namespace qcolor
