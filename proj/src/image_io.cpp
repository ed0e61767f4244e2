#include "qcolor/image_io.hpp"

#include <png.h>

#include <array>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

// jpeglib.h relies on FILE and size_t being declared first.
#include <jpeglib.h>

namespace qcolor {

namespace {

enum class Format { kPng, kJpeg, kUnknown };

Format sniff(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImageIoError("cannot open " + path.string());
  std::array<unsigned char, 8> head{};
  in.read(reinterpret_cast<char*>(head.data()), head.size());
  const auto got = static_cast<std::size_t>(in.gcount());
  static constexpr std::array<unsigned char, 8> kPngSig{0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
  if (got == 8 && head == kPngSig) return Format::kPng;
  if (got >= 3 && head[0] == 0xFF && head[1] == 0xD8 && head[2] == 0xFF) return Format::kJpeg;
  return Format::kUnknown;
}

DecodedImage read_png(const std::filesystem::path& path) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&image, path.c_str())) {
    std::string msg = image.message;
    png_image_free(&image);
    throw ImageIoError("cannot decode PNG " + path.string() + ": " + msg);
  }
  const bool has_alpha = (image.format & PNG_FORMAT_FLAG_ALPHA) != 0;
  // Reading RGBA keeps the colour samples untouched; RGB output would
  // composite against a background instead.
  image.format = has_alpha ? PNG_FORMAT_RGBA : PNG_FORMAT_RGB;
  const std::size_t channels = has_alpha ? 4 : 3;
  std::vector<png_byte> buffer(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
    std::string msg = image.message;
    png_image_free(&image);
    throw ImageIoError("cannot decode PNG " + path.string() + ": " + msg);
  }
  const std::size_t h = image.height;
  const std::size_t w = image.width;
  std::vector<Rgb> px(h * w);
  for (std::size_t i = 0; i < h * w; ++i) {
    const png_byte* s = &buffer[i * channels];
    px[i] = {static_cast<double>(s[0]), static_cast<double>(s[1]), static_cast<double>(s[2])};
  }
  return {ColorImage(h, w, std::move(px)), has_alpha};
}

struct JpegErrorManager {
  jpeg_error_mgr base;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->message);
  std::longjmp(err->jump, 1);
}

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};

// Kept free of objects with destructors: longjmp out of libjpeg must not
// skip any cleanup. Output goes through the caller-owned references.
bool decode_jpeg(std::FILE* file, std::vector<unsigned char>& buffer, std::size_t& h,
                 std::size_t& w, std::string& message) {
  jpeg_decompress_struct cinfo{};
  JpegErrorManager err{};
  cinfo.err = jpeg_std_error(&err.base);
  err.base.error_exit = jpeg_error_exit;
  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    message = err.message;
    return false;
  }
  jpeg_create_decompress(&cinfo);
  jpeg_stdio_src(&cinfo, file);
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);
  h = cinfo.output_height;
  w = cinfo.output_width;
  buffer.resize(h * w * 3);
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = &buffer[static_cast<std::size_t>(cinfo.output_scanline) * w * 3];
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return true;
}

DecodedImage read_jpeg(const std::filesystem::path& path) {
  std::unique_ptr<std::FILE, FileCloser> file(std::fopen(path.c_str(), "rb"));
  if (!file) throw ImageIoError("cannot open " + path.string());
  std::vector<unsigned char> buffer;
  std::size_t h = 0;
  std::size_t w = 0;
  std::string message;
  if (!decode_jpeg(file.get(), buffer, h, w, message)) {
    throw ImageIoError("cannot decode JPEG " + path.string() + ": " + message);
  }
  std::vector<Rgb> px(h * w);
  for (std::size_t i = 0; i < h * w; ++i) {
    px[i] = {static_cast<double>(buffer[3 * i]), static_cast<double>(buffer[3 * i + 1]),
             static_cast<double>(buffer[3 * i + 2])};
  }
  return {ColorImage(h, w, std::move(px)), false};
}

}  // namespace

DecodedImage read_image(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw ImageIoError("no such file: " + path.string());
  }
  switch (sniff(path)) {
    case Format::kPng:
      return read_png(path);
    case Format::kJpeg:
      return read_jpeg(path);
    case Format::kUnknown:
      break;
  }
  throw ImageIoError("unsupported image format: " + path.string());
}

unsigned char quantize_channel(double v) {
  return static_cast<unsigned char>(std::round(clamp_channel(v)));
}

void write_png(const std::filesystem::path& path, const ColorImage& img) {
  std::vector<png_byte> buffer(img.size() * 3);
  auto px = img.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) {
    buffer[3 * i] = quantize_channel(px[i].r);
    buffer[3 * i + 1] = quantize_channel(px[i].g);
    buffer[3 * i + 2] = quantize_channel(px[i].b);
  }
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width());
  image.height = static_cast<png_uint_32>(img.height());
  image.format = PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&image, path.c_str(), 0, buffer.data(), 0, nullptr)) {
    std::string msg = image.message;
    png_image_free(&image);
    throw ImageIoError("cannot write PNG " + path.string() + ": " + msg);
  }
}

}  // namespace qcolor
