#include <gtest/gtest.h>

#include <jpeglib.h>
#include <png.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "qcolor/image.hpp"
#include "qcolor/image_io.hpp"

namespace qcolor {
namespace {

namespace fs = std::filesystem;

fs::path temp_dir() {
  fs::path d = fs::temp_directory_path() / "qcolor_image_tests";
  fs::create_directories(d);
  return d;
}

TEST(ColorImage, RejectsOutOfRangeAndEmpty) {
  EXPECT_THROW(ColorImage(0, 3), std::invalid_argument);
  EXPECT_THROW(ColorImage(3, 0), std::invalid_argument);
  EXPECT_THROW(ColorImage(1, 1, Rgb{256, 0, 0}), std::invalid_argument);
  EXPECT_THROW(ColorImage(1, 1, Rgb{0, -0.5, 0}), std::invalid_argument);
  EXPECT_THROW(ColorImage(1, 2, std::vector<Rgb>{{1, 2, 3}}), std::invalid_argument);
  ColorImage img(2, 2);
  EXPECT_THROW(img.set(0, 0, {0, 0, std::nan("")}), std::invalid_argument);
  img.set(1, 0, {1, 2, 3});
  EXPECT_EQ(img.at(1, 0), (Rgb{1, 2, 3}));
}

TEST(ToQuaternion, BrightnessPart) {
  ColorImage img(1, 3);
  img.set(0, 0, {100, 100, 100});
  img.set(0, 1, {255, 0, 0});
  img.set(0, 2, {10, 20, 30});
  const auto q = to_quaternion(img);
  EXPECT_NEAR(q.at(0, 0).w, 100.0, 1e-12);
  EXPECT_NEAR(q.at(0, 1).w, 76.5, 1e-12);
  EXPECT_NEAR(q.at(0, 2).w, 18.1, 1e-12);
  EXPECT_EQ(q.at(0, 2).x, 10.0);
  EXPECT_EQ(q.at(0, 2).y, 20.0);
  EXPECT_EQ(q.at(0, 2).z, 30.0);
}

TEST(ToQuaternion, OtherModes) {
  ColorImage img(1, 1, Rgb{10, 20, 60});
  EXPECT_EQ(to_quaternion(img, RealMode::kZero).at(0, 0).w, 0.0);
  EXPECT_NEAR(to_quaternion(img, RealMode::kGrayMean).at(0, 0).w, 30.0, 1e-12);
  EXPECT_EQ(parse_real_mode("gray_mean"), RealMode::kGrayMean);
  EXPECT_FALSE(parse_real_mode("luma").has_value());
}

TEST(FromQuaternion, RoundTripIsIdentityForAllModes) {
  std::mt19937_64 rng(11);
  const ColorImage img = oracle::random_image(9, 5, rng);
  for (RealMode mode : {RealMode::kBrightness, RealMode::kZero, RealMode::kGrayMean}) {
    EXPECT_EQ(from_quaternion(to_quaternion(img, mode)), img);
  }
}

TEST(FromQuaternion, BrightnessInvariantOfEmbedding) {
  std::mt19937_64 rng(12);
  const ColorImage img = oracle::random_image(6, 6, rng);
  const auto q = to_quaternion(img);
  for (const auto& v : q.data()) EXPECT_NEAR(v.w, 0.3 * v.x + 0.59 * v.y + 0.11 * v.z, 1e-9);
}

TEST(FromQuaternion, Clamps) {
  QuaternionImage q(1, 2);
  q.at(0, 0) = {0, -3.2, 260.0, 17.5};
  q.at(0, 1) = {0, std::nan(""), std::numeric_limits<double>::infinity(), -1e300};
  const ColorImage img = from_quaternion(q);
  EXPECT_EQ(img.at(0, 0), (Rgb{0, 255, 17.5}));
  EXPECT_EQ(img.at(0, 1), (Rgb{0, 255, 0}));
}

TEST(FromQuaternion, ArbitraryFiniteInputGivesValidImage) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> d(-1e6, 1e6);
  QuaternionImage q(8, 8);
  for (auto& v : q.data()) v = {d(rng), d(rng), d(rng), d(rng)};
  const ColorImage img = from_quaternion(q);  // would throw on an invalid channel
  for (const auto& p : img.pixels()) {
    for (std::size_t c = 0; c < 3; ++c) {
      EXPECT_GE(p[c], 0.0);
      EXPECT_LE(p[c], 255.0);
    }
  }
}

TEST(ImageIo, QuantizeRoundsHalfAwayFromZero) {
  EXPECT_EQ(quantize_channel(0.5), 1);
  EXPECT_EQ(quantize_channel(1.49), 1);
  EXPECT_EQ(quantize_channel(254.5), 255);
  EXPECT_EQ(quantize_channel(-4.0), 0);
  EXPECT_EQ(quantize_channel(300.0), 255);
}

TEST(ImageIo, PngRoundTripOfIntegerImage) {
  std::vector<Rgb> px;
  for (int i = 0; i < 12; ++i) px.push_back({double(i * 20), double(255 - i * 7), double(i)});
  const ColorImage img(3, 4, px);
  const fs::path p = temp_dir() / "roundtrip.png";
  write_png(p, img);
  const DecodedImage d = read_image(p);
  EXPECT_FALSE(d.alpha_dropped);
  EXPECT_EQ(d.image, img);
}

TEST(ImageIo, PngAlphaIsDropped) {
  const fs::path p = temp_dir() / "alpha.png";
  const std::vector<png_byte> rgba{10, 20, 30, 0, 40, 50, 60, 128};
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  image.width = 2;
  image.height = 1;
  image.format = PNG_FORMAT_RGBA;
  ASSERT_TRUE(png_image_write_to_file(&image, p.c_str(), 0, rgba.data(), 0, nullptr));
  const DecodedImage d = read_image(p);
  EXPECT_TRUE(d.alpha_dropped);
  EXPECT_EQ(d.image.at(0, 0), (Rgb{10, 20, 30}));
  EXPECT_EQ(d.image.at(0, 1), (Rgb{40, 50, 60}));
}

TEST(ImageIo, JpegDecodes) {
  const fs::path p = temp_dir() / "flat.jpg";
  {
    std::FILE* f = std::fopen(p.c_str(), "wb");
    ASSERT_NE(f, nullptr);
    jpeg_compress_struct cinfo{};
    jpeg_error_mgr jerr{};
    cinfo.err = jpeg_std_error(&jerr);
    jpeg_create_compress(&cinfo);
    jpeg_stdio_dest(&cinfo, f);
    cinfo.image_width = 16;
    cinfo.image_height = 8;
    cinfo.input_components = 3;
    cinfo.in_color_space = JCS_RGB;
    jpeg_set_defaults(&cinfo);
    jpeg_set_quality(&cinfo, 100, TRUE);
    jpeg_start_compress(&cinfo, TRUE);
    std::vector<unsigned char> row(16 * 3);
    for (int i = 0; i < 16; ++i) {
      row[3 * i] = 200;
      row[3 * i + 1] = 120;
      row[3 * i + 2] = 40;
    }
    while (cinfo.next_scanline < cinfo.image_height) {
      JSAMPROW r = row.data();
      jpeg_write_scanlines(&cinfo, &r, 1);
    }
    jpeg_finish_compress(&cinfo);
    jpeg_destroy_compress(&cinfo);
    std::fclose(f);
  }
  const DecodedImage d = read_image(p);
  EXPECT_EQ(d.image.height(), 8u);
  EXPECT_EQ(d.image.width(), 16u);
  // Lossy codec: a flat colour comes back within a few levels.
  EXPECT_NEAR(d.image.at(4, 8).r, 200, 3);
  EXPECT_NEAR(d.image.at(4, 8).g, 120, 3);
  EXPECT_NEAR(d.image.at(4, 8).b, 40, 3);
}

TEST(ImageIo, Errors) {
  EXPECT_THROW(read_image(temp_dir() / "does_not_exist.png"), ImageIoError);
  const fs::path junk = temp_dir() / "junk.png";
  std::ofstream(junk) << "not an image";
  EXPECT_THROW(read_image(junk), ImageIoError);
  const fs::path truncated = temp_dir() / "truncated.jpg";
  std::ofstream(truncated, std::ios::binary) << "\xFF\xD8\xFF\xE0";
  EXPECT_THROW(read_image(truncated), ImageIoError);
}

}  // namespace
}  // namespace qcolor
