#include "qcolor/palette.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcolor {

namespace {

const std::array<NamedRatio, 7>& catalog_storage() {
  static const std::array<NamedRatio, 7> catalog{{
      {"Phi", ratios::kGoldenRoot},
      {"Aesthetic", ratios::kAesthetic},
      {"Golden", ratios::kGolden},
      {"Copper", ratios::kCopper},
      {"Silver", ratios::kSilver},
      {"Bronze", ratios::kBronze},
      {"Nickel", ratios::kNickel},
  }};
  return catalog;
}

constexpr std::array<NamedRatio, 5> kArtists{{
    {"Leonardo da Vinci", 1.46},
    {"Pablo Picasso", 1.49},
    {"Vincent van Gogh", 1.38},
    {"Raphael", 1.61},
    {"Rembrandt", 1.65},
}};

Rgb unsort(const SortedTriple& t, double x, double y, double z) {
  Rgb out;
  out[t.channel[0]] = x;
  out[t.channel[1]] = y;
  out[t.channel[2]] = z;
  return out;
}

}  // namespace

std::span<const NamedRatio> ratio_catalog() { return catalog_storage(); }

std::span<const NamedRatio> artist_ratios() { return kArtists; }

NamedRatio classify_ratio(double value, std::span<const NamedRatio> catalog) {
  if (catalog.empty()) throw std::invalid_argument("classify_ratio: empty catalog");
  std::vector<NamedRatio> sorted(catalog.begin(), catalog.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const NamedRatio& a, const NamedRatio& b) { return a.value < b.value; });
  NamedRatio best = sorted.front();
  double best_dist = std::abs(value - best.value);
  for (const NamedRatio& r : sorted) {
    const double d = std::abs(value - r.value);
    if (d < best_dist - 1e-12) {
      best = r;
      best_dist = d;
    }
  }
  return best;
}

SortedTriple sort_descending(const Rgb& px) {
  SortedTriple t{{px.r, px.g, px.b}, {0, 1, 2}};
  std::stable_sort(t.channel.begin(), t.channel.end(),
                   [&px](std::size_t a, std::size_t b) { return px[a] > px[b]; });
  for (std::size_t i = 0; i < 3; ++i) t.value[i] = px[t.channel[i]];
  return t;
}

bool is_golden(const Rgb& px, double tol, double eps_floor) {
  const SortedTriple t = sort_descending(px);
  const double z = std::max(t.value[2], eps_floor);
  const double x = t.value[0] / z;
  const double y = t.value[1] / z;
  return std::abs(x - ratios::kGolden) <= tol * ratios::kGolden &&
         std::abs(y - ratios::kGoldenRoot) <= tol * ratios::kGoldenRoot;
}

Rgb cmcr_pixel(const Rgb& px) {
  const SortedTriple t = sort_descending(px);
  const double x = t.value[0];
  const double y = t.value[1];
  // y * (y / x) <= y exactly under rounding, so the order is preserved.
  const double z = x > 0.0 ? y * (y / x) : 0.0;
  return unsort(t, x, y, z);
}

Rgb cmcr_pixel(const Rgb& px, double psi_t) {
  const SortedTriple t = sort_descending(px);
  return unsort(t, t.value[0], t.value[1], clamp_channel(t.value[1] / psi_t));
}

ColorImage cmcr_self(const ColorImage& img) {
  std::vector<Rgb> out;
  out.reserve(img.size());
  for (const Rgb& px : img.pixels()) out.push_back(cmcr_pixel(px));
  return ColorImage(img.height(), img.width(), std::move(out));
}

ColorImage cmcr_target(const ColorImage& img, double psi_t) {
  if (!(psi_t >= 1.0) || !std::isfinite(psi_t)) {
    throw std::invalid_argument("cmcr_target: target ratio must be a finite value >= 1");
  }
  std::vector<Rgb> out;
  out.reserve(img.size());
  for (const Rgb& px : img.pixels()) out.push_back(cmcr_pixel(px, psi_t));
  return ColorImage(img.height(), img.width(), std::move(out));
}

double artist_ratio(std::span<const ColorImage> images, const MeasureConfig& cfg) {
  if (images.empty()) throw std::invalid_argument("artist_ratio: empty collection");
  double acc = 0.0;
  for (const ColorImage& img : images) acc += cr(img, cfg);
  return acc / static_cast<double>(images.size());
}

}  // namespace qcolor
