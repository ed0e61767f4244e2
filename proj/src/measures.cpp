#include "qcolor/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "qcolor/palette.hpp"

namespace qcolor {

namespace {

// Mean taken relative to the first element: exact for constant input, which
// keeps the degenerate cases (M1..M3 = 0, CR = 1) exact.
template <typename Range>
double shifted_mean(const Range& values) {
  const auto n = static_cast<double>(std::size(values));
  const double ref = *std::begin(values);
  double acc = 0.0;
  for (double v : values) acc += v - ref;
  return ref + acc / n;
}

template <std::size_t K, typename Image, typename Components>
double block_measure(const Image& img, const MeasureConfig& cfg, Components components) {
  cfg.validate();
  const std::size_t L = cfg.block_size;
  const std::size_t k1 = img.height() / L;
  const std::size_t k2 = img.width() / L;
  if (k1 == 0 || k2 == 0) {
    throw std::invalid_argument("block measure: image smaller than one block");
  }
  double total = 0.0;
  for (std::size_t bk = 0; bk < k1; ++bk) {
    for (std::size_t bl = 0; bl < k2; ++bl) {
      double hi = -std::numeric_limits<double>::infinity();
      double lo = std::numeric_limits<double>::infinity();
      for (std::size_t n = bk * L; n < (bk + 1) * L; ++n) {
        for (std::size_t m = bl * L; m < (bl + 1) * L; ++m) {
          const std::array<double, K> c = components(img.at(n, m));
          for (double v : c) {
            hi = std::max(hi, v);
            lo = std::min(lo, v);
          }
        }
      }
      total += 20.0 * std::log10((hi + cfg.eps_block) / (lo + cfg.eps_block));
    }
  }
  return total / static_cast<double>(k1 * k2);
}

struct ChannelLogs {
  std::array<std::vector<double>, 3> logs;
  std::array<double, 3> log_mean{};
};

ChannelLogs channel_logs(const ColorImage& img, const MeasureConfig& cfg) {
  cfg.validate();
  ChannelLogs out;
  auto px = img.pixels();
  std::vector<double> floored(px.size());
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t i = 0; i < px.size(); ++i) floored[i] = std::max(px[i][c], cfg.eps_log);
    out.log_mean[c] = std::log10(shifted_mean(floored));
    out.logs[c].resize(px.size());
    for (std::size_t i = 0; i < px.size(); ++i) out.logs[c][i] = std::log10(floored[i]);
  }
  return out;
}

double log_ratio_mean(const ChannelLogs& cl, std::size_t num, std::size_t den, double eps) {
  const auto& a = cl.logs[num];
  const auto& b = cl.logs[den];
  std::vector<double> terms(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    terms[i] = (a[i] - cl.log_mean[num]) / (b[i] - cl.log_mean[den] + eps);
  }
  return shifted_mean(terms);
}

constexpr std::size_t kR = 0;
constexpr std::size_t kG = 1;
constexpr std::size_t kB = 2;

}  // namespace

void MeasureConfig::validate() const {
  if (block_size < 1) throw std::invalid_argument("block size must be >= 1");
  if (!(eps_denominator > 0.0 && eps_log > 0.0 && eps_block > 0.0 && eps_cr > 0.0)) {
    throw std::invalid_argument("measure epsilons must be > 0");
  }
}

double emec(const ColorImage& img, const MeasureConfig& cfg) {
  return block_measure<3>(img, cfg, [](const Rgb& p) { return std::array{p.r, p.g, p.b}; });
}

double emeq(const QuaternionImage& img, const MeasureConfig& cfg) {
  return block_measure<4>(img, cfg, [](const Quaternion& q) { return std::array{q.w, q.x, q.y, q.z}; });
}

double m1(const ColorImage& img, const MeasureConfig& cfg) {
  return log_ratio_mean(channel_logs(img, cfg), kR, kB, cfg.eps_denominator);
}

double m2(const ColorImage& img, const MeasureConfig& cfg) {
  return log_ratio_mean(channel_logs(img, cfg), kG, kB, cfg.eps_denominator);
}

double m3(const ColorImage& img, const MeasureConfig& cfg) {
  return log_ratio_mean(channel_logs(img, cfg), kB, kR, cfg.eps_denominator);
}

double m_geo(double a, double b, double c) { return std::cbrt(a * b * c); }

double pixel_ratio(const Rgb& px, double eps) {
  const auto t = sort_descending(px);
  return (t.value[0] + eps) / (t.value[1] + eps);
}

double cr(const ColorImage& img, const MeasureConfig& cfg) {
  cfg.validate();
  auto px = img.pixels();
  std::vector<double> psi(px.size());
  for (std::size_t i = 0; i < px.size(); ++i) psi[i] = pixel_ratio(px[i], cfg.eps_cr);
  return shifted_mean(psi);
}

double emec2(const ColorImage& img, const MeasureConfig& cfg) {
  return emec(cmcr_target(img, cr(img, cfg)), cfg);
}

MeasureRecord measure_record(const ColorImage& img, double alpha, const MeasureConfig& cfg) {
  cfg.validate();
  MeasureRecord rec;
  rec.alpha = alpha;
  rec.cr = cr(img, cfg);
  const ChannelLogs cl = channel_logs(img, cfg);
  rec.m1 = log_ratio_mean(cl, kR, kB, cfg.eps_denominator);
  rec.m2 = log_ratio_mean(cl, kG, kB, cfg.eps_denominator);
  rec.m3 = log_ratio_mean(cl, kB, kR, cfg.eps_denominator);
  rec.m = m_geo(rec.m1, rec.m2, rec.m3);
  rec.emec = emec(img, cfg);
  rec.emec2 = emec(cmcr_target(img, rec.cr), cfg);
  return rec;
}

}  // namespace qcolor
