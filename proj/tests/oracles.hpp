#pragma once

// Reference evaluations used only by the tests. Each one follows the defining
// formula term by term and shares no code path with the library beyond
// qmul/unit_kernel.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qcolor/image.hpp"
#include "qcolor/quaternion.hpp"

namespace qcolor::oracle {

inline Grid<Quaternion> qdft_forward(const Grid<Quaternion>& f) {
  const std::size_t N = f.height();
  const std::size_t M = f.width();
  Grid<Quaternion> out(N, M);
  for (std::size_t p = 0; p < N; ++p) {
    for (std::size_t s = 0; s < M; ++s) {
      Quaternion outer{};
      for (std::size_t n = 0; n < N; ++n) {
        Quaternion inner{};
        for (std::size_t m = 0; m < M; ++m) {
          const double th = 2.0 * std::numbers::pi * double(m) * double(s) / double(M);
          inner = inner + qmul(f.at(n, m), unit_kernel(kK, th));
        }
        const double th = 2.0 * std::numbers::pi * double(n) * double(p) / double(N);
        outer = outer + qmul(inner, unit_kernel(kJ, th));
      }
      out.at(p, s) = outer;
    }
  }
  return out;
}

inline Grid<Quaternion> qdft_inverse(const Grid<Quaternion>& F) {
  const std::size_t N = F.height();
  const std::size_t M = F.width();
  Grid<Quaternion> out(N, M);
  for (std::size_t n = 0; n < N; ++n) {
    for (std::size_t m = 0; m < M; ++m) {
      Quaternion outer{};
      for (std::size_t s = 0; s < M; ++s) {
        Quaternion inner{};
        for (std::size_t p = 0; p < N; ++p) {
          const double th = -2.0 * std::numbers::pi * double(n) * double(p) / double(N);
          inner = inner + qmul(F.at(p, s), unit_kernel(kJ, th));
        }
        const double th = -2.0 * std::numbers::pi * double(m) * double(s) / double(M);
        outer = outer + qmul(inner, unit_kernel(kK, th));
      }
      out.at(n, m) = qscale(outer, 1.0 / double(N * M));
    }
  }
  return out;
}

inline double emec(const ColorImage& img, std::size_t L = 7, double eps = 0.001) {
  const std::size_t k1 = img.height() / L;
  const std::size_t k2 = img.width() / L;
  double sum = 0.0;
  for (std::size_t a = 0; a < k1; ++a) {
    for (std::size_t b = 0; b < k2; ++b) {
      std::vector<double> v;
      for (std::size_t n = a * L; n < (a + 1) * L; ++n) {
        for (std::size_t m = b * L; m < (b + 1) * L; ++m) {
          v.push_back(img.at(n, m).r);
          v.push_back(img.at(n, m).g);
          v.push_back(img.at(n, m).b);
        }
      }
      const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
      sum += 20.0 * std::log10((*hi + eps) / (*lo + eps));
    }
  }
  return sum / double(k1 * k2);
}

// Channel a over channel b, with the floor applied before every log.
inline double log_ratio(const ColorImage& img, int a, int b, double eps = 0.001, double floor = 0.1) {
  auto chan = [&](const Rgb& p, int c) { return std::max(c == 0 ? p.r : (c == 1 ? p.g : p.b), floor); };
  double mean_a = 0.0;
  double mean_b = 0.0;
  for (const Rgb& p : img.pixels()) {
    mean_a += chan(p, a);
    mean_b += chan(p, b);
  }
  mean_a /= double(img.size());
  mean_b /= double(img.size());
  double sum = 0.0;
  for (const Rgb& p : img.pixels()) {
    sum += (std::log10(chan(p, a)) - std::log10(mean_a)) / (std::log10(chan(p, b)) - std::log10(mean_b) + eps);
  }
  return sum / double(img.size());
}

inline double cr(const ColorImage& img, double eps = 0.001) {
  double sum = 0.0;
  for (const Rgb& p : img.pixels()) {
    std::array<double, 3> v{p.r, p.g, p.b};
    std::sort(v.begin(), v.end(), std::greater<>());
    sum += (v[0] + eps) / (v[1] + eps);
  }
  return sum / double(img.size());
}

inline ColorImage random_image(std::size_t h, std::size_t w, std::mt19937_64& rng, double lo = 0.0,
                               double hi = 255.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<Rgb> px(h * w);
  for (auto& p : px) p = {d(rng), d(rng), d(rng)};
  return ColorImage(h, w, std::move(px));
}

inline QuaternionImage random_quaternions(std::size_t h, std::size_t w, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(0.0, 255.0);
  QuaternionImage q(h, w);
  for (auto& v : q.data()) v = {d(rng), d(rng), d(rng), d(rng)};
  return q;
}

inline double max_abs_diff(const Grid<Quaternion>& a, const Grid<Quaternion>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Quaternion d = a.data()[i] - b.data()[i];
    worst = std::max({worst, std::abs(d.w), std::abs(d.x), std::abs(d.y), std::abs(d.z)});
  }
  return worst;
}

inline double max_modulus(const Grid<Quaternion>& a) {
  double worst = 0.0;
  for (const auto& q : a.data()) worst = std::max(worst, qmod(q));
  return worst;
}

// The five measure fixtures (integer-valued, <= 14 x 14).
inline ColorImage measure_fixture(int which) {
  auto build = [](std::size_t h, std::size_t w, auto fn) {
    std::vector<Rgb> px;
    for (std::size_t n = 0; n < h; ++n) {
      for (std::size_t m = 0; m < w; ++m) px.push_back(fn(double(n), double(m), n, m));
    }
    return ColorImage(h, w, std::move(px));
  };
  switch (which) {
    case 1:
      return build(7, 7, [](double n, double m, auto, auto) {
        return Rgb{10 + 5 * n + m, 100, 200 - 3 * m - n};
      });
    case 2:
      return build(14, 7, [](double n, double m, std::size_t ni, auto) {
        return ni < 7 ? Rgb{50, 60, 70} : Rgb{20 * (n - 7) + m, 30, 90 + 10 * m};
      });
    case 3:
      return build(14, 14, [](double, double, std::size_t ni, std::size_t mi) {
        return (ni + mi) % 2 == 0 ? Rgb{255, 0, 128} : Rgb{0, 255, 64};
      });
    case 4:
      return build(10, 9, [](double, double, std::size_t n, std::size_t m) {
        return Rgb{double((n * 37 + m * 11) % 256), double((n * 13 + m * 29) % 256),
                   double((n * 7 + m * 53) % 256)};
      });
    default:
      return build(7, 14, [](double n, double m, std::size_t ni, std::size_t mi) {
        return Rgb{3 + 18 * m, 5 + 35 * n, double((mi * ni) % 200 + 1)};
      });
  }
}

}  // namespace qcolor::oracle
