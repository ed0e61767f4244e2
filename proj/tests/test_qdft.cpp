#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qcolor/qdft.hpp"

namespace qcolor {
namespace {

double tol_for(const Grid<Quaternion>& g) { return 1e-9 * std::max(1.0, oracle::max_modulus(g)); }

TEST(Qdft, NaiveMatchesTermByTermOracle) {
  std::mt19937_64 rng(21);
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{3, 4}, {5, 7}, {1, 6}, {4, 1}}) {
    const auto f = oracle::random_quaternions(n, m, rng);
    const auto expected = oracle::qdft_forward(f);
    EXPECT_LE(oracle::max_abs_diff(forward_naive(f), expected), tol_for(expected)) << n << "x" << m;
    const auto back = oracle::qdft_inverse(expected);
    EXPECT_LE(oracle::max_abs_diff(inverse_naive(QSpectrum(n, m, std::vector(expected.data().begin(),
                                                                              expected.data().end()))),
                                   back),
              tol_for(back));
  }
}

TEST(Qdft, FastMatchesNaiveForAllSmallSizes) {
  std::mt19937_64 rng(22);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t m = 1; m <= 8; ++m) {
      const auto f = oracle::random_quaternions(n, m, rng);
      const QSpectrum slow = forward_naive(f);
      const QSpectrum fast = forward_fast(f);
      EXPECT_LE(oracle::max_abs_diff(fast, slow), tol_for(slow)) << n << "x" << m;
      EXPECT_LE(oracle::max_abs_diff(inverse_fast(slow), inverse_naive(slow)), tol_for(f)) << n << "x" << m;
    }
  }
}

TEST(Qdft, FastMatchesNaiveOnOddAndPrimeSizes) {
  std::mt19937_64 rng(23);
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{13, 17}, {16, 9}, {31, 2}}) {
    const auto f = oracle::random_quaternions(n, m, rng);
    const QSpectrum slow = forward_naive(f);
    EXPECT_LE(oracle::max_abs_diff(forward_fast(f), slow), tol_for(slow));
  }
}

TEST(Qdft, RoundTrip) {
  std::mt19937_64 rng(24);
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 3}, {7, 7}, {32, 48}, {33, 20}}) {
    const auto f = oracle::random_quaternions(n, m, rng);
    EXPECT_LE(oracle::max_abs_diff(inverse(forward(f)), f), 1e-9 * 255.0) << n << "x" << m;
  }
}

TEST(Qdft, NaiveRoundTrip) {
  std::mt19937_64 rng(25);
  const auto f = oracle::random_quaternions(6, 5, rng);
  EXPECT_LE(oracle::max_abs_diff(inverse_naive(forward_naive(f)), f), 1e-9 * 255.0);
}

TEST(Qdft, Parseval) {
  std::mt19937_64 rng(26);
  const auto f = oracle::random_quaternions(12, 10, rng);
  const auto F = forward(f);
  double ef = 0.0;
  double eF = 0.0;
  for (const auto& q : f.data()) ef += qnorm2(q);
  for (const auto& q : F.data()) eF += qnorm2(q);
  EXPECT_NEAR(eF / double(f.size()), ef, 1e-9 * ef);
}

TEST(Qdft, DcTermIsSum) {
  std::mt19937_64 rng(27);
  const auto f = oracle::random_quaternions(5, 6, rng);
  Quaternion sum{};
  for (const auto& q : f.data()) sum += q;
  const auto F = forward(f);
  EXPECT_LE(qmod(F.at(0, 0) - sum), 1e-9 * qmod(sum));
}

TEST(Qdft, ConstantImageHasOnlyDc) {
  const Quaternion c{10, 20, 30, 40};
  QuaternionImage f(4, 6, c);
  const auto F = forward(f);
  EXPECT_LE(qmod(F.at(0, 0) - qscale(c, 24.0)), 1e-9);
  for (std::size_t p = 0; p < 4; ++p) {
    for (std::size_t s = 0; s < 6; ++s) {
      if (p == 0 && s == 0) continue;
      EXPECT_LE(qmod(F.at(p, s)), 1e-9);
    }
  }
}

TEST(Qdft, RealLinearity) {
  std::mt19937_64 rng(28);
  const auto f = oracle::random_quaternions(6, 7, rng);
  const auto g = oracle::random_quaternions(6, 7, rng);
  const double a = 1.7;
  const double b = -0.3;
  QuaternionImage h(6, 7);
  for (std::size_t i = 0; i < h.size(); ++i) h.data()[i] = qscale(f.data()[i], a) + qscale(g.data()[i], b);
  const auto Ff = forward(f);
  const auto Fg = forward(g);
  QSpectrum combo(6, 7);
  for (std::size_t i = 0; i < combo.size(); ++i) combo.data()[i] = qscale(Ff.data()[i], a) + qscale(Fg.data()[i], b);
  EXPECT_LE(oracle::max_abs_diff(forward(h), combo), tol_for(combo));
}

// Putting the kernels on the left gives a different transform. On a 2x2
// grid every kernel is +-1, so a 4x4 grid is the smallest useful case.
TEST(Qdft, KernelSideMatters) {
  QuaternionImage g(4, 4);
  g.at(1, 1) = kI;
  g.at(2, 3) = kK;
  g.at(3, 2) = {1, 2, 3, 4};
  Grid<Quaternion> left(4, 4);
  for (std::size_t p = 0; p < 4; ++p) {
    for (std::size_t s = 0; s < 4; ++s) {
      Quaternion acc{};
      for (std::size_t n = 0; n < 4; ++n) {
        for (std::size_t m = 0; m < 4; ++m) {
          const Quaternion wk = unit_kernel(kK, std::numbers::pi / 2 * double(m * s));
          const Quaternion wj = unit_kernel(kJ, std::numbers::pi / 2 * double(n * p));
          acc += qmul(wj, qmul(wk, g.at(n, m)));
        }
      }
      left.at(p, s) = acc;
    }
  }
  EXPECT_GT(oracle::max_abs_diff(forward(g), left), 0.5);
  EXPECT_LE(oracle::max_abs_diff(forward(g), oracle::qdft_forward(g)), 1e-9);
}

// Undoing the k-kernel first (the forward order) does not recover the input.
TEST(Qdft, InverseKernelOrderMatters) {
  std::mt19937_64 rng(30);
  const auto f = oracle::random_quaternions(4, 4, rng);
  const auto F = forward(f);
  Grid<Quaternion> wrong(4, 4);
  for (std::size_t n = 0; n < 4; ++n) {
    for (std::size_t m = 0; m < 4; ++m) {
      Quaternion acc{};
      for (std::size_t p = 0; p < 4; ++p) {
        for (std::size_t s = 0; s < 4; ++s) {
          const Quaternion wk = unit_kernel(kK, -std::numbers::pi / 2 * double(m * s));
          const Quaternion wj = unit_kernel(kJ, -std::numbers::pi / 2 * double(n * p));
          acc += qmul(qmul(F.at(p, s), wk), wj);
        }
      }
      wrong.at(n, m) = qscale(acc, 1.0 / 16.0);
    }
  }
  EXPECT_GT(oracle::max_abs_diff(wrong, f), 1.0);
  EXPECT_LE(oracle::max_abs_diff(inverse(F), f), 1e-9 * 255.0);
}

TEST(Qdft, SpectrumOfImageEmbedding) {
  std::mt19937_64 rng(29);
  const ColorImage img = oracle::random_image(9, 11, rng);
  const auto q = to_quaternion(img);
  const auto F = forward(q);
  EXPECT_LE(oracle::max_abs_diff(F, oracle::qdft_forward(q)), tol_for(F));
  EXPECT_EQ(from_quaternion(inverse(F)).height(), 9u);
  EXPECT_LE(oracle::max_abs_diff(inverse(F), q), 1e-9 * 255.0);
}

}  // namespace
}  // namespace qcolor
