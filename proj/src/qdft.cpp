#include "qcolor/qdft.hpp"

#include <complex>
#include <numbers>
#include <vector>

#include "qcolor/fft.hpp"

namespace qcolor {

namespace {

using cplx = std::complex<double>;

// table[t] = W_axis^{sign * t} for t in [0, len).
std::vector<Quaternion> kernel_table(const Quaternion& axis, std::size_t len, int sign) {
  std::vector<Quaternion> table(len);
  for (std::size_t t = 0; t < len; ++t) {
    const double theta = sign * 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(len);
    table[t] = unit_kernel(axis, theta);
  }
  return table;
}

// Right multiplication by W_k^{sign ms} summed along each row.
Grid<Quaternion> naive_k(const Grid<Quaternion>& in, int sign) {
  const std::size_t rows = in.height();
  const std::size_t cols = in.width();
  const auto wk = kernel_table(kK, cols, sign);
  Grid<Quaternion> out(rows, cols);
  for (std::size_t n = 0; n < rows; ++n) {
    for (std::size_t s = 0; s < cols; ++s) {
      Quaternion acc{};
      for (std::size_t m = 0; m < cols; ++m) acc += in.at(n, m) * wk[(m * s) % cols];
      out.at(n, s) = acc;
    }
  }
  return out;
}

// Right multiplication by W_j^{sign np} summed along each column.
Grid<Quaternion> naive_j(const Grid<Quaternion>& in, int sign) {
  const std::size_t rows = in.height();
  const std::size_t cols = in.width();
  const auto wj = kernel_table(kJ, rows, sign);
  Grid<Quaternion> out(rows, cols);
  for (std::size_t p = 0; p < rows; ++p) {
    for (std::size_t s = 0; s < cols; ++s) {
      Quaternion acc{};
      for (std::size_t n = 0; n < rows; ++n) acc += in.at(n, s) * wj[(n * p) % rows];
      out.at(p, s) = acc;
    }
  }
  return out;
}

template <typename Out>
Out copy_as(const Grid<Quaternion>& g, double scale = 1.0) {
  std::vector<Quaternion> data(g.data().begin(), g.data().end());
  if (scale != 1.0) {
    for (Quaternion& q : data) q = q * scale;
  }
  return Out(g.height(), g.width(), std::move(data));
}

// Right multiplication by W_k along each row. Writing
//   q = (w + z k) + i (x - y k)
// both parts live in span{1, k}, which commutes with W_k, so each is an
// ordinary complex sequence with k playing the imaginary unit.
void k_pass(Grid<Quaternion>& g, fft::Direction dir) {
  const std::size_t rows = g.height();
  const std::size_t cols = g.width();
  std::vector<cplx> a(cols);
  std::vector<cplx> b(cols);
  for (std::size_t n = 0; n < rows; ++n) {
    for (std::size_t m = 0; m < cols; ++m) {
      const Quaternion& q = g.at(n, m);
      a[m] = {q.w, q.z};
      b[m] = {q.x, -q.y};
    }
    fft::transform(a, dir);
    fft::transform(b, dir);
    for (std::size_t s = 0; s < cols; ++s) {
      g.at(n, s) = {a[s].real(), b[s].real(), -b[s].imag(), a[s].imag()};
    }
  }
}

// Right multiplication by W_j along each column, with
//   q = (w + y j) + i (x + z j).
void j_pass(Grid<Quaternion>& g, fft::Direction dir) {
  const std::size_t rows = g.height();
  const std::size_t cols = g.width();
  std::vector<cplx> a(rows);
  std::vector<cplx> b(rows);
  for (std::size_t s = 0; s < cols; ++s) {
    for (std::size_t n = 0; n < rows; ++n) {
      const Quaternion& q = g.at(n, s);
      a[n] = {q.w, q.y};
      b[n] = {q.x, q.z};
    }
    fft::transform(a, dir);
    fft::transform(b, dir);
    for (std::size_t p = 0; p < rows; ++p) {
      g.at(p, s) = {a[p].real(), b[p].real(), a[p].imag(), b[p].imag()};
    }
  }
}

}  // namespace

QSpectrum forward_naive(const QuaternionImage& img) { return copy_as<QSpectrum>(naive_j(naive_k(img, 1), 1)); }

// The kernels act from the right, so the inverse undoes the j-kernel before
// the k-kernel. Taking them in the forward order does not invert the
// transform, since W_k and W_j do not commute.
QuaternionImage inverse_naive(const QSpectrum& spec) {
  return copy_as<QuaternionImage>(naive_k(naive_j(spec, -1), -1), 1.0 / static_cast<double>(spec.size()));
}

QSpectrum forward_fast(const QuaternionImage& img) {
  auto g = copy_as<Grid<Quaternion>>(img);
  k_pass(g, fft::Direction::kForward);
  j_pass(g, fft::Direction::kForward);
  return copy_as<QSpectrum>(g);
}

QuaternionImage inverse_fast(const QSpectrum& spec) {
  auto g = copy_as<Grid<Quaternion>>(spec);
  j_pass(g, fft::Direction::kBackward);
  k_pass(g, fft::Direction::kBackward);
  return copy_as<QuaternionImage>(g, 1.0 / static_cast<double>(spec.size()));
}

}  // namespace qcolor
