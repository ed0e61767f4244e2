#pragma once

// Right-side 2-D quaternion DFT
//
//   F(p,s) = sum_n ( sum_m f(n,m) W_k^{ms} ) W_j^{np}
//   f(n,m) = 1/(NM) sum_s ( sum_p F(p,s) W_j^{-np} ) W_k^{-ms}
//
// with W_k^{t} = cos(2 pi t / M) - k sin(2 pi t / M) and W_j likewise over N.
// Kernels always multiply the data from the right: k then j going forward,
// j then k going back.

#include "qcolor/image.hpp"

namespace qcolor {

class QSpectrum : public Grid<Quaternion> {
 public:
  using Grid<Quaternion>::Grid;
};

/// Direct double sums; O(NM(N+M)). Kept as the reference for the fast path.
QSpectrum forward_naive(const QuaternionImage& img);
QuaternionImage inverse_naive(const QSpectrum& spec);

/// Row-column evaluation through four batches of complex DFTs of arbitrary
/// length. Agrees with the naive path to rounding.
QSpectrum forward_fast(const QuaternionImage& img);
QuaternionImage inverse_fast(const QSpectrum& spec);

inline QSpectrum forward(const QuaternionImage& img) { return forward_fast(img); }
inline QuaternionImage inverse(const QSpectrum& spec) { return inverse_fast(spec); }

}  // namespace qcolor
