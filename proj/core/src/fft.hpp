#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace qtsqrt::detail {

inline bool is_power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

/// In-place iterative radix-2 transform, unnormalized:
///   forward:  X_k = sum_t x_t exp(-2*pi*i*t*k/m)
///   inverse:  X_k = sum_t x_t exp(+2*pi*i*t*k/m)
/// Twiddles come straight from std::polar per index, so the per-point
/// error stays at a few ulps independently of m.
inline void fft_radix2(std::vector<std::complex<double>>& v, bool inverse) {
  const int m = static_cast<int>(v.size());
  if (!is_power_of_two(m)) {
    throw std::invalid_argument("fft_radix2: length must be a power of two");
  }
  if (m == 1) return;

  for (int i = 1, j = 0; i < m; ++i) {
    int bit = m >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(v[i], v[j]);
  }

  const double sign = inverse ? 1.0 : -1.0;
  std::vector<std::complex<double>> twiddle(m / 2);
  for (int k = 0; k < m / 2; ++k) {
    twiddle[k] = std::polar(1.0, sign * 2.0 * M_PI * k / m);
  }

  for (int len = 2; len <= m; len <<= 1) {
    const int stride = m / len;
    for (int start = 0; start < m; start += len) {
      for (int k = 0; k < len / 2; ++k) {
        const std::complex<double> w = twiddle[k * stride];
        const std::complex<double> u = v[start + k];
        const std::complex<double> t = w * v[start + k + len / 2];
        v[start + k] = u + t;
        v[start + k + len / 2] = u - t;
      }
    }
  }
}

}  // namespace qtsqrt::detail
