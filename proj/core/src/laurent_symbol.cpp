#include "qtsqrt/laurent_symbol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "fft.hpp"

namespace qtsqrt {

namespace {

void strip_edge_zeros(std::vector<double>& neg, std::vector<double>& pos) {
  while (!neg.empty() && neg.back() == 0.0) neg.pop_back();
  while (pos.size() > 1 && pos.back() == 0.0) pos.pop_back();
  if (pos.empty()) pos.push_back(0.0);
}

}  // namespace

LaurentSymbol::LaurentSymbol(std::vector<double> neg, std::vector<double> pos)
    : neg_(std::move(neg)), pos_(std::move(pos)) {
  strip_edge_zeros(neg_, pos_);
}

LaurentSymbol LaurentSymbol::monomial(int j, double coeff) {
  if (j >= 0) {
    std::vector<double> pos(j + 1, 0.0);
    pos[j] = coeff;
    return LaurentSymbol({}, std::move(pos));
  }
  std::vector<double> neg(-j, 0.0);
  neg[-j - 1] = coeff;
  return LaurentSymbol(std::move(neg), {0.0});
}

bool LaurentSymbol::is_zero() const {
  auto all_zero = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
  };
  return all_zero(neg_) && all_zero(pos_);
}

double wiener_norm(const LaurentSymbol& a) {
  double s = 0.0;
  for (double x : a.neg()) s += std::abs(x);
  for (double x : a.pos()) s += std::abs(x);
  return s;
}

LaurentSymbol mul(const LaurentSymbol& a, const LaurentSymbol& b) {
  const int lo = a.min_index() + b.min_index();
  const int hi = a.max_index() + b.max_index();
  std::vector<double> out(hi - lo + 1, 0.0);
  for (int i = a.min_index(); i <= a.max_index(); ++i) {
    const double ai = a.coeff(i);
    if (ai == 0.0) continue;
    for (int j = b.min_index(); j <= b.max_index(); ++j) {
      out[i + j - lo] += ai * b.coeff(j);
    }
  }
  std::vector<double> neg(std::max(0, -lo), 0.0);
  std::vector<double> pos(std::max(1, hi + 1), 0.0);
  for (int k = lo; k <= hi; ++k) {
    if (k >= 0) {
      pos[k] = out[k - lo];
    } else {
      neg[-k - 1] = out[k - lo];
    }
  }
  return LaurentSymbol(std::move(neg), std::move(pos));
}

namespace {

LaurentSymbol combine(const LaurentSymbol& a, const LaurentSymbol& b,
                      double sb) {
  const int lo = std::min(a.min_index(), b.min_index());
  const int hi = std::max(a.max_index(), b.max_index());
  std::vector<double> neg(std::max(0, -lo), 0.0);
  std::vector<double> pos(std::max(1, hi + 1), 0.0);
  for (int k = lo; k <= hi; ++k) {
    const double v = a.coeff(k) + sb * b.coeff(k);
    if (k >= 0) {
      pos[k] = v;
    } else {
      neg[-k - 1] = v;
    }
  }
  return LaurentSymbol(std::move(neg), std::move(pos));
}

}  // namespace

LaurentSymbol add(const LaurentSymbol& a, const LaurentSymbol& b) {
  return combine(a, b, 1.0);
}

LaurentSymbol sub(const LaurentSymbol& a, const LaurentSymbol& b) {
  return combine(a, b, -1.0);
}

LaurentSymbol scale(const LaurentSymbol& a, double s) {
  std::vector<double> neg = a.neg();
  std::vector<double> pos = a.pos();
  for (double& x : neg) x *= s;
  for (double& x : pos) x *= s;
  return LaurentSymbol(std::move(neg), std::move(pos));
}

std::complex<double> eval(const LaurentSymbol& a, std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0)) {
    throw std::invalid_argument("eval: z must be nonzero");
  }
  const auto& pos = a.pos();
  std::complex<double> acc(0.0, 0.0);
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
    acc = acc * z + *it;
  }
  const auto& neg = a.neg();
  const std::complex<double> w = 1.0 / z;
  std::complex<double> accn(0.0, 0.0);
  for (auto it = neg.rbegin(); it != neg.rend(); ++it) {
    accn = (accn + *it) * w;
  }
  return acc + accn;
}

std::vector<std::complex<double>> eval_roots_of_unity(const LaurentSymbol& a,
                                                      int m) {
  if (m < 2) {
    throw std::invalid_argument("eval_roots_of_unity: m must be >= 2");
  }
  if (!detail::is_power_of_two(m)) {
    throw std::invalid_argument("eval_roots_of_unity: m must be a power of two");
  }
  std::vector<std::complex<double>> v(m, std::complex<double>(0.0, 0.0));
  for (int j = a.min_index(); j <= a.max_index(); ++j) {
    const int t = ((j % m) + m) % m;
    v[t] += a.coeff(j);
  }
  // a(w^t) = sum_s v_s w^{ts}: the unnormalized inverse-direction transform.
  detail::fft_radix2(v, /*inverse=*/true);
  return v;
}

LaurentSymbol interpolate(const std::vector<std::complex<double>>& values,
                          int m, double* imag_residue) {
  if (m < 2 || !detail::is_power_of_two(m)) {
    throw std::invalid_argument("interpolate: m must be a power of two >= 2");
  }
  if (static_cast<int>(values.size()) != m) {
    throw std::invalid_argument("interpolate: values.size() != m");
  }
  std::vector<std::complex<double>> c(values);
  detail::fft_radix2(c, /*inverse=*/false);
  double vmax = 0.0;
  for (const auto& v : values) vmax = std::max(vmax, std::abs(v));
  double residue = 0.0;
  for (auto& x : c) {
    x /= static_cast<double>(m);
    residue = std::max(residue, std::abs(x.imag()));
  }
  if (imag_residue != nullptr) *imag_residue = residue;
  if (residue > 1e-10 * vmax) {
    throw std::runtime_error(
        "interpolate: imaginary residue exceeds 1e-10 * max|values|; input is "
        "not conjugate-symmetric");
  }
  const int n = m / 2;
  std::vector<double> pos(n + 1, 0.0);
  std::vector<double> neg(n - 1, 0.0);
  for (int j = 0; j <= n; ++j) pos[j] = c[j].real();
  for (int j = 1; j <= n - 1; ++j) neg[j - 1] = c[m - j].real();
  return LaurentSymbol(std::move(neg), std::move(pos));
}

DerivativesAtOne derivatives_at_one(const LaurentSymbol& a) {
  DerivativesAtOne d{0.0, 0.0, 0.0};
  for (int j = a.min_index(); j <= a.max_index(); ++j) {
    const double aj = a.coeff(j);
    d.value += aj;
    d.first += j * aj;
    d.second += static_cast<double>(j) * (j - 1) * aj;
  }
  return d;
}

LaurentSymbol trim(const LaurentSymbol& a, double threshold) {
  if (threshold < 0.0) {
    throw std::invalid_argument("trim: threshold must be >= 0");
  }
  int lo = a.min_index();
  int hi = a.max_index();
  double budget = threshold;
  while (lo < hi && std::abs(a.coeff(lo)) <= budget) {
    budget -= std::abs(a.coeff(lo));
    ++lo;
  }
  while (hi > lo && std::abs(a.coeff(hi)) <= budget) {
    budget -= std::abs(a.coeff(hi));
    --hi;
  }
  if (lo == hi && std::abs(a.coeff(lo)) <= budget) {
    return LaurentSymbol();
  }
  std::vector<double> neg(std::max(0, -lo), 0.0);
  std::vector<double> pos(std::max(1, hi + 1), 0.0);
  for (int k = lo; k <= hi; ++k) {
    if (k >= 0) {
      pos[k] = a.coeff(k);
    } else {
      neg[-k - 1] = a.coeff(k);
    }
  }
  return LaurentSymbol(std::move(neg), std::move(pos));
}

}  // namespace qtsqrt
