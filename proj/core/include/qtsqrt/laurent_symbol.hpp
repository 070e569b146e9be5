#pragma once

#include <complex>
#include <vector>

namespace qtsqrt {

/// Laurent polynomial a(z) = sum_j a_j z^j with finitely many real
/// coefficients, j running over [-q, p]. Stored as two vectors: `neg`
/// holds a_{-1}..a_{-q}, `pos` holds a_0..a_p. Exact zeros at the band
/// edges are dropped on construction; a_0 always occupies pos[0].
class LaurentSymbol {
 public:
  LaurentSymbol() : pos_{0.0} {}
  LaurentSymbol(std::vector<double> neg, std::vector<double> pos);

  static LaurentSymbol constant(double a0) { return LaurentSymbol({}, {a0}); }
  static LaurentSymbol monomial(int j, double coeff);

  /// Lowest stored index, -q (0 for a pure power series in z).
  int min_index() const { return -static_cast<int>(neg_.size()); }
  /// Highest stored index, p.
  int max_index() const { return static_cast<int>(pos_.size()) - 1; }

  /// a_j, zero outside the stored band.
  double coeff(int j) const {
    if (j >= 0) {
      return j < static_cast<int>(pos_.size()) ? pos_[j] : 0.0;
    }
    int k = -j - 1;
    return k < static_cast<int>(neg_.size()) ? neg_[k] : 0.0;
  }

  const std::vector<double>& neg() const { return neg_; }
  const std::vector<double>& pos() const { return pos_; }

  bool is_zero() const;

 private:
  std::vector<double> neg_;  // a_{-1}, a_{-2}, ..., a_{-q}
  std::vector<double> pos_;  // a_0, a_1, ..., a_p; never empty
};

/// ||a||_W = sum_j |a_j|.
double wiener_norm(const LaurentSymbol& a);

/// Exact coefficient convolution; the band grows to [-(qa+qb), pa+pb].
LaurentSymbol mul(const LaurentSymbol& a, const LaurentSymbol& b);

LaurentSymbol add(const LaurentSymbol& a, const LaurentSymbol& b);
LaurentSymbol sub(const LaurentSymbol& a, const LaurentSymbol& b);
LaurentSymbol scale(const LaurentSymbol& a, double s);

/// Direct evaluation of a(z) by Horner on the two one-sided parts.
/// Throws std::invalid_argument for z = 0.
std::complex<double> eval(const LaurentSymbol& a, std::complex<double> z);

/// Values a(w_m^t), t = 0..m-1, where w_m = exp(2*pi*i/m), computed with
/// a single radix-2 FFT of the coefficient vector wrapped modulo m.
/// Since w_m^m = 1 this enumerates the nodes w_m^i, i = -n+1..n, m = 2n,
/// with negative i found at t = m + i. m must be a power of two >= 2.
std::vector<std::complex<double>> eval_roots_of_unity(const LaurentSymbol& a,
                                                      int m);

/// Inverse of eval_roots_of_unity: the unique Laurent polynomial with
/// support in (-n, n], m = 2n, taking the given values at the m-th roots
/// of unity. Imaginary residues of the computed coefficients are checked
/// against 1e-10 * max|values| (conjugate symmetry of real data), written
/// to *imag_residue when provided, and dropped. Throws if the residue
/// exceeds the bound.
LaurentSymbol interpolate(const std::vector<std::complex<double>>& values,
                          int m, double* imag_residue = nullptr);

struct DerivativesAtOne {
  double value;   // a(1)  = sum a_j
  double first;   // a'(1) = sum j a_j
  double second;  // a''(1) = sum j(j-1) a_j
};

DerivativesAtOne derivatives_at_one(const LaurentSymbol& a);

/// Drops coefficients from the band edges while the cumulative absolute
/// sum of everything dropped stays <= threshold, so that
/// ||a - trim(a, threshold)||_W <= threshold.
LaurentSymbol trim(const LaurentSymbol& a, double threshold);

inline LaurentSymbol operator+(const LaurentSymbol& a, const LaurentSymbol& b) {
  return add(a, b);
}
inline LaurentSymbol operator-(const LaurentSymbol& a, const LaurentSymbol& b) {
  return sub(a, b);
}
inline LaurentSymbol operator*(const LaurentSymbol& a, const LaurentSymbol& b) {
  return mul(a, b);
}
inline LaurentSymbol operator*(double s, const LaurentSymbol& a) {
  return scale(a, s);
}

}  // namespace qtsqrt
