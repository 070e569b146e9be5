#pragma once

#include <Eigen/Dense>

#include "qtsqrt/laurent_symbol.hpp"

namespace qtsqrt {

using DenseMatrix = Eigen::MatrixXd;
/// Finite dense block read as the top-left corner of an infinite matrix
/// that is zero everywhere else.
using CorrectionBlock = Eigen::MatrixXd;

/// Internal precision used when no explicit threshold is given.
inline constexpr double kDefaultThreshold = 1e-15;
/// Stopping tolerance for the relative equation residual.
inline constexpr double kDefaultResidualTol = 1e-13;

/// Semi-infinite quasi-Toeplitz matrix T(symbol) + correction:
/// entry (i,j) = a_{j-i} + e_{i,j} (1-based indices). The threshold is
/// the compression tolerance applied after arithmetic on this value.
struct QtMatrix {
  LaurentSymbol symbol;
  CorrectionBlock correction;  // 0x0 when absent
  double threshold = kDefaultThreshold;
};

QtMatrix qt_zero(double threshold = kDefaultThreshold);
QtMatrix qt_identity(double threshold = kDefaultThreshold);
QtMatrix qt_from_symbol(LaurentSymbol a, double threshold = kDefaultThreshold);
QtMatrix qt_from_correction(CorrectionBlock e,
                            double threshold = kDefaultThreshold);

/// Sum with padded correction blocks; compressed at the larger threshold.
QtMatrix qt_add(const QtMatrix& A, const QtMatrix& B);
QtMatrix qt_sub(const QtMatrix& A, const QtMatrix& B);
QtMatrix qt_scale(const QtMatrix& A, double s);

/// Product T(ab) - H(a-)H(b+) + T(a)E_B + E_A T(b) + E_A E_B, with
/// H(a-)_{ij} = a_{-i-j+1} and H(b+)_{ij} = b_{i+j-1}. All four correction
/// terms are assembled exactly; one compression at the end.
QtMatrix qt_mul(const QtMatrix& A, const QtMatrix& B);

/// Exact sup of row absolute sums. Toeplitz row sums increase towards
/// ||a||_W as the row index grows and the correction dies after its last
/// row, so the sup is attained among finitely many rows or equals ||a||_W.
double qt_norm_inf(const QtMatrix& A);

/// Smallest entry of the infinite matrix (0 is included whenever some
/// entry outside the band/correction is zero, i.e. always).
double qt_min_entry(const QtMatrix& A);

/// Trims the symbol and removes trailing correction rows/columns whose
/// absolute sums aggregate below the threshold. Guarantees
/// ||A - compress(A)||_inf <= 2*threshold.
QtMatrix qt_compress(const QtMatrix& A, double threshold);

/// Partial sum of (2I - C)^{-1} = 1/2 sum_i (C/2)^i with the number of
/// terms chosen from the geometric tail bound
/// (||C||/2)^{K+1} / (2 - ||C||) <= tol. Throws if ||C|| >= 2 - 1e-8 or if
/// more terms than max_terms would be needed.
QtMatrix qt_neumann_inverse_shifted(const QtMatrix& C, double tol,
                                    int max_terms = 2000);

/// N x N leading principal submatrix as a dense matrix.
DenseMatrix qt_truncate_dense(const QtMatrix& A, int n);

struct QtStats {
  int band = 0;  // p + q + 1 of the symbol, 0 for the zero symbol
  int rows = 0;  // stored correction rows
  int cols = 0;  // stored correction columns
  int rank = 0;  // numerical rank of the correction
};

/// Band/extent/rank report for the correction; rank is counted from a
/// column-pivoted QR with absolute pivot threshold tol * ||E||_inf.
QtStats correction_stats(const QtMatrix& A, double tol);

inline QtMatrix operator+(const QtMatrix& A, const QtMatrix& B) {
  return qt_add(A, B);
}
inline QtMatrix operator-(const QtMatrix& A, const QtMatrix& B) {
  return qt_sub(A, B);
}
inline QtMatrix operator*(const QtMatrix& A, const QtMatrix& B) {
  return qt_mul(A, B);
}
inline QtMatrix operator*(double s, const QtMatrix& A) {
  return qt_scale(A, s);
}

}  // namespace qtsqrt
