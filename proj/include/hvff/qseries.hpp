#pragma once

// Truncated q-series q^offset (c_0 + c_1 q + ... + c_N q^N).

#include <string>
#include <vector>

#include "hvff/scalar.hpp"

namespace hvff {

class QSeries {
 public:
  QSeries(Scalar offset, std::vector<Scalar> coeffs);
  static QSeries zero(int order, Scalar offset = Scalar::param(Param::h));

  const Scalar& offset() const { return offset_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(int n) const;

  // Multiplication by q^k keeping the offset and the order.
  QSeries shifted(int k) const;
  QSeries truncated(int order) const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b);

  // "q^h·(1 + 2q + 5q² + …)"
  std::string to_string() const;

 private:
  void check_offset(const QSeries& o) const;
  Scalar offset_;
  std::vector<Scalar> coeffs_;
};

// Number of partitions of 0..n, by Euler's pentagonal recurrence.
std::vector<Integer> partition_counts(int n);

// q^h prod_{j>=1} (1 - q^j)^{-2}
QSeries verma_char(int order);
// q^h (1 - q^p) prod_{j>=1} (1 - q^j)^{-2}
QSeries irr_char(int p, int order);
// verma_char = sum_n q^{np} irr_char up to q^order
bool decomp_check(int p, int order);

}  // namespace hvff
