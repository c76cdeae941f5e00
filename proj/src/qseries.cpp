#include "hvff/qseries.hpp"

#include <algorithm>

namespace hvff {

QSeries::QSeries(Scalar offset, std::vector<Scalar> coeffs) : offset_(std::move(offset)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("q-series needs order >= 0");
}

QSeries QSeries::zero(int order, Scalar offset) {
  if (order < 0) throw std::invalid_argument("q-series needs order >= 0");
  return QSeries(std::move(offset), std::vector<Scalar>(static_cast<std::size_t>(order) + 1));
}

Scalar QSeries::coeff(int n) const {
  if (n < 0 || n > order()) return Scalar(0);
  return coeffs_[static_cast<std::size_t>(n)];
}

void QSeries::check_offset(const QSeries& o) const {
  if (!(offset_ == o.offset_)) throw std::invalid_argument("q-series offsets differ");
}

QSeries QSeries::shifted(int k) const {
  QSeries out = zero(order(), offset_);
  for (int i = 0; i <= order(); ++i) out.coeffs_[i] = coeff(i - k);
  return out;
}

QSeries QSeries::truncated(int n) const {
  QSeries out = zero(n, offset_);
  for (int i = 0; i <= n; ++i) out.coeffs_[i] = coeff(i);
  return out;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  check_offset(o);
  if (o.order() < order()) *this = truncated(o.order());
  for (int i = 0; i <= order(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  check_offset(o);
  if (o.order() < order()) *this = truncated(o.order());
  for (int i = 0; i <= order(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

// The product carries the offset of a; b is treated as a plain power series.
QSeries operator*(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.order(), b.order());
  QSeries out = QSeries::zero(n, a.offset_);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
}

std::string QSeries::to_string() const {
  static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  auto power = [](int k) {
    std::string digits = std::to_string(k), s;
    for (char ch : digits) s += sup[ch - '0'];
    return s;
  };
  std::string body;
  for (int i = 0; i <= order(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const CoeffText ct = coefficient_text(coeffs_[i]);
    const std::string mono = i == 0 ? "" : (i == 1 ? "q" : "q" + power(i));
    std::string term = ct.text.empty() ? (mono.empty() ? "1" : mono) : ct.text + mono;
    if (body.empty()) {
      body = (ct.negative ? "-" : "") + term;
    } else {
      body += (ct.negative ? " - " : " + ") + term;
    }
  }
  if (body.empty()) body = "0";
  const std::string off = offset_.is_zero() ? "" : "q^" + offset_.to_string() + "·";
  return off + "(" + body + " + …)";
}

std::vector<Integer> partition_counts(int n) {
  std::vector<Integer> p(static_cast<std::size_t>(std::max(n, 0)) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Integer acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * p[m - g1];
      const int g2 = k * (3 * k + 1) / 2;
      if (g2 <= m) acc += sign * p[m - g2];
    }
    p[m] = acc;
  }
  return p;
}

QSeries verma_char(int order) {
  if (order < 0) throw std::invalid_argument("q-series needs order >= 0");
  // prod (1 - q^j)^{-2}, one factor at a time
  std::vector<Scalar> c(static_cast<std::size_t>(order) + 1);
  c[0] = Scalar(1);
  for (int j = 1; j <= order; ++j) {
    for (int rep = 0; rep < 2; ++rep) {
      for (int i = j; i <= order; ++i) c[i] += c[i - j];
    }
  }
  return QSeries(Scalar::param(Param::h), std::move(c));
}

QSeries irr_char(int p, int order) {
  if (p < 1) throw PreconditionViolated("irr_char needs p >= 1");
  const QSeries v = verma_char(order);
  return v - v.shifted(p);
}

bool decomp_check(int p, int order) {
  if (p < 1) throw PreconditionViolated("decomp_check needs p >= 1");
  const QSeries irr = irr_char(p, order);
  QSeries sum = QSeries::zero(order);
  for (int n = 0; n * p <= order; ++n) sum += irr.shifted(n * p);
  return sum == verma_char(order);
}

}  // namespace hvff
