#pragma once

// Schur polynomials S_r(x_1, x_2, ...) and commuting mode polynomials.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "hvff/partition.hpp"
#include "hvff/scalar.hpp"

namespace hvff {

// Commutative polynomial in x_1, x_2, ... with Scalar coefficients. The key
// (n_1, ..., n_k) stands for x_{n_1} ... x_{n_k}.
class ModePoly {
 public:
  using Terms = std::map<Partition, Scalar>;

  ModePoly() = default;
  explicit ModePoly(const Scalar& c);
  static ModePoly var(int n, const Scalar& c = Scalar(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Partition& p) const;
  void add(const Partition& p, const Scalar& c);

  ModePoly& operator+=(const ModePoly& o);
  ModePoly& operator-=(const ModePoly& o);
  friend ModePoly operator+(ModePoly a, const ModePoly& b) { return a += b; }
  friend ModePoly operator-(ModePoly a, const ModePoly& b) { return a -= b; }
  friend ModePoly operator*(const ModePoly& a, const ModePoly& b);
  ModePoly scaled(const Scalar& c) const;
  friend bool operator==(const ModePoly& a, const ModePoly& b);

  // Image under the algebra map x_n -> images(n).
  ModePoly compose(const std::function<ModePoly(int)>& images) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  Terms terms_;
};

class SchurPoly {
 public:
  SchurPoly(int r, std::map<Partition, Rational> terms);

  int r() const { return r_; }
  const std::map<Partition, Rational>& terms() const { return terms_; }
  Rational coeff(const Partition& p) const;
  ModePoly to_mode_poly() const;
  std::string to_string() const;
  friend bool operator==(const SchurPoly& a, const SchurPoly& b) { return a.r_ == b.r_ && a.terms_ == b.terms_; }

 private:
  int r_;
  std::map<Partition, Rational> terms_;
};

class MissingImage : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Coefficient of y^r in exp(sum x_n y^n / n) via the truncated exponential.
SchurPoly schur_gen(int r);
// (1/r!) det of the almost triangular r x r matrix, by Laplace expansion.
SchurPoly schur_det(int r);

// S evaluated on commuting operators: apply(n, w) must return x_n w. The
// order of application is immaterial because the images commute.
template <class Vec, class Apply>
Vec substitute(const SchurPoly& s, const Vec& w, Apply&& apply) {
  Vec out = w.zero_like();
  for (const auto& [part, c] : s.terms()) {
    Vec cur = w;
    for (auto it = part.rbegin(); it != part.rend(); ++it) cur = apply(*it, cur);
    out += cur.scaled(Scalar(c));
  }
  return out;
}

// Variant taking an explicit image table; missing indices raise MissingImage.
template <class Vec>
Vec substitute_images(const SchurPoly& s, const Vec& w, const std::map<int, std::function<Vec(const Vec&)>>& images) {
  return substitute(s, w, [&](int n, const Vec& v) {
    auto it = images.find(n);
    if (it == images.end()) throw MissingImage("no image for x_" + std::to_string(n));
    return it->second(v);
  });
}

}  // namespace hvff
