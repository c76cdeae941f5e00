#pragma once

// Structure constants of the twisted Heisenberg-Virasoro algebra and of W(2,2).

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

#include "hvff/scalar.hpp"

namespace hvff {

enum class Algebra : std::uint8_t { HVir, W22 };

enum class GenKind : std::uint8_t { L, I, W, C_L, C_LI, C_I, C, C_W };

class AlgebraMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Generator {
  Algebra algebra = Algebra::HVir;
  GenKind kind = GenKind::L;
  int mode = 0;  // zero for central kinds

  static Generator L(int n, Algebra a = Algebra::HVir) { return {a, GenKind::L, n}; }
  static Generator I(int n) { return {Algebra::HVir, GenKind::I, n}; }
  static Generator W(int n) { return {Algebra::W22, GenKind::W, n}; }
  static Generator central(GenKind k);

  bool is_central() const;
  // Throws AlgebraMismatch when the kind does not belong to the algebra.
  void validate() const;
  std::string to_string() const;

  auto operator<=>(const Generator&) const = default;
};

class LieElement {
 public:
  using Terms = std::map<Generator, Scalar>;

  explicit LieElement(Algebra a = Algebra::HVir) : algebra_(a) {}
  LieElement(const Generator& g, Scalar coeff = Scalar(1));  // NOLINT(google-explicit-constructor)

  Algebra algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Generator& g) const;

  void add(const Generator& g, const Scalar& c);
  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement operator-() const;
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Scalar& c, const LieElement& x);
  friend bool operator==(const LieElement& a, const LieElement& b);

  std::string to_string() const;

 private:
  Algebra algebra_;
  Terms terms_;
};

LieElement bracket(const Generator& x, const Generator& y);
LieElement bracket(const LieElement& x, const LieElement& y);

}  // namespace hvff
