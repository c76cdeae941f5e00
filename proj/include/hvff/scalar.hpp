#pragma once

// Exact field arithmetic: GMP rationals, sparse multivariate polynomials over Q
// in a fixed set of named parameters, and quotients of such polynomials.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hvff {

using Integer = mpz_class;
using Rational = mpq_class;

// Named symbolic parameters. The enumerator order is the global variable
// order used for canonical monomials (c_L is the most significant).
enum class Param : std::uint8_t {
  c_L,
  c_LI,
  h,
  h_I,
  lambda,
  mu,
  r,
  s,
  F,
  a,
  b,
  h_prime,
  h_I_prime,
  c_W,
  h_W,
  n,
  x,
};
inline constexpr std::size_t kNumParams = 17;

std::string_view param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);

using Bindings = std::map<Param, Rational>;

class UnboundParameter : public std::invalid_argument {
 public:
  explicit UnboundParameter(Param p);
  Param param() const { return param_; }

 private:
  Param param_;
};

class VanishingDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Power product of parameters with dense exponent storage.
class Monomial {
 public:
  using Exponents = std::array<std::uint16_t, kNumParams>;

  Monomial() = default;
  static Monomial var(Param p, unsigned exponent = 1);

  unsigned exponent(Param p) const { return e_[static_cast<std::size_t>(p)]; }
  unsigned total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  const Exponents& exponents() const { return e_; }

  Monomial operator*(const Monomial& o) const;
  // Requires divides(*this, num).
  Monomial divided_into(const Monomial& num) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;

 private:
  Exponents e_{};
};

// Sparse polynomial over Q. Terms are kept sorted ascending in lex order on
// exponent vectors; no zero coefficients are stored.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
  };

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Monomial& m, const Rational& c);
  static Poly var(Param p);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::optional<Rational> as_constant() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.back(); }

  bool contains(Param p) const;
  unsigned degree_in(Param p) const;
  unsigned total_degree() const;
  // Coefficient of p^k, as a polynomial free of p.
  Poly coeff_in(Param p, unsigned k) const;
  Monomial monomial_content() const;

  Rational evaluate(const Bindings& b) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const Rational& c) const;
  Poly shifted(const Monomial& m) const;
  Poly divided_by_monomial(const Monomial& m) const;
  Poly pow(unsigned e) const;

  // Quotient when d divides *this exactly, nullopt otherwise.
  std::optional<Poly> divide_exact(const Poly& d) const;
  // Leading coefficient scaled to 1.
  Poly monic() const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

// Greatest common divisor over Q[params], normalized monic.
Poly gcd(const Poly& a, const Poly& b);

// Element of Q or of the rational function field Q(params).
//
// Quotients are kept with a monic denominator, common monomial factors and
// rational content cancelled, and the denominator divided out when it divides
// the numerator exactly. No general gcd cancellation happens during
// arithmetic; cancel() performs it on request. Equality is decided by
// cross-multiplication.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(long v) : v_(Rational(v)) {}              // NOLINT(google-explicit-constructor)
  Scalar(int v) : v_(Rational(v)) {}               // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v) : v_(v) { std::get<Rational>(v_).canonicalize(); }  // NOLINT(google-explicit-constructor)
  Scalar(const Poly& p);                           // NOLINT(google-explicit-constructor)
  static Scalar fraction(Poly num, Poly den);
  static Scalar param(Param p) { return Scalar(Poly::var(p)); }
  static Scalar ratio(long num, long den) { return Scalar(Rational(num, den)); }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational* if_rational() const { return std::get_if<Rational>(&v_); }
  std::optional<Rational> as_rational() const;
  // Value when the scalar is a rational integer.
  std::optional<Integer> as_integer() const;
  std::optional<long> as_long() const;

  Poly numerator() const;
  Poly denominator() const;
  bool depends_on(Param p) const;
  // True when no parameter occurs.
  bool is_numeric() const { return is_rational(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inverse() const;
  Scalar pow(int e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  // Full gcd cancellation of numerator and denominator.
  Scalar cancel() const;
  Rational specialize(const Bindings& b) const;
  Scalar substitute(Param p, const Scalar& value) const;
  Scalar substitute(const std::map<Param, Scalar>& values) const;
  // Coefficients of p^0, p^1, ...; the denominator must be free of p.
  std::vector<Scalar> coefficients_in(Param p) const;

  std::string to_string() const;

 private:
  struct Fraction {
    Poly num;
    Poly den;
  };
  static Scalar make(Poly num, Poly den);
  std::variant<Rational, Fraction> v_;
};

std::string to_string(const Rational& q);
// "num/den" with the denominator always present.
std::string rational_to_json_string(const Rational& q);

// Parses "3", "-1/2", parameter names, and + - * / ^ ( ) expressions.
Scalar parse_scalar(std::string_view text);

// x(x-1)...(x-p+1)/p!
Scalar gen_binomial(const Scalar& x, unsigned p);

// Sign and text for a coefficient printed in front of a basis word: text is
// empty for 1, parenthesized when it is a sum.
struct CoeffText {
  bool negative = false;
  std::string text;
};
CoeffText coefficient_text(const Scalar& c);
// Joins terms as "a + b - c".
std::string join_terms(const std::vector<std::pair<CoeffText, std::string>>& terms, const std::string& empty = "0");

// Variables present in a scalar.
std::vector<Param> parameters_of(const Scalar& s);

}  // namespace hvff
