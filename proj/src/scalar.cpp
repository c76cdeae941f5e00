#include "hvff/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace hvff {

namespace {

constexpr std::array<std::string_view, kNumParams> kParamNames = {
    "c_L", "c_LI", "h", "h_I", "lambda", "mu", "r", "s", "F",
    "a",   "b",    "h'", "h_I'", "c_W",  "h_W", "n", "x"};

}  // namespace

std::string_view param_name(Param p) { return kParamNames[static_cast<std::size_t>(p)]; }

std::optional<Param> param_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumParams; ++i) {
    if (kParamNames[i] == name) return static_cast<Param>(i);
  }
  if (name == "cL") return Param::c_L;
  if (name == "cLI") return Param::c_LI;
  if (name == "hI") return Param::h_I;
  if (name == "cW") return Param::c_W;
  if (name == "hW") return Param::h_W;
  return std::nullopt;
}

UnboundParameter::UnboundParameter(Param p)
    : std::invalid_argument("unbound parameter: " + std::string(param_name(p))), param_(p) {}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(Param p, unsigned exponent) {
  Monomial m;
  m.e_[static_cast<std::size_t>(p)] = static_cast<std::uint16_t>(exponent);
  return m;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto x : e_) d += x;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kNumParams; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kNumParams; ++i) m.e_[i] = static_cast<std::uint16_t>(e_[i] + o.e_[i]);
  return m;
}

Monomial Monomial::divided_into(const Monomial& num) const {
  Monomial m;
  for (std::size_t i = 0; i < kNumParams; ++i) m.e_[i] = static_cast<std::uint16_t>(num.e_[i] - e_[i]);
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kNumParams; ++i) m.e_[i] = std::min(a.e_[i], b.e_[i]);
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kNumParams; ++i) m.e_[i] = std::max(a.e_[i], b.e_[i]);
  return m;
}

// ---------------------------------------------------------------- Poly

namespace {

using Terms = std::vector<Poly::Term>;

bool term_less(const Poly::Term& a, const Poly::Term& b) { return a.mono < b.mono; }

// Sorts and merges equal monomials, dropping zeros.
void canonicalize(Terms& t) {
  std::sort(t.begin(), t.end(), term_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    Poly::Term acc = std::move(t[i]);
    std::size_t j = i + 1;
    for (; j < t.size() && t[j].mono == acc.mono; ++j) acc.coeff += t[j].coeff;
    if (acc.coeff != 0) t[out++] = std::move(acc);
    i = j;
  }
  t.resize(out);
}

Terms merge(const Terms& a, const Terms& b, bool subtract) {
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono < a[i].mono) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) {
    terms_.push_back({Monomial{}, c});
    terms_.back().coeff.canonicalize();
  }
}

Poly::Poly(const Monomial& m, const Rational& c) {
  if (c != 0) {
    terms_.push_back({m, c});
    terms_.back().coeff.canonicalize();
  }
}

Poly Poly::var(Param p) { return Poly(Monomial::var(p), Rational(1)); }

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool Poly::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }

std::optional<Rational> Poly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coeff;
  return std::nullopt;
}

bool Poly::contains(Param p) const {
  return std::any_of(terms_.begin(), terms_.end(), [p](const Term& t) { return t.mono.exponent(p) > 0; });
}

unsigned Poly::degree_in(Param p) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(p));
  return d;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

Poly Poly::coeff_in(Param p, unsigned k) const {
  Poly out;
  const Monomial pk = Monomial::var(p, k);
  for (const auto& t : terms_) {
    if (t.mono.exponent(p) == k) out.terms_.push_back({pk.divided_into(t.mono), t.coeff});
  }
  // Removing one variable's exponent can reorder lex keys only by that
  // variable, which is constant here, so order is preserved.
  return out;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return Monomial{};
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_) m = Monomial::gcd(m, t.mono);
  return m;
}

Rational Poly::evaluate(const Bindings& b) const {
  Rational total = 0;
  std::array<const Rational*, kNumParams> vals{};
  for (const auto& t : terms_) {
    Rational term = t.coeff;
    for (std::size_t i = 0; i < kNumParams; ++i) {
      const unsigned e = t.mono.exponents()[i];
      if (e == 0) continue;
      if (vals[i] == nullptr) {
        auto it = b.find(static_cast<Param>(i));
        if (it == b.end()) throw UnboundParameter(static_cast<Param>(i));
        vals[i] = &it->second;
      }
      mpz_class num;
      mpz_class den;
      mpz_pow_ui(num.get_mpz_t(), vals[i]->get_num_mpz_t(), e);
      mpz_pow_ui(den.get_mpz_t(), vals[i]->get_den_mpz_t(), e);
      term *= Rational(num, den);
    }
    total += term;
  }
  total.canonicalize();
  return total;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  if (a.terms_.size() == 1) return b.shifted(a.terms_[0].mono).scaled(a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.shifted(b.terms_[0].mono).scaled(b.terms_[0].coeff);
  Poly out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) out.terms_.push_back({x.mono * y.mono, x.coeff * y.coeff});
  }
  canonicalize(out.terms_);
  return out;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly{};
  if (c == 1) return *this;
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Poly Poly::shifted(const Monomial& m) const {
  if (m.is_one()) return *this;
  Poly out = *this;
  for (auto& t : out.terms_) t.mono = t.mono * m;
  return out;
}

Poly Poly::divided_by_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  Poly out = *this;
  for (auto& t : out.terms_) t.mono = m.divided_into(t.mono);
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw VanishingDenominator("polynomial division by zero");
  if (is_zero()) return Poly{};
  if (d.terms_.size() == 1) {
    const auto& lt = d.terms_[0];
    for (const auto& t : terms_) {
      if (!lt.mono.divides(t.mono)) return std::nullopt;
    }
    return divided_by_monomial(lt.mono).scaled(Rational(1) / lt.coeff);
  }
  const Term& ld = d.leading();
  // Cheap rejection: the leading monomial must be divisible, and per-variable
  // degrees must not be smaller than the divisor's.
  for (std::size_t i = 0; i < kNumParams; ++i) {
    const auto p = static_cast<Param>(i);
    if (d.degree_in(p) > degree_in(p)) return std::nullopt;
  }
  Poly rem = *this;
  Terms quotient;
  while (!rem.is_zero()) {
    const Term& lr = rem.leading();
    if (!ld.mono.divides(lr.mono)) return std::nullopt;
    Term t{ld.mono.divided_into(lr.mono), lr.coeff / ld.coeff};
    rem -= d.shifted(t.mono).scaled(t.coeff);
    quotient.push_back(std::move(t));
  }
  std::reverse(quotient.begin(), quotient.end());
  Poly q;
  q.terms_ = std::move(quotient);
  return q;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Rational lc = leading().coeff;
  if (lc == 1) return *this;
  return scaled(Rational(1) / lc);
}

namespace {

std::string format_monomial(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < kNumParams; ++i) {
    const unsigned e = m.exponents()[i];
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += param_name(static_cast<Param>(i));
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = format_monomial(it->mono);
    if (mono.empty()) {
      s += c.get_str();
    } else if (c == 1) {
      s += mono;
    } else {
      s += c.get_str() + "*" + mono;
    }
  }
  return s;
}

// ---------------------------------------------------------------- gcd

namespace {

std::optional<Param> first_variable(const Poly& a, const Poly& b) {
  for (std::size_t i = 0; i < kNumParams; ++i) {
    const auto p = static_cast<Param>(i);
    if (a.contains(p) || b.contains(p)) return p;
  }
  return std::nullopt;
}

Poly exact(const Poly& a, const Poly& d) {
  auto q = a.divide_exact(d);
  if (!q) throw std::logic_error("inexact polynomial division in gcd");
  return *std::move(q);
}

Poly gcd_core(const Poly& a, const Poly& b);

Poly content_in(const Poly& a, Param v) {
  Poly g;
  const unsigned deg = a.degree_in(v);
  for (unsigned k = 0; k <= deg; ++k) {
    Poly c = a.coeff_in(v, k);
    if (c.is_zero()) continue;
    g = gcd_core(g, c).monic();
    if (g.is_constant()) return Poly(Rational(1));
  }
  return g;
}

Poly primitive_part(const Poly& a, Param v) {
  const Poly c = content_in(a, v);
  return c.is_one() ? a : exact(a, c);
}

// Pseudo-remainder of a by b as polynomials in v.
Poly pseudo_remainder(Poly a, const Poly& b, Param v) {
  const unsigned db = b.degree_in(v);
  const Poly lcb = b.coeff_in(v, db);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const unsigned da = a.degree_in(v);
    const Poly lca = a.coeff_in(v, da);
    a = a * lcb - (lca * b).shifted(Monomial::var(v, da - db));
  }
  return a;
}

Poly gcd_core(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return Poly(Rational(1));
  if (a.monic() == b.monic()) return a;
  const Monomial ma = a.monomial_content();
  const Monomial mb = b.monomial_content();
  if (!ma.is_one() || !mb.is_one()) {
    const Monomial mg = Monomial::gcd(ma, mb);
    return gcd_core(a.divided_by_monomial(ma), b.divided_by_monomial(mb)).shifted(mg);
  }
  const Param v = *first_variable(a, b);
  if (!a.contains(v)) return gcd_core(a, content_in(b, v));
  if (!b.contains(v)) return gcd_core(content_in(a, v), b);

  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  Poly pa = ca.is_one() ? a : exact(a, ca);
  Poly pb = cb.is_one() ? b : exact(b, cb);
  const Poly c = gcd_core(ca, cb);

  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  Poly g;
  while (true) {
    Poly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (!r.contains(v)) {
      g = Poly(Rational(1));
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, v).monic();
  }
  return (c * g).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return gcd_core(a, b).monic();
}

// ---------------------------------------------------------------- Scalar

std::string to_string(const Rational& q) { return q.get_str(); }

std::string rational_to_json_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar::Scalar(const Poly& p) {
  if (auto c = p.as_constant()) {
    v_ = *c;
  } else {
    v_ = Fraction{p, Poly(Rational(1))};
  }
}

Scalar Scalar::fraction(Poly num, Poly den) { return make(std::move(num), std::move(den)); }

Scalar Scalar::make(Poly num, Poly den) {
  if (den.is_zero()) throw VanishingDenominator("zero denominator");
  if (num.is_zero()) return Scalar(Rational(0));
  if (auto c = den.as_constant()) {
    num = num.scaled(Rational(1) / *c);
    return Scalar(num);
  }
  const Monomial m = Monomial::gcd(num.monomial_content(), den.monomial_content());
  if (!m.is_one()) {
    num = num.divided_by_monomial(m);
    den = den.divided_by_monomial(m);
  }
  const Rational lc = den.leading().coeff;
  if (lc != 1) {
    const Rational inv = Rational(1) / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  if (den.is_one()) return Scalar(num);
  if (!den.is_monomial()) {
    if (auto q = num.divide_exact(den)) return Scalar(*q);
  }
  Scalar out;
  out.v_ = Fraction{std::move(num), std::move(den)};
  return out;
}

bool Scalar::is_zero() const {
  const auto* q = if_rational();
  return q != nullptr && *q == 0;
}

bool Scalar::is_one() const {
  const auto* q = if_rational();
  return q != nullptr && *q == 1;
}

std::optional<Rational> Scalar::as_rational() const {
  if (const auto* q = if_rational()) return *q;
  return std::nullopt;
}

std::optional<Integer> Scalar::as_integer() const {
  const auto* q = if_rational();
  if (q == nullptr || q->get_den() != 1) return std::nullopt;
  return q->get_num();
}

std::optional<long> Scalar::as_long() const {
  auto z = as_integer();
  if (!z || !z->fits_slong_p()) return std::nullopt;
  return z->get_si();
}

Poly Scalar::numerator() const {
  if (const auto* q = if_rational()) return Poly(*q);
  return std::get<Fraction>(v_).num;
}

Poly Scalar::denominator() const {
  if (is_rational()) return Poly(Rational(1));
  return std::get<Fraction>(v_).den;
}

bool Scalar::depends_on(Param p) const {
  if (is_rational()) return false;
  const auto& f = std::get<Fraction>(v_);
  return f.num.contains(p) || f.den.contains(p);
}

Scalar Scalar::operator-() const {
  if (const auto* q = if_rational()) return Scalar(Rational(-*q));
  Scalar out = *this;
  auto& f = std::get<Fraction>(out.v_);
  f.num = -f.num;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) += std::get<Rational>(o.v_);
    return *this;
  }
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const Poly n1 = numerator();
  const Poly d1 = denominator();
  const Poly n2 = o.numerator();
  const Poly d2 = o.denominator();
  if (d1 == d2) return *this = make(n1 + n2, d1);
  if (d1.is_one()) return *this = make(n1 * d2 + n2, d2);
  if (d2.is_one()) return *this = make(n1 + n2 * d1, d1);
  if (d1.is_monomial() && d2.is_monomial()) {
    const Monomial l = Monomial::lcm(d1.leading().mono, d2.leading().mono);
    const Monomial s1 = d1.leading().mono.divided_into(l);
    const Monomial s2 = d2.leading().mono.divided_into(l);
    return *this = make(n1.shifted(s1) + n2.shifted(s2), Poly(l, Rational(1)));
  }
  if (auto q = d2.divide_exact(d1)) return *this = make(n1 * *q + n2, d2);
  if (auto q = d1.divide_exact(d2)) return *this = make(n1 + n2 * *q, d1);
  return *this = make(n1 * d2 + n2 * d1, d1 * d2);
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) *= std::get<Rational>(o.v_);
    return *this;
  }
  if (is_zero() || o.is_zero()) return *this = Scalar(0);
  if (const auto* q = o.if_rational()) {
    auto& f = std::get<Fraction>(v_);
    f.num = f.num.scaled(*q);
    return *this;
  }
  if (const auto* q = if_rational()) {
    Scalar out = o;
    auto& f = std::get<Fraction>(out.v_);
    f.num = f.num.scaled(*q);
    return *this = out;
  }
  Poly n1 = numerator();
  Poly d1 = denominator();
  Poly n2 = o.numerator();
  Poly d2 = o.denominator();
  if (!d1.is_monomial() && !d1.is_one()) {
    if (auto q = n2.divide_exact(d1)) {
      n2 = *q;
      d1 = Poly(Rational(1));
    }
  }
  if (!d2.is_monomial() && !d2.is_one()) {
    if (auto q = n1.divide_exact(d2)) {
      n1 = *q;
      d2 = Poly(Rational(1));
    }
  }
  return *this = make(n1 * n2, d1 * d2);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw VanishingDenominator("inverse of zero");
  if (const auto* q = if_rational()) return Scalar(Rational(Rational(1) / *q));
  const auto& f = std::get<Fraction>(v_);
  return make(f.den, f.num);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  auto u = static_cast<unsigned>(e);
  while (u > 0) {
    if (u & 1U) result *= base;
    u >>= 1U;
    if (u > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  const auto* qa = a.if_rational();
  const auto* qb = b.if_rational();
  if (qa != nullptr && qb != nullptr) return *qa == *qb;
  if (qa != nullptr || qb != nullptr) {
    // A non-constant normalized fraction never equals a rational.
    return false;
  }
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

Scalar Scalar::cancel() const {
  if (is_rational()) return *this;
  const auto& f = std::get<Fraction>(v_);
  if (f.den.is_one()) return *this;
  const Poly g = gcd(f.num, f.den);
  if (g.is_one()) return *this;
  auto num = f.num.divide_exact(g);
  auto den = f.den.divide_exact(g);
  if (!num || !den) throw std::logic_error("gcd does not divide");
  return make(*num, *den);
}

Rational Scalar::specialize(const Bindings& b) const {
  if (const auto* q = if_rational()) return *q;
  const auto& f = std::get<Fraction>(v_);
  const Rational den = f.den.evaluate(b);
  if (den == 0) throw VanishingDenominator("denominator vanishes at binding");
  Rational out = f.num.evaluate(b) / den;
  out.canonicalize();
  return out;
}

namespace {

Scalar substitute_poly(const Poly& p, Param v, const Scalar& value) {
  const unsigned deg = p.degree_in(v);
  if (deg == 0) return Scalar(p);
  // Horner in v.
  Scalar acc(p.coeff_in(v, deg));
  for (unsigned k = deg; k-- > 0;) {
    acc = acc * value + Scalar(p.coeff_in(v, k));
  }
  return acc;
}

}  // namespace

Scalar Scalar::substitute(Param p, const Scalar& value) const {
  if (!depends_on(p)) return *this;
  const auto& f = std::get<Fraction>(v_);
  const Scalar num = substitute_poly(f.num, p, value);
  const Scalar den = substitute_poly(f.den, p, value);
  if (den.is_zero()) throw VanishingDenominator("denominator vanishes under substitution");
  return num / den;
}

Scalar Scalar::substitute(const std::map<Param, Scalar>& values) const {
  // Sequential substitution is correct because replaced parameters are
  // removed before the next one is processed only when values are free of
  // earlier keys; substitute simultaneously via fresh evaluation instead.
  if (is_rational()) return *this;
  const auto eval = [&](const Poly& p) {
    Scalar total(0);
    for (const auto& t : p.terms()) {
      Scalar term(t.coeff);
      for (std::size_t i = 0; i < kNumParams; ++i) {
        const unsigned e = t.mono.exponents()[i];
        if (e == 0) continue;
        const auto param = static_cast<Param>(i);
        auto it = values.find(param);
        const Scalar base = it == values.end() ? Scalar::param(param) : it->second;
        term *= base.pow(static_cast<int>(e));
      }
      total += term;
    }
    return total;
  };
  const auto& f = std::get<Fraction>(v_);
  const Scalar den = eval(f.den);
  if (den.is_zero()) throw VanishingDenominator("denominator vanishes under substitution");
  return eval(f.num) / den;
}

std::vector<Scalar> Scalar::coefficients_in(Param p) const {
  if (!depends_on(p)) return {*this};
  const auto& f = std::get<Fraction>(v_);
  if (f.den.contains(p)) {
    throw std::domain_error("denominator depends on " + std::string(param_name(p)));
  }
  std::vector<Scalar> out;
  const unsigned deg = f.num.degree_in(p);
  for (unsigned k = 0; k <= deg; ++k) out.push_back(make(f.num.coeff_in(p, k), f.den));
  return out;
}

std::string Scalar::to_string() const {
  if (const auto* q = if_rational()) return q->get_str();
  const auto& f = std::get<Fraction>(v_);
  if (f.den.is_one()) return f.num.to_string();
  // Clear rational denominators inside the numerator for readability.
  Integer l = 1;
  for (const auto& t : f.num.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  for (const auto& t : f.den.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  const Poly num = f.num.scaled(Rational(l));
  const Poly den = f.den.scaled(Rational(l));
  const auto wrap = [](const Poly& p) {
    const std::string s = p.to_string();
    return p.size() > 1 || (p.size() == 1 && p.leading().coeff != 1 && !p.leading().mono.is_one()) ? "(" + s + ")"
                                                                                                   : s;
  };
  return wrap(num) + "/" + wrap(den);
}

std::vector<Param> parameters_of(const Scalar& s) {
  std::vector<Param> out;
  for (std::size_t i = 0; i < kNumParams; ++i) {
    if (s.depends_on(static_cast<Param>(i))) out.push_back(static_cast<Param>(i));
  }
  return out;
}

Scalar gen_binomial(const Scalar& x, unsigned p) {
  Scalar out(1);
  for (unsigned i = 0; i < p; ++i) {
    out *= (x - Scalar(static_cast<long>(i)));
    out /= Scalar(static_cast<long>(i + 1));
  }
  return out;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse scalar '" + std::string(text_) + "': " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    while (true) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (accept('^')) {
      skip_ws();
      bool neg = accept('-');
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  Scalar primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Scalar v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\'')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      auto p = param_from_name(name);
      if (!p) fail("unknown parameter '" + std::string(name) + "'");
      return Scalar::param(*p);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).parse(); }

}  // namespace hvff

namespace hvff {

CoeffText coefficient_text(const Scalar& c) {
  CoeffText out;
  Scalar v = c;
  if (const auto* q = c.if_rational()) {
    out.negative = *q < 0;
    if (out.negative) v = -c;
  } else {
    const Poly num = c.numerator();
    if (num.is_monomial() && num.leading().coeff < 0) {
      out.negative = true;
      v = -c;
    }
  }
  if (v.is_one()) return out;
  out.text = v.to_string();
  if (!v.is_rational() && v.denominator().is_one() && v.numerator().size() > 1) out.text = "(" + out.text + ")";
  if (!v.is_rational() && !v.denominator().is_one() && v.numerator().size() > 1 && out.text.front() != '(') {
    out.text = "(" + out.text + ")";
  }
  return out;
}

std::string join_terms(const std::vector<std::pair<CoeffText, std::string>>& terms, const std::string& empty) {
  if (terms.empty()) return empty;
  std::string s;
  for (const auto& [c, word] : terms) {
    if (s.empty()) {
      if (c.negative) s += "-";
    } else {
      s += c.negative ? " - " : " + ";
    }
    if (c.text.empty()) {
      s += word.empty() ? "1" : word;
    } else {
      s += c.text;
      if (!word.empty()) s += "*" + word;
    }
  }
  return s;
}

}  // namespace hvff
