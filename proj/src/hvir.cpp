#include "hvff/hvir.hpp"

namespace hvff {

Generator Generator::central(GenKind k) {
  const Algebra a = (k == GenKind::C || k == GenKind::C_W) ? Algebra::W22 : Algebra::HVir;
  return {a, k, 0};
}

bool Generator::is_central() const {
  return kind != GenKind::L && kind != GenKind::I && kind != GenKind::W;
}

void Generator::validate() const {
  const bool hvir_only = kind == GenKind::I || kind == GenKind::C_L || kind == GenKind::C_LI || kind == GenKind::C_I;
  const bool w22_only = kind == GenKind::W || kind == GenKind::C || kind == GenKind::C_W;
  if ((algebra == Algebra::HVir && w22_only) || (algebra == Algebra::W22 && hvir_only)) {
    throw AlgebraMismatch("generator " + to_string() + " does not belong to this algebra");
  }
  if (is_central() && mode != 0) throw std::invalid_argument("central generators carry no mode");
}

std::string Generator::to_string() const {
  switch (kind) {
    case GenKind::L: return "L(" + std::to_string(mode) + ")";
    case GenKind::I: return "I(" + std::to_string(mode) + ")";
    case GenKind::W: return "W(" + std::to_string(mode) + ")";
    case GenKind::C_L: return "C_L";
    case GenKind::C_LI: return "C_LI";
    case GenKind::C_I: return "C_I";
    case GenKind::C: return "C";
    case GenKind::C_W: return "C_W";
  }
  return "?";
}

LieElement::LieElement(const Generator& g, Scalar coeff) : algebra_(g.algebra) {
  g.validate();
  add(g, coeff);
}

Scalar LieElement::coeff(const Generator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void LieElement::add(const Generator& g, const Scalar& c) {
  if (c.is_zero()) return;
  if (g.algebra != algebra_) throw AlgebraMismatch("mixed algebra tags");
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  if (o.algebra_ != algebra_ && !o.is_zero()) {
    if (!is_zero()) throw AlgebraMismatch("mixed algebra tags");
    algebra_ = o.algebra_;
  }
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) { return *this += -o; }

LieElement LieElement::operator-() const {
  LieElement out = *this;
  for (auto& [g, c] : out.terms_) c = -c;
  return out;
}

LieElement operator*(const Scalar& c, const LieElement& x) {
  LieElement out(x.algebra_);
  if (c.is_zero()) return out;
  for (const auto& [g, v] : x.terms_) out.terms_.emplace(g, c * v);
  return out;
}

bool operator==(const LieElement& a, const LieElement& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
}

std::string LieElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [g, c] : terms_) {
    std::string cs = c.to_string();
    const bool neg = !cs.empty() && cs[0] == '-' && c.is_rational();
    if (neg) cs.erase(0, 1);
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    if (cs != "1") s += (c.is_rational() ? cs : "(" + cs + ")") + "*";
    s += g.to_string();
  }
  return s;
}

LieElement bracket(const Generator& x, const Generator& y) {
  x.validate();
  y.validate();
  if (x.algebra != y.algebra) throw AlgebraMismatch("bracket of generators from different algebras");
  const Algebra alg = x.algebra;
  LieElement out(alg);
  if (x.is_central() || y.is_central()) return out;
  const long n = x.mode;
  const long m = y.mode;
  const bool opposite = n + m == 0;
  const auto k = [&](GenKind kind) { return Generator{alg, kind, 0}; };

  if (x.kind == GenKind::L && y.kind == GenKind::L) {
    out.add(Generator{alg, GenKind::L, static_cast<int>(n + m)}, Scalar(n - m));
    if (opposite) out.add(k(alg == Algebra::HVir ? GenKind::C_L : GenKind::C), Scalar(Rational(n * n * n - n, 12)));
    return out;
  }
  if (x.kind == GenKind::L && (y.kind == GenKind::I || y.kind == GenKind::W)) {
    if (y.kind == GenKind::I) {
      out.add(Generator::I(static_cast<int>(n + m)), Scalar(-m));
      if (opposite) out.add(k(GenKind::C_LI), Scalar(-(n * n + n)));
    } else {
      out.add(Generator::W(static_cast<int>(n + m)), Scalar(n - m));
      if (opposite) out.add(k(GenKind::C_W), Scalar(Rational(n * n * n - n, 12)));
    }
    return out;
  }
  if (y.kind == GenKind::L) return -bracket(y, x);
  if (x.kind == GenKind::I && y.kind == GenKind::I) {
    if (opposite) out.add(k(GenKind::C_I), Scalar(n));
    return out;
  }
  // [W, W] = 0
  return out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  if (!x.is_zero() && !y.is_zero() && x.algebra() != y.algebra()) {
    throw AlgebraMismatch("bracket of elements from different algebras");
  }
  LieElement out(x.is_zero() ? y.algebra() : x.algebra());
  for (const auto& [g, a] : x.terms()) {
    for (const auto& [h, b] : y.terms()) out += (a * b) * bracket(g, h);
  }
  return out;
}

}  // namespace hvff
