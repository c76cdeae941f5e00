#include "hvff/fock.hpp"

#include <algorithm>
#include <mutex>

#include "hvff/fusion.hpp"
#include "hvff/schur.hpp"

namespace hvff {

std::string LatticeVec::to_string() const { return "(" + x.to_string() + ")α+(" + y.to_string() + ")β"; }

Scalar FockParams::c_L() const { return Scalar(2) - 12 * (lambda * lambda - mu * mu); }
Scalar FockParams::c_LI() const { return lambda - mu; }
Scalar FockParams::h() const { return delta(r, s, lambda, mu); }
Scalar FockParams::h_I() const { return r - s; }

HighestWeight FockParams::weight() const { return HighestWeight::hvir(c_L(), c_LI(), h(), h_I()); }

FockParams FockParams::specialized(const Bindings& b) const {
  return {Scalar(lambda.specialize(b)), Scalar(mu.specialize(b)), Scalar(r.specialize(b)), Scalar(s.specialize(b))};
}

namespace {

void append_osc(std::string& s, const char* name, const Partition& p) {
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    s += name;
    s += "(" + std::to_string(-p[i]) + ")";
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
}

void add_term(FockVector::Terms& t, const FockMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

}  // namespace

std::string FockMonomial::to_string() const {
  std::string s;
  append_osc(s, "α", alpha);
  append_osc(s, "β", beta);
  return s;
}

FockVector::FockVector(FockParams params, Terms terms) : params_(std::move(params)) {
  for (auto& [m, c] : terms) add(m, c);
}

FockVector FockVector::top(const FockParams& params, Scalar c) { return monomial(params, FockMonomial{}, c); }

FockVector FockVector::monomial(const FockParams& params, FockMonomial m, Scalar c) {
  FockVector v(params);
  v.add(m, c);
  return v;
}

Scalar FockVector::coeff(const FockMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<int> FockVector::grade() const {
  if (terms_.empty()) return std::nullopt;
  const int g = terms_.begin()->first.grade();
  for (const auto& [m, c] : terms_) {
    if (m.grade() != g) return std::nullopt;
  }
  return g;
}

int FockVector::max_grade() const {
  int g = 0;
  for (const auto& [m, c] : terms_) g = std::max(g, m.grade());
  return g;
}

void FockVector::add(const FockMonomial& m, const Scalar& c) { add_term(terms_, m, c); }

FockVector FockVector::scaled(const Scalar& c) const {
  FockVector out(params_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (is_zero() && !o.is_zero()) params_ = o.params_;
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  if (is_zero() && !o.is_zero()) params_ = o.params_;
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

bool operator==(const FockVector& a, const FockVector& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.is_zero()) return true;
  if (!(a.params_.point() == b.params_.point())) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (it->first != m || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

std::string FockVector::to_string() const {
  const std::string top = "e^{" + params_.point().to_string() + "}";
  std::vector<std::pair<FockMonomial, Scalar>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.grade() != b.first.grade()) return a.first.grade() > b.first.grade();
    return a.first > b.first;
  });
  std::vector<std::pair<CoeffText, std::string>> parts;
  for (const auto& [m, c] : sorted) parts.emplace_back(coefficient_text(c), m.to_string() + top);
  return join_terms(parts);
}

std::vector<FockMonomial> fock_basis(int grade) {
  std::vector<FockMonomial> out;
  for (int k = 0; k <= grade; ++k) {
    for (const auto& a : partitions(k)) {
      for (const auto& b : partitions(grade - k)) out.push_back(FockMonomial{a, b});
    }
  }
  return out;
}

std::pair<Scalar, Scalar> fock_params_for(const Scalar& h, const Scalar& h_I, const Scalar& lambda, const Scalar& mu) {
  const Scalar c = lambda - mu;
  if ((h_I - c).is_zero()) throw PreconditionViolated("h_I = c_LI has no unique lattice point");
  const Scalar r = (h + h_I * h_I / 2 + mu * h_I) / (h_I - c);
  return {r, r - h_I};
}

FockParams dual_params(const FockParams& p) {
  return {p.lambda, p.mu, 2 * p.lambda - p.r, 2 * p.mu - p.s};
}

// ---------------------------------------------------------------- oscillators

namespace {

// Oscillator applied to each term of `in`, scaled, accumulated into out.
void osc_terms(Osc kind, int n, const FockParams& params, const FockVector::Terms& in, const Scalar& scale,
               FockVector::Terms& out) {
  if (scale.is_zero()) return;
  if (n == 0) {
    const Scalar v = (kind == Osc::Alpha ? params.r : -params.s) * scale;
    for (const auto& [m, c] : in) add_term(out, m, c * v);
    return;
  }
  for (const auto& [m, c] : in) {
    const Partition& part = kind == Osc::Alpha ? m.alpha : m.beta;
    FockMonomial mm = m;
    Partition& target = kind == Osc::Alpha ? mm.alpha : mm.beta;
    if (n < 0) {
      target = with_part(part, -n);
      add_term(out, mm, c * scale);
    } else {
      const auto k = multiplicity(part, n);
      if (k == 0) continue;
      target = without_part(part, n);
      const long f = static_cast<long>(n) * static_cast<long>(k) * (kind == Osc::Alpha ? 1 : -1);
      add_term(out, mm, c * scale * Scalar(f));
    }
  }
}

FockVector::Terms osc(Osc kind, int n, const FockParams& params, const FockVector::Terms& in) {
  FockVector::Terms out;
  osc_terms(kind, n, params, in, Scalar(1), out);
  return out;
}

void gamma_terms(const LatticeVec& g, int n, const FockParams& params, const FockVector::Terms& in,
                 const Scalar& scale, FockVector::Terms& out) {
  if (!g.x.is_zero()) osc_terms(Osc::Alpha, n, params, in, g.x * scale, out);
  if (!g.y.is_zero()) osc_terms(Osc::Beta, n, params, in, g.y * scale, out);
}

// Sugawara-type part of L(n) on the terms of one Fock module.
FockVector::Terms virasoro(int n, const FockParams& params, const FockVector::Terms& in) {
  FockVector::Terms out;
  if (in.empty()) return out;
  int grade = 0;
  for (const auto& [m, c] : in) grade = std::max(grade, m.grade());
  const Scalar half(Rational(1, 2));
  for (int j = n - grade; j <= grade; ++j) {
    const int right = std::max(j, n - j);
    const int left = std::min(j, n - j);
    const auto a = osc(Osc::Alpha, right, params, in);
    if (!a.empty()) osc_terms(Osc::Alpha, left, params, a, half, out);
    const auto b = osc(Osc::Beta, right, params, in);
    if (!b.empty()) osc_terms(Osc::Beta, left, params, b, -half, out);
  }
  osc_terms(Osc::Alpha, n, params, in, -params.lambda * Scalar(n + 1), out);
  osc_terms(Osc::Beta, n, params, in, -params.mu * Scalar(n + 1), out);
  return out;
}

}  // namespace

FockVector act_osc(Osc kind, int n, const FockVector& w) {
  return FockVector(w.params(), osc(kind, n, w.params(), w.terms()));
}

FockVector act_gamma(const LatticeVec& g, int n, const FockVector& w) {
  FockVector::Terms out;
  gamma_terms(g, n, w.params(), w.terms(), Scalar(1), out);
  return FockVector(w.params(), std::move(out));
}

FockVector act_hvir(const Generator& g, const FockVector& w) {
  g.validate();
  if (g.algebra != Algebra::HVir) throw AlgebraMismatch("Fock modules carry the HVir action");
  const FockParams& p = w.params();
  switch (g.kind) {
    case GenKind::L: return FockVector(p, virasoro(g.mode, p, w.terms()));
    case GenKind::I: {
      FockVector::Terms out;
      osc_terms(Osc::Alpha, g.mode, p, w.terms(), Scalar(1), out);
      osc_terms(Osc::Beta, g.mode, p, w.terms(), Scalar(1), out);
      return FockVector(p, std::move(out));
    }
    case GenKind::C_L: return w.scaled(p.c_L());
    case GenKind::C_LI: return w.scaled(p.c_LI());
    case GenKind::C_I: return FockVector(p);
    default: throw AlgebraMismatch("not an HVir generator");
  }
}

FockVector verma_to_fock(const VermaVector& u, const FockParams& params) {
  if (u.algebra() != Algebra::HVir) throw AlgebraMismatch("only HVir vectors map to Fock modules");
  FockVector out(params);
  for (const auto& [m, c] : u.terms()) {
    FockVector cur = FockVector::top(params, c);
    for (auto it = m.l.rbegin(); it != m.l.rend(); ++it) cur = act_hvir(Generator::L(-*it), cur);
    for (auto it = m.a.rbegin(); it != m.a.rend(); ++it) cur = act_hvir(Generator::I(-*it), cur);
    out += cur;
  }
  return out;
}

// ---------------------------------------------------------------- vertex operators

namespace {

const SchurPoly& cached_schur(int r) {
  static std::mutex mu;
  static std::map<int, SchurPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, schur_gen(r)).first;
  return it->second;
}

// S_r(c_1 gamma(sign*1), c_1 gamma(sign*2), ...) applied to terms.
FockVector::Terms schur_gamma(int r, const LatticeVec& g, int sign, const FockParams& params,
                              const FockVector::Terms& in) {
  FockVector::Terms out;
  for (const auto& [part, coeff] : cached_schur(r).terms()) {
    FockVector::Terms cur = in;
    for (auto it = part.rbegin(); it != part.rend() && !cur.empty(); ++it) {
      FockVector::Terms next;
      // Annihilation side carries x_n = -gamma(n).
      gamma_terms(g, sign * *it, params, cur, Scalar(sign > 0 ? -1 : 1), next);
      cur = std::move(next);
    }
    for (const auto& [m, c] : cur) add_term(out, m, c * Scalar(coeff));
  }
  return out;
}

}  // namespace

FockVector vertex_component(const LatticeVec& gamma, int k, const FockVector& w) {
  const FockParams& p = w.params();
  const Scalar pairing = gamma.pair(p.point());
  const auto n0 = pairing.as_long();
  if (!n0) throw PreconditionViolated("<gamma, delta> = " + pairing.to_string() + " is not an integer");
  const FockParams target = p.at(p.point() + gamma);
  FockVector out(target);
  const int grade = w.max_grade();
  for (int b = 0; b <= grade; ++b) {
    const long a = b - k - 1 - *n0;
    if (a < 0) continue;
    const auto annihilated = schur_gamma(b, gamma, +1, p, w.terms());
    if (annihilated.empty()) continue;
    // The creation part does not see the lattice point, so params are irrelevant here.
    const auto created = schur_gamma(static_cast<int>(a), gamma, -1, target, annihilated);
    out += FockVector(target, created);
  }
  return out;
}

LatticeVec screening_momentum(const FockParams& p) {
  const Scalar f = -p.c_LI().inverse();
  return {f, f};
}

FockVector screening_Q(const FockVector& w) {
  const FockParams& p = w.params();
  const Scalar ratio = p.h_I() / p.c_LI();
  if (!ratio.as_integer()) throw PreconditionViolated("Q needs h_I/c_LI integral, got " + ratio.to_string());
  return vertex_component(screening_momentum(p), 0, w);
}

Matrix screening_matrix(const FockParams& params, int grade) {
  const auto src = fock_basis(grade);
  const Scalar shift = params.h_I() / params.c_LI() - 1;
  const long target_grade = grade + *shift.as_long();
  if (target_grade < 0) return Matrix{};
  const auto dst = fock_basis(static_cast<int>(target_grade));
  std::map<FockMonomial, std::size_t> row;
  for (std::size_t i = 0; i < dst.size(); ++i) row.emplace(dst[i], i);
  Matrix m(dst.size(), ScalarVec(src.size()));
  for (std::size_t j = 0; j < src.size(); ++j) {
    const FockVector img = screening_Q(FockVector::monomial(params, src[j]));
    for (const auto& [mono, c] : img.terms()) m[row.at(mono)][j] = c;
  }
  return m;
}

std::vector<std::size_t> kernel_Q_dims(const FockParams& params, int max_grade) {
  const Scalar ratio = params.h_I() / params.c_LI();
  if (!ratio.as_integer()) throw PreconditionViolated("Q needs h_I/c_LI integral");
  std::vector<std::size_t> out;
  for (int g = 0; g <= max_grade; ++g) {
    const Matrix m = screening_matrix(params, g);
    const std::size_t dim = fock_basis(g).size();
    out.push_back(m.empty() ? dim : dim - rank(m));
  }
  return out;
}

FockVector cosingular_solve(const FockParams& params, int n, int p) {
  if (n < 1 || p < 1) throw PreconditionViolated("n and p must be positive");
  if (!(params.h_I() / params.c_LI() - 1 == Scalar(-p))) {
    throw PreconditionViolated("cosingular vectors need h_I/c_LI - 1 = -p");
  }
  const int grade = n * p;
  const auto src = fock_basis(grade);
  const LatticeVec phi = screening_momentum(params);
  const FockParams target = params.at(params.point() + phi.scaled(Scalar(n)));
  Matrix m(1, ScalarVec(src.size()));
  for (std::size_t j = 0; j < src.size(); ++j) {
    FockVector img = FockVector::monomial(params, src[j]);
    for (int i = 0; i < n && !img.is_zero(); ++i) img = screening_Q(img);
    if (!img.is_zero() && !(img.params().point() == target.point())) throw std::logic_error("Q^n landed elsewhere");
    m[0][j] = img.coeff(FockMonomial{});
  }
  auto x = solve(m, {Scalar(1)}, src.size());
  if (!x) throw std::runtime_error("no cosingular vector found");
  FockVector out(params);
  for (std::size_t j = 0; j < src.size(); ++j) out.add(src[j], (*x)[j]);
  return out;
}

Scalar contragredient_pairing(const FockVector& dual_vec, const FockVector& w) {
  if (!(dual_params(w.params()).point() == dual_vec.params().point())) {
    throw PreconditionViolated("pairing needs the dual lattice point");
  }
  Scalar total;
  for (const auto& [m, c] : dual_vec.terms()) {
    // <alpha(-n) w', w> = <w', -alpha(n) w>, likewise for beta.
    FockVector::Terms cur;
    for (const auto& [m2, c2] : w.terms()) {
      if (m2.grade() == m.grade()) add_term(cur, m2, c2);
    }
    for (int part : m.alpha) {
      FockVector::Terms next;
      osc_terms(Osc::Alpha, part, w.params(), cur, Scalar(-1), next);
      cur = std::move(next);
    }
    for (int part : m.beta) {
      FockVector::Terms next;
      osc_terms(Osc::Beta, part, w.params(), cur, Scalar(-1), next);
      cur = std::move(next);
    }
    auto it = cur.find(FockMonomial{});
    if (it != cur.end()) total += c * it->second;
  }
  return total;
}

}  // namespace hvff
