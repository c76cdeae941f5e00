#include "hvff/w22.hpp"

#include <algorithm>

namespace hvff {

HighestWeight w22_weight(const HighestWeight& hw) {
  if (hw.algebra != Algebra::HVir) throw AlgebraMismatch("w22_weight needs an HVir weight");
  const Scalar& c = hw.c_LI;
  return HighestWeight::w22(hw.c_L, -24 * c * c, hw.h, hw.h_I * (hw.h_I - 2 * c));
}

Scalar psi_diagonal(int n, const HighestWeight& hw) { return 2 * hw.h_I + 2 * Scalar(n - 1) * hw.c_LI; }

ModePoly psi_poly(int n, const HighestWeight& hw) {
  if (n < 1) throw PreconditionViolated("psi_poly needs n >= 1");
  ModePoly out = ModePoly::var(n, psi_diagonal(n, hw));
  for (int i = 1; i < n; ++i) out += ModePoly::var(i) * ModePoly::var(n - i);
  return out;
}

ModePoly psi(const ModePoly& w, const HighestWeight& hw) {
  return w.compose([&](int n) { return psi_poly(n, hw); });
}

namespace {

std::vector<ModePoly> inverse_table(int n, const HighestWeight& hw) {
  std::vector<ModePoly> inv(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    const Scalar d = psi_diagonal(k, hw);
    if (d.is_zero()) {
      throw PsiNotInvertible("2c_LI(h_I/c_LI - 1 + " + std::to_string(k) + ") vanishes");
    }
    ModePoly rest = ModePoly::var(k);
    for (int i = 1; i < k; ++i) rest -= inv[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(k - i)];
    inv[static_cast<std::size_t>(k)] = rest.scaled(d.inverse());
  }
  return inv;
}

}  // namespace

ModePoly psi_inverse_poly(int n, const HighestWeight& hw) {
  if (n < 1) throw PreconditionViolated("psi_inverse_poly needs n >= 1");
  return inverse_table(n, hw)[static_cast<std::size_t>(n)];
}

ModePoly psi_inverse(const ModePoly& i, const HighestWeight& hw) {
  int top = 0;
  for (const auto& [part, c] : i.terms()) {
    if (!part.empty()) top = std::max(top, part.front());
  }
  const auto inv = inverse_table(top, hw);
  return i.compose([&](int n) { return inv[static_cast<std::size_t>(n)]; });
}

ModePoly to_mode_poly(const VermaVector& v) {
  ModePoly out;
  for (const auto& [m, c] : v.terms()) {
    if (!m.l.empty()) throw PreconditionViolated("vector has L-factors: " + v.to_string());
    out.add(m.a, c);
  }
  return out;
}

VermaVector from_mode_poly(const ModePoly& p, Algebra alg) {
  VermaVector out(alg);
  for (const auto& [part, c] : p.terms()) out.add(PBWMonomial{part, {}}, c);
  return out;
}

VermaVector psi_generator(const Generator& g, const HighestWeight& hw) {
  if (g.algebra != Algebra::W22 || g.mode >= 0 || (g.kind != GenKind::W && g.kind != GenKind::L)) {
    throw PreconditionViolated("psi_generator needs W(-n) or L(-n), got " + g.to_string());
  }
  if (g.kind == GenKind::L) return VermaVector::monomial(Algebra::HVir, PBWMonomial{{}, {-g.mode}});
  return from_mode_poly(psi_poly(-g.mode, hw), Algebra::HVir);
}

VermaVector w_image(int m, const VermaModule& mod, const VermaVector& u) {
  if (mod.algebra() != Algebra::HVir) throw AlgebraMismatch("w_image acts on HVir Verma modules");
  int top = 0;
  for (const auto& [mono, c] : u.terms()) top = std::max(top, mono.grade());
  // I(j) and I(m - j) commute; either one above the top grade kills u.
  VermaVector out = mod.apply(Generator::I(m), u).scaled(2 * Scalar(-m - 1) * mod.weight().c_LI);
  for (int j = m - top; j <= top; ++j) {
    const VermaVector inner = mod.apply(Generator::I(m - j), u);
    if (!inner.is_zero()) out += mod.apply(Generator::I(j), inner);
  }
  return out;
}

VermaVector psi_vector(const VermaVector& w, const VermaModule& hvir) {
  if (w.algebra() != Algebra::W22) throw AlgebraMismatch("psi_vector needs a W(2,2) vector");
  VermaVector out(Algebra::HVir);
  for (const auto& [m, c] : w.terms()) {
    VermaVector cur = hvir.highest();
    for (auto it = m.l.rbegin(); it != m.l.rend(); ++it) cur = hvir.apply(Generator::L(-*it), cur);
    for (auto it = m.a.rbegin(); it != m.a.rend(); ++it) cur = w_image(-*it, hvir, cur);
    out += cur.scaled(c);
  }
  return out;
}

Matrix psi_matrix(const HighestWeight& hw, int grade) {
  const auto parts = partitions(grade);
  Matrix m(parts.size(), ScalarVec(parts.size()));
  for (std::size_t j = 0; j < parts.size(); ++j) {
    ModePoly mono;
    mono.add(parts[j], Scalar(1));
    const ModePoly img = psi(mono, hw);
    for (std::size_t i = 0; i < parts.size(); ++i) m[i][j] = img.coeff(parts[i]);
  }
  return m;
}

namespace {

std::string count_detail(int bad, int total) {
  return std::to_string(total - bad) + "/" + std::to_string(total) + " identities hold";
}

}  // namespace

Report verify_embedding(const Scalar& c, int N) {
  Report rep;
  rep.command = "w22-embedding";
  rep.params = {{"c_LI", c.to_string()}, {"N", std::to_string(N)}};
  const Scalar cL = Scalar::param(Param::c_L);
  const VermaModule vac(HighestWeight::hvir(cL, c, Scalar(0), Scalar(0)));
  const VermaVector one = vac.highest();
  VermaVector w = vac.vector(PBWMonomial{{1, 1}, {}});
  w.add(PBWMonomial{{2}, {}}, 2 * c);
  rep.add("w-state", "embedding: w = (I(-1)^2 + 2c_LI I(-2))1", w_image(-2, vac, one) == w, w.to_string());
  rep.add("w-weight", "embedding: L(0)w = 2w", vac.apply(Generator::L(0), w) == w.scaled(Scalar(2)));
  rep.add("w-primary", "embedding: L(1)w = 0", vac.apply(Generator::L(1), w).is_zero());
  const VermaVector l2 = vac.apply(Generator::L(2), w);
  rep.add("w-l2", "embedding: L(2)w = -12c_LI^2 1", l2 == one.scaled(-12 * c * c), l2.to_string());

  // brackets of the images on a generic module
  const HighestWeight hw = HighestWeight::hvir(cL, c, Scalar::param(Param::h), Scalar::param(Param::h_I));
  const VermaModule mod(hw);
  const Scalar cW = -24 * c * c;
  rep.add("w-zero-mode", "embedding: W(0)v = h_I(h_I - 2c_LI)v",
          w_image(0, mod, mod.highest()) == mod.highest().scaled(w22_weight(hw).h_W));
  int bad_ww = 0, bad_lw = 0, total_ww = 0, total_lw = 0;
  const int M = 3;
  for (int g = 0; g <= N; ++g) {
    for (const auto& b : mod.basis(g)) {
      const VermaVector u = mod.vector(b);
      for (int n = -M; n <= M; ++n) {
        for (int m = -M; m <= M; ++m) {
          if (n < m) {
            ++total_ww;
            if (!(w_image(n, mod, w_image(m, mod, u)) == w_image(m, mod, w_image(n, mod, u)))) ++bad_ww;
          }
          ++total_lw;
          VermaVector lhs = mod.apply(Generator::L(n), w_image(m, mod, u)) - w_image(m, mod, mod.apply(Generator::L(n), u));
          VermaVector rhs = w_image(n + m, mod, u).scaled(Scalar(n - m));
          if (n + m == 0) rhs += u.scaled(Scalar(n * n * n - n) / 12 * cW);
          if (!(lhs == rhs)) ++bad_lw;
        }
      }
    }
  }
  rep.add("w-commute", "[W(n), W(m)] = 0 on grade <= N, |n|,|m| <= 3", bad_ww == 0, count_detail(bad_ww, total_ww));
  rep.add("lw-bracket", "[L(n), W(m)] = (n-m)W(n+m) + delta (n^3-n)/12 c_W, c_W = -24c_LI^2", bad_lw == 0,
          count_detail(bad_lw, total_lw));
  return rep;
}

VermaVector w22_singular(int p, const Scalar& c_L, const Scalar& h, const Scalar& c_LI) {
  if (p < 1) throw PreconditionViolated("p must be positive");
  const HighestWeight hw = HighestWeight::hvir(c_L, c_LI, h, Scalar(p + 1) * c_LI);
  const ModePoly s = to_mode_poly(schur_singular(hw, p));
  return from_mode_poly(psi_inverse(s, hw), Algebra::W22).normalized();
}

Report verify_w22(int p_max, int N) {
  Report rep;
  rep.command = "w22";
  rep.params = {{"p", std::to_string(p_max)}, {"N", std::to_string(N)}};
  const Scalar c = Scalar::param(Param::c_LI), cL = Scalar::param(Param::c_L), h = Scalar::param(Param::h);
  const HighestWeight h3 = HighestWeight::hvir(cL, c, h, 3 * c);
  const auto img = [&](int n, const HighestWeight& hw) { return psi_generator(Generator::W(-n), hw); };
  {
    VermaVector w2 = VermaVector::monomial(Algebra::HVir, PBWMonomial{{2}, {}}, 8 * c);
    w2.add(PBWMonomial{{1, 1}, {}}, Scalar(1));
    const bool ok = img(1, h3) == VermaVector::monomial(Algebra::HVir, PBWMonomial{{1}, {}}, 6 * c) &&
                    img(2, h3) == w2 &&
                    img(1, HighestWeight::hvir(cL, c, h, Scalar(0))).is_zero();
    rep.add("psi-examples", "Psi(W(-1)) = 6c_LI I(-1), Psi(W(-2)) = 8c_LI I(-2) + I(-1)^2 at h_I = 3c_LI", ok);
  }
  // u_2 and its image
  const HighestWeight w3 = w22_weight(h3);
  VermaVector u2 = VermaVector::monomial(Algebra::W22, PBWMonomial{{2}, {}});
  u2.add(PBWMonomial{{1, 1}, {}}, 6 / w3.c_W);
  VermaVector expect = VermaVector::monomial(Algebra::HVir, PBWMonomial{{2}, {}}, 8 * c);
  expect.add(PBWMonomial{{1, 1}, {}}, Scalar(-8));
  const VermaModule mod3(h3);
  const VermaVector psi_u2 = psi_vector(u2, mod3);
  rep.add("psi-u2", "Psi(u_2) = 8c_LI(I(-2) - I(-1)^2/c_LI)v", psi_u2 == expect, psi_u2.to_string());
  rep.add("psi-u2-poly", "Psi(u_2) via the ring map agrees with operator images",
          from_mode_poly(psi(to_mode_poly(u2), h3), Algebra::HVir) == psi_u2);
  const VermaVector s2 = w22_singular(2, cL, h, c);
  rep.add("w22-singular-u2", "w22_singular(2) = (W(-2) + (6/c_W)W(-1)^2)v", s2 == u2 && s2.proportional_to(u2),
          s2.to_string());

  for (int p = 1; p <= p_max; ++p) {
    const HighestWeight hv = HighestWeight::hvir(cL, c, h, Scalar(p + 1) * c);
    const HighestWeight hw = w22_weight(hv);
    const VermaVector s = w22_singular(p, cL, h, c);
    const VermaModule wmod(hw);
    const bool sing = is_singular(wmod, s) && s.grade() == p;
    const bool pull = psi_vector(s, VermaModule(hv)).proportional_to(schur_singular(hv, p));
    rep.add("w22-singular-p" + std::to_string(p), "W(2,2) singular vector, h_W/c_W = (1-p^2)/24", sing && pull,
            s.to_string());
    rep.add("w22-ratio-p" + std::to_string(p), "h_W/c_W = (1-p^2)/24 at h_I = (1+p)c_LI and (1-p)c_LI",
            hw.h_W / hw.c_W == Scalar::ratio(1 - p * p, 24) &&
                w22_weight(HighestWeight::hvir(cL, c, h, Scalar(1 - p) * c)).h_W / hw.c_W == Scalar::ratio(1 - p * p, 24));
  }
  {
    // h_W/c_W = (1 - (h_I/c_LI - 1)^2)/24 identically
    const HighestWeight gen = HighestWeight::hvir(cL, c, h, Scalar::param(Param::h_I));
    const HighestWeight gw = w22_weight(gen);
    const Scalar x = gen.h_I / c - 1;
    rep.add("w22-ratio-identity", "h_W/c_W = (1 - (h_I/c_LI - 1)^2)/24", gw.h_W / gw.c_W == (1 - x * x) / 24);

    bool inv = true;
    std::string detail;
    for (int g = 1; g <= N; ++g) {
      const Matrix m = psi_matrix(gen, g);
      if (rank(m) != m.size()) {
        inv = false;
        detail = "rank deficient at grade " + std::to_string(g);
      }
    }
    rep.add("psi-invertible", "Psi restricted to W-polynomials is invertible for generic h_I", inv, detail);
    bool singular_at_root = true;
    for (int p = 1; p <= 3; ++p) {
      const HighestWeight bad = HighestWeight::hvir(cL, c, h, Scalar(1 - p) * c);
      const Matrix m = psi_matrix(bad, p);
      singular_at_root = singular_at_root && rank(m) < m.size();
    }
    rep.add("psi-degenerate", "Psi degenerates on grade p when h_I/c_LI - 1 = -p", singular_at_root);
  }
  rep.merge(verify_embedding(c, std::min(N, 4)));
  return rep;
}

}  // namespace hvff
