#include "hvff/tensor.hpp"

namespace hvff {

Scalar phi(const Scalar& n, const PBWMonomial& m, const IntermediateParams& prm) {
  Scalar out(1);
  int k = 0;
  for (auto it = m.l.rbegin(); it != m.l.rend(); ++it) {
    const Scalar i(*it);
    out *= prm.a + prm.b + Scalar(k) + i + n - i * prm.b;
    k += *it;
  }
  for (auto it = m.a.rbegin(); it != m.a.rend(); ++it) out *= -prm.F;
  return out;
}

Scalar phi(const Scalar& n, const VermaVector& u, const IntermediateParams& prm) {
  if (u.algebra() != Algebra::HVir) throw AlgebraMismatch("phi is defined on HVir words");
  Scalar out;
  for (const auto& [m, c] : u.terms()) out += c * phi(n, m, prm);
  return out;
}

Scalar phi_omega_closed(int p, const Scalar& F, const Scalar& c_LI) {
  const Scalar v = gen_binomial(-F / c_LI, static_cast<unsigned>(p));
  return p % 2 == 0 ? v : -v;
}

Scalar phi_omega(int p, const Scalar& F, const Scalar& c_LI) {
  if (p < 1) throw PreconditionViolated("phi_omega needs p >= 1");
  const HighestWeight hw =
      HighestWeight::hvir(Scalar::param(Param::c_L), c_LI, Scalar::param(Param::h), Scalar(p + 1) * c_LI);
  const VermaVector omega = schur_singular(hw, p);
  const IntermediateParams prm{Scalar::param(Param::a), Scalar::param(Param::b), F};
  const Scalar v = phi(Scalar::param(Param::n), omega, prm);
  if (v.depends_on(Param::n)) throw std::logic_error("phi_n(Omega) depends on n");
  return v;
}

PositiveVerdict irreducible_pos(int p, const Scalar& F, const Scalar& c_LI) {
  if (p < 1) throw PreconditionViolated("irreducible_pos needs p >= 1");
  PositiveVerdict out;
  out.phi_omega = phi_omega(p, F, c_LI);
  for (int i = 1; i <= p; ++i) {
    if (F == Scalar(i - p) * c_LI) {
      out.irreducible = false;
      out.witness = i;
      break;
    }
  }
  if (out.irreducible == out.phi_omega.is_zero()) throw std::logic_error("zero locus disagrees with phi_n(Omega)");
  return out;
}

std::string to_string(NegativeCase c) {
  switch (c) {
    case NegativeCase::Generic: return "generic";
    case NegativeCase::AlwaysReducible: return "always_reducible";
    case NegativeCase::Boundary: return "boundary";
  }
  return "?";
}

Scalar phi_lambda_leading(int p, const Scalar& n, const IntermediateParams& prm, const Scalar& c_LI) {
  const Scalar r = prm.F / c_LI;
  const auto e = static_cast<unsigned>(p - 1);
  const Scalar v = gen_binomial(r - 1, e) * (prm.a + n + prm.b) + (1 - prm.b) * gen_binomial(r - 2, e);
  return p % 2 == 1 ? v : -v;
}

namespace {

void check_negative(int p, const HighestWeight& hw) {
  if (p < 1) throw PreconditionViolated("p must be positive");
  if (hw.algebra != Algebra::HVir) throw AlgebraMismatch("needs an HVir weight");
  if (!(hw.p_value() == Scalar(-p))) throw PreconditionViolated("needs h_I/c_LI - 1 = -p");
}

}  // namespace

Scalar extract_g_p(int p, const HighestWeight& hw, const Scalar& F, const SolveOptions& opts) {
  check_negative(p, hw);
  const VermaVector lam = lambda_neg(hw, p, opts);
  const Scalar n = Scalar::param(Param::n);
  const IntermediateParams prm{Scalar::param(Param::a), Scalar::param(Param::b), F};
  const Scalar g = phi(n, lam, prm) - phi_lambda_leading(p, n, prm, hw.c_LI);
  for (Param q : {Param::n, Param::a, Param::b}) {
    if (g.depends_on(q)) throw std::logic_error("g_p depends on " + std::string(param_name(q)));
  }
  return g;
}

NegativeClassification reducibility_neg(int p, const HighestWeight& hw, const IntermediateParams& params,
                                        const SolveOptions& opts) {
  check_negative(p, hw);
  NegativeClassification out;
  out.p = p;
  const VermaVector lam = lambda_neg(hw, p, opts);
  const Scalar n = Scalar::param(Param::n);
  const IntermediateParams sym{Scalar::param(Param::a), params.b, params.F};
  out.phi_lambda = phi(n, lam, sym);
  out.g_p = out.phi_lambda - phi_lambda_leading(p, n, sym, hw.c_LI);

  const auto ratio = (params.F / hw.c_LI).as_long();
  if (ratio && *ratio >= 2 && *ratio <= p - 1) {
    out.kind = NegativeCase::AlwaysReducible;
    if (!out.phi_lambda.is_zero()) throw std::logic_error("phi_n(Lambda) should vanish identically");
    out.reducible = true;
    out.witnesses.push_back("phi_n(Lambda) = 0 for every n");
    return out;
  }
  if (ratio && *ratio == 1 && p > 1) {
    out.kind = NegativeCase::Boundary;
    if (out.phi_lambda.depends_on(Param::n) || out.phi_lambda.depends_on(Param::a)) {
      throw std::logic_error("phi_n(Lambda) should be constant on the boundary");
    }
    out.condition = out.phi_lambda;
    if (out.phi_lambda.is_zero()) {
      out.reducible = true;
      out.witnesses.push_back("phi_n(Lambda) = 0 for every n");
    } else if (out.phi_lambda.is_numeric()) {
      out.reducible = false;
      out.witnesses.push_back("none");
    }
    return out;
  }

  out.kind = NegativeCase::Generic;
  const Scalar phi0 = out.phi_lambda.substitute(Param::n, Scalar(0));
  const auto coeffs = phi0.coefficients_in(Param::a);
  if (coeffs.size() != 2 || coeffs[1].is_zero()) throw std::logic_error("phi_0(Lambda) is not linear in a");
  const Scalar a0 = -coeffs[0] / coeffs[1];
  out.alpha0 = a0;
  out.quotient_weight = std::make_pair(-a0 + hw.h + (1 - params.b), params.F + hw.h_I);
  const Scalar shift = a0 - params.a;
  if (shift.as_integer()) {
    out.reducible = true;
    out.witnesses.push_back("phi_n(Lambda) = 0 at n = " + shift.to_string());
  } else if (shift.is_numeric()) {
    out.reducible = false;
    out.witnesses.push_back("none");
  }
  return out;
}

}  // namespace hvff
