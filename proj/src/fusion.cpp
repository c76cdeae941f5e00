#include "hvff/fusion.hpp"

#include "hvff/tensor.hpp"

namespace hvff {

Scalar delta(const Scalar& r, const Scalar& s, const Scalar& lambda, const Scalar& mu) {
  const Scalar half(Rational(1, 2));
  return half * r * r - half * s * s - lambda * r + mu * s;
}

std::string to_string(FusionCase c) {
  switch (c) {
    case FusionCase::BothNegative: return "i";
    case FusionCase::FirstNegative: return "ii";
    case FusionCase::SecondNegative: return "iii";
    case FusionCase::Vanishing: return "vanishing";
    case FusionCase::OutOfRange: return "out_of_range";
  }
  return "?";
}

Scalar fusion_weight_both_negative(const FusionQuery& q, long p, long qq) {
  const Scalar P(p), Q(qq);
  const Scalar k = (q.c_L - 2) / 24;
  return (1 + P + Q) * (q.hp / P + q.h / Q) - (1 + P) * (1 + Q) * (P.inverse() + Q.inverse()) * k;
}

Scalar fusion_weight_mixed(const FusionQuery& q, long p, long qq) {
  const Scalar P(p), Q(qq);
  const Scalar k = (q.c_L - 2) / 24;
  return (1 - P + Q) * (q.h / Q - q.hp / P) + (1 - P) * (1 + Q) * (P.inverse() - Q.inverse()) * k;
}

FusionAnswer fusion_dim(const FusionQuery& query) {
  if (query.c_LI.is_zero()) throw PreconditionViolated("c_LI must be nonzero");
  FusionAnswer out;
  const auto p = query.p().as_long();
  const auto q = query.q().as_long();
  if (!p || !q || *p == 0 || *q == 0) return out;
  const bool ii = 1 <= -*q && -*q <= *p;
  const bool iii = 1 <= -*p && -*p <= *q;
  if (*p < 0 && *q < 0) {
    out.kind = FusionCase::BothNegative;
    out.h_out = fusion_weight_both_negative(query, *p, *q);
  } else if (ii || iii) {
    out.kind = ii ? FusionCase::FirstNegative : FusionCase::SecondNegative;
    out.h_out = fusion_weight_mixed(query, *p, *q);
  } else {
    out.kind = FusionCase::Vanishing;
    return out;
  }
  out.d = 1;
  out.h_I_out = query.h_I + query.hp_I;
  return out;
}

Scalar fund_relation_residual(const FusionQuery& query, const Scalar& h_out) {
  const auto q = query.q().as_long();
  if (!q || *q >= 0) throw PreconditionViolated("uniqueness relation needs h_I/c_LI - 1 = -p < 0");
  const int p = static_cast<int>(-*q);
  const auto e = static_cast<unsigned>(p - 1);
  const Scalar x = query.hp_I / query.c_LI;
  const HighestWeight hw = HighestWeight::hvir(query.c_L, query.c_LI, query.h, query.h_I);
  const Scalar g = extract_g_p(p, hw, query.hp_I);
  const Scalar gt = p % 2 == 0 ? g : -g;
  return (h_out - query.h) * gen_binomial(x - 1, e) - query.hp * gen_binomial(x - 2, e) + gt;
}

Scalar uniqueness_weight(const FusionQuery& query) {
  const auto q = query.q().as_long();
  const auto p = query.p().as_long();
  if (!q || !p) throw PreconditionViolated("h_I/c_LI and h'_I/c_LI must be integers");
  if (*q >= 0) {
    if (*p >= 0) throw PreconditionViolated("uniqueness relation needs a negative module");
    return uniqueness_weight({query.hp, query.hp_I, query.h, query.h_I, query.c_L, query.c_LI});
  }
  // the residual is affine in h''
  const Scalar r0 = fund_relation_residual(query, Scalar(0));
  const Scalar slope = fund_relation_residual(query, Scalar(1)) - r0;
  if (slope.is_zero()) throw PreconditionViolated("uniqueness relation does not determine h''");
  return -r0 / slope;
}

}  // namespace hvff
