#pragma once

// The functional phi_n on U(HVir^-) attached to an intermediate series module
// V'_{a,b,F}, and the irreducibility criteria for tensor products
// L(c_L, 0, c_LI, h, h_I) x V'_{a,b,F}.

#include <optional>
#include <string>
#include <vector>

#include "hvff/scalar.hpp"
#include "hvff/verma.hpp"

namespace hvff {

// L(k)v_n = -(n + a + b + k b)v_{n+k}, I(k)v_n = F v_{n+k}
struct IntermediateParams {
  Scalar a;
  Scalar b;
  Scalar F;
};

// phi_n(1) = 1, phi_n(I(-i)u) = -F phi_n(u),
// phi_n(L(-i)u) = (a + b + k + i + n - i b) phi_n(u) for u of weight -k.
Scalar phi(const Scalar& n, const PBWMonomial& m, const IntermediateParams& params);
Scalar phi(const Scalar& n, const VermaVector& u, const IntermediateParams& params);

// phi_n on S_p(-I(-1)/c_LI, ...)v, computed through phi; throws if the value
// depends on n.
Scalar phi_omega(int p, const Scalar& F, const Scalar& c_LI);
// (-1)^p binom(-F/c_LI, p)
Scalar phi_omega_closed(int p, const Scalar& F, const Scalar& c_LI);

struct PositiveVerdict {
  bool irreducible = true;
  std::optional<int> witness;  // i with F = (i - p)c_LI
  Scalar phi_omega;
};

// For h_I/c_LI - 1 = p > 0: irreducible iff F is not (i - p)c_LI, i = 1..p.
PositiveVerdict irreducible_pos(int p, const Scalar& F, const Scalar& c_LI);

enum class NegativeCase : std::uint8_t { Generic = 1, AlwaysReducible = 2, Boundary = 3 };

struct NegativeClassification {
  NegativeCase kind = NegativeCase::Generic;
  int p = 0;
  std::optional<bool> reducible;  // nullopt when it depends on free parameters
  Scalar phi_lambda;              // phi_n(Lambda), symbolic in n and a
  Scalar g_p;                     // remainder after the leading terms
  std::optional<Scalar> alpha0;   // case 1: root of phi_0 in a
  std::optional<std::pair<Scalar, Scalar>> quotient_weight;  // case 1: (h'', h''_I)
  std::optional<Scalar> condition;  // case 3: reducible iff this vanishes
  std::vector<std::string> witnesses;
};

// The leading terms (-1)^{p-1}[binom(F/c-1, p-1)(a+n+b) + (1-b)binom(F/c-2, p-1)].
Scalar phi_lambda_leading(int p, const Scalar& n, const IntermediateParams& params, const Scalar& c_LI);
// phi_n(Lambda) minus the leading terms; throws if n, a or b survive.
Scalar extract_g_p(int p, const HighestWeight& hw, const Scalar& F, const SolveOptions& opts = {});

// For h_I/c_LI - 1 = -p. a is taken from params when it is a number, and is
// treated as unknown otherwise.
NegativeClassification reducibility_neg(int p, const HighestWeight& hw, const IntermediateParams& params,
                                        const SolveOptions& opts = {});

std::string to_string(NegativeCase c);

}  // namespace hvff
