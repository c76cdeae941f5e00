#pragma once

// Conformal weights of lattice points and the fusion-rule classifier for
// irreducible highest weight modules with h_I/c_LI - 1 a nonzero integer.

#include <optional>
#include <string>

#include "hvff/scalar.hpp"

namespace hvff {

// r^2/2 - s^2/2 - lambda r + mu s
Scalar delta(const Scalar& r, const Scalar& s, const Scalar& lambda, const Scalar& mu);

struct FusionQuery {
  Scalar h;
  Scalar h_I;
  Scalar hp;    // h'
  Scalar hp_I;  // h'_I
  Scalar c_L;
  Scalar c_LI;

  // q = h_I/c_LI - 1 and p = h'_I/c_LI - 1.
  Scalar q() const { return h_I / c_LI - 1; }
  Scalar p() const { return hp_I / c_LI - 1; }
};

enum class FusionCase : std::uint8_t { BothNegative, FirstNegative, SecondNegative, Vanishing, OutOfRange };

std::string to_string(FusionCase c);

struct FusionAnswer {
  FusionCase kind = FusionCase::OutOfRange;
  int d = 0;
  std::optional<Scalar> h_out;    // h''
  std::optional<Scalar> h_I_out;  // h''_I
};

// Closed forms for h''; p, q are the integers of the query.
Scalar fusion_weight_both_negative(const FusionQuery& q, long p, long qq);
Scalar fusion_weight_mixed(const FusionQuery& q, long p, long qq);

FusionAnswer fusion_dim(const FusionQuery& q);

// Left side of the uniqueness relation
//   (h'' - h) binom(h'_I/c - 1, p - 1) - h' binom(h'_I/c - 2, p - 1) + g~_p(h'_I)
// with p = -q > 0 and g~_p = (-1)^p g_p taken from the singular vector of
// weight (h, h_I).
Scalar fund_relation_residual(const FusionQuery& q, const Scalar& h_out);

// h'' solved from the uniqueness relation. Needs one of p, q negative; when
// only p is negative the arguments are transposed first.
Scalar uniqueness_weight(const FusionQuery& q);

}  // namespace hvff
