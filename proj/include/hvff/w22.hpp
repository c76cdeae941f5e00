#pragma once

// The embedding of W(2,2) into the Heisenberg-Virasoro vertex algebra,
// w -> (I(-1)^2 + 2c_LI I(-2))1, and W(2,2) singular vectors by pullback.
//
// On I-polynomial vectors every W-image acts by multiplication, so Psi is the
// ring map x_n -> psi_poly(n) with x_n standing for W(-n) on one side and
// I(-n) on the other.

#include "hvff/report.hpp"
#include "hvff/schur.hpp"
#include "hvff/verma.hpp"

namespace hvff {

class PsiNotInvertible : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

// c_W = -24 c_LI^2, h_W = h_I(h_I - 2c_LI); c_L and h are kept.
HighestWeight w22_weight(const HighestWeight& hvir);

// 2c_LI(h_I/c_LI - 1 + n)
Scalar psi_diagonal(int n, const HighestWeight& hw);

// 2c_LI(h_I/c_LI - 1 + n) x_n + sum_{i=1}^{n-1} x_i x_{n-i}
ModePoly psi_poly(int n, const HighestWeight& hw);
ModePoly psi(const ModePoly& w, const HighestWeight& hw);
// I(-n) as a polynomial in the W(-k), solved grade by grade.
ModePoly psi_inverse_poly(int n, const HighestWeight& hw);
ModePoly psi_inverse(const ModePoly& i, const HighestWeight& hw);

// W(-n) -> I-polynomial vector; L(-n) -> L(-n)v.
VermaVector psi_generator(const Generator& g, const HighestWeight& hw);

// W(m) = sum_j I(j)I(m-j) + 2c_LI(-m-1)I(m) on an HVir Verma module.
VermaVector w_image(int m, const VermaModule& mod, const VermaVector& u);
// Psi on arbitrary W(2,2) Verma vectors via operator images.
VermaVector psi_vector(const VermaVector& w, const VermaModule& hvir);

// Pure I-part (or W-part) vectors and ModePoly.
ModePoly to_mode_poly(const VermaVector& v);
VermaVector from_mode_poly(const ModePoly& p, Algebra alg);

// Matrix of Psi on W-monomials of a grade, columns and rows indexed by partitions(grade).
Matrix psi_matrix(const HighestWeight& hw, int grade);

Report verify_embedding(const Scalar& c_LI, int N);

// Psi^{-1} of S_p(-I(-1)/c_LI, ...)v in the W(2,2) Verma module of weight
// w22_weight(c_L, c_LI, h, (p+1)c_LI), leading coefficient 1.
VermaVector w22_singular(int p, const Scalar& c_L, const Scalar& h,
                         const Scalar& c_LI = Scalar::param(Param::c_LI));

Report verify_w22(int p_max, int N);

}  // namespace hvff
