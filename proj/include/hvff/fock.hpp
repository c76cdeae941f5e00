#pragma once

// Two-boson Fock modules F_{r,s} with the free-field HVir action, lattice
// vertex operator components and the screening operator Q.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hvff/hvir.hpp"
#include "hvff/linalg.hpp"
#include "hvff/partition.hpp"
#include "hvff/scalar.hpp"
#include "hvff/verma.hpp"

namespace hvff {

// x alpha + y beta with <alpha,alpha> = -<beta,beta> = 1, <alpha,beta> = 0.
struct LatticeVec {
  Scalar x;
  Scalar y;

  Scalar pair(const LatticeVec& o) const { return x * o.x - y * o.y; }
  LatticeVec operator+(const LatticeVec& o) const { return {x + o.x, y + o.y}; }
  LatticeVec operator-(const LatticeVec& o) const { return {x - o.x, y - o.y}; }
  LatticeVec scaled(const Scalar& c) const { return {x * c, y * c}; }
  friend bool operator==(const LatticeVec& a, const LatticeVec& b) { return a.x == b.x && a.y == b.y; }
  std::string to_string() const;
};

struct FockParams {
  Scalar lambda;
  Scalar mu;
  Scalar r;
  Scalar s;

  Scalar c_L() const;   // 2 - 12(lambda^2 - mu^2)
  Scalar c_LI() const;  // lambda - mu
  Scalar h() const;     // Delta_{r,s}
  Scalar h_I() const;   // r - s
  LatticeVec point() const { return {r, s}; }
  FockParams at(const LatticeVec& p) const { return {lambda, mu, p.x, p.y}; }
  // Highest weight of the HVir module generated by e^{r alpha + s beta}.
  HighestWeight weight() const;
  FockParams specialized(const Bindings& b) const;
};

// Products of alpha(-n) and beta(-m) applied to the lattice vector.
struct FockMonomial {
  Partition alpha;
  Partition beta;

  int grade() const { return partition_sum(alpha) + partition_sum(beta); }
  std::string to_string() const;
  auto operator<=>(const FockMonomial&) const = default;
};

enum class Osc : std::uint8_t { Alpha, Beta };

class FockVector {
 public:
  using Terms = std::map<FockMonomial, Scalar>;

  explicit FockVector(FockParams params) : params_(std::move(params)) {}
  FockVector(FockParams params, Terms terms);
  static FockVector top(const FockParams& params, Scalar c = Scalar(1));
  static FockVector monomial(const FockParams& params, FockMonomial m, Scalar c = Scalar(1));

  const FockParams& params() const { return params_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const FockMonomial& m) const;
  std::optional<int> grade() const;
  int max_grade() const;

  void add(const FockMonomial& m, const Scalar& c);
  FockVector zero_like() const { return FockVector(params_); }
  FockVector scaled(const Scalar& c) const;
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  // Same lattice point and same coefficients.
  friend bool operator==(const FockVector& a, const FockVector& b);

  std::string to_string() const;

 private:
  FockParams params_;
  Terms terms_;
};

std::vector<FockMonomial> fock_basis(int grade);

// Unique (r, s) with Delta_{r,s} = h and r - s = h_I; needs h_I != c_LI.
std::pair<Scalar, Scalar> fock_params_for(const Scalar& h, const Scalar& h_I, const Scalar& lambda, const Scalar& mu);
FockParams dual_params(const FockParams& p);

FockVector act_osc(Osc kind, int n, const FockVector& w);
// gamma(n) = x alpha(n) + y beta(n).
FockVector act_gamma(const LatticeVec& g, int n, const FockVector& w);
FockVector act_hvir(const Generator& g, const FockVector& w);
// Image of a PBW monomial applied to the top vector.
FockVector verma_to_fock(const VermaVector& u, const FockParams& params);

// Coefficient of z^{-k-1} in Y(e^gamma, z)w with trivial cocycle.
FockVector vertex_component(const LatticeVec& gamma, int k, const FockVector& w);

// phi = -(alpha + beta)/c_LI.
LatticeVec screening_momentum(const FockParams& p);
FockVector screening_Q(const FockVector& w);

// Matrix of Q from grade m of F_{params} to its target grade.
Matrix screening_matrix(const FockParams& params, int grade);
std::vector<std::size_t> kernel_Q_dims(const FockParams& params, int max_grade);

// v of grade n p with Q^n v = e^{r alpha + s beta + n phi}.
FockVector cosingular_solve(const FockParams& params, int n, int p);

// Contragredient pairing <w', w> with w' in F_{dual} and w in F.
Scalar contragredient_pairing(const FockVector& dual_vec, const FockVector& w);

}  // namespace hvff
