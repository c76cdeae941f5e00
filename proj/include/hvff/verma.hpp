#pragma once

// Verma modules over HVir (level zero) and W(2,2) in a PBW basis.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hvff/hvir.hpp"
#include "hvff/linalg.hpp"
#include "hvff/partition.hpp"
#include "hvff/scalar.hpp"

namespace hvff {

struct HighestWeight {
  Algebra algebra = Algebra::HVir;
  Scalar c_L;
  Scalar c_LI;  // HVir only; C_I acts by zero
  Scalar h;
  Scalar h_I;   // HVir only
  Scalar c_W;   // W22 only
  Scalar h_W;   // W22 only

  static HighestWeight hvir(Scalar c_L, Scalar c_LI, Scalar h, Scalar h_I);
  static HighestWeight w22(Scalar c_L, Scalar c_W, Scalar h, Scalar h_W);

  // Value of a central generator or of a zero mode on the highest weight vector.
  Scalar value(const Generator& g) const;
  HighestWeight specialized(const Bindings& b) const;
  std::vector<Param> parameters() const;
  // h_I/c_LI - 1 for HVir weights.
  Scalar p_value() const;
  std::string to_string() const;
};

// I-part (or W-part) followed by the L-part, each weakly decreasing, so
// {a = (2,1), l = (1)} is I(-2)I(-1)L(-1)v.
struct PBWMonomial {
  Partition a;
  Partition l;

  int grade() const;
  std::size_t length() const { return a.size() + l.size(); }
  std::string to_string(Algebra alg) const;
  auto operator<=>(const PBWMonomial&) const = default;
};

// Order used to pick the leading monomial: larger L-weight first, then fewer
// factors, then lexicographic.
bool leading_less(const PBWMonomial& x, const PBWMonomial& y);

class VermaVector {
 public:
  using Terms = std::map<PBWMonomial, Scalar>;

  explicit VermaVector(Algebra alg = Algebra::HVir) : algebra_(alg) {}
  VermaVector(Algebra alg, Terms terms);
  static VermaVector monomial(Algebra alg, PBWMonomial m, Scalar c = Scalar(1));

  Algebra algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const PBWMonomial& m) const;
  // Common grade, or nullopt for zero or inhomogeneous vectors.
  std::optional<int> grade() const;
  const PBWMonomial& leading() const;

  void add(const PBWMonomial& m, const Scalar& c);
  VermaVector zero_like() const { return VermaVector(algebra_); }
  VermaVector scaled(const Scalar& c) const;
  VermaVector& operator+=(const VermaVector& o);
  VermaVector& operator-=(const VermaVector& o);
  friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
  friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }
  friend bool operator==(const VermaVector& a, const VermaVector& b);

  // Leading coefficient scaled to one.
  VermaVector normalized() const;
  VermaVector specialized(const Bindings& b) const;
  // True when some nonzero scalar multiple of o equals *this.
  bool proportional_to(const VermaVector& o) const;

  std::string to_string() const;

 private:
  Algebra algebra_;
  Terms terms_;
};

class VermaModule {
 public:
  explicit VermaModule(HighestWeight hw);

  const HighestWeight& weight() const { return hw_; }
  Algebra algebra() const { return hw_.algebra; }
  VermaVector highest() const;
  VermaVector vector(const PBWMonomial& m, const Scalar& c = Scalar(1)) const;

  VermaVector apply(const Generator& g, const VermaVector& w) const;
  VermaVector apply(const LieElement& x, const VermaVector& w) const;
  // Applies word[last] first, as in g_1 g_2 ... g_k w.
  VermaVector apply_word(const std::vector<Generator>& word, const VermaVector& w) const;

  // PBW monomials of a grade, ascending in leading_less.
  std::vector<PBWMonomial> basis(int grade) const;
  // Positive-mode generators whose joint kernel is the singular space.
  std::vector<Generator> annihilators() const;

 private:
  using Key = std::pair<Generator, PBWMonomial>;
  const VermaVector::Terms& apply_monomial(const Generator& g, const PBWMonomial& m) const;
  void accumulate(const Generator& g, const VermaVector::Terms& in, const Scalar& scale,
                  VermaVector::Terms& out) const;

  HighestWeight hw_;
  mutable std::mutex mu_;
  mutable std::map<Key, std::unique_ptr<VermaVector::Terms>> cache_;
};

std::size_t verma_dim(int grade);

enum class SolveMode : std::uint8_t { Symbolic, Numeric, Auto };

struct SolveOptions {
  SolveMode mode = SolveMode::Auto;
  std::size_t term_budget = 200000;
  int draws = 3;
  std::uint64_t seed = 1;
};

struct SingularSolve {
  std::vector<VermaVector> vectors;  // symbolic, or at draws[0] in numeric mode
  bool symbolic = true;
  std::vector<Bindings> draws;
  std::vector<std::size_t> dims;  // kernel dimension at each draw
};

// Rows: coefficients of each annihilator image; columns: basis(grade).
Matrix annihilation_matrix(const VermaModule& mod, int grade);

// Random rational bindings for the free parameters of hw with nonvanishing
// c_LI (or c_W) and well-defined specialization.
std::vector<Bindings> random_draws(const HighestWeight& hw, int count, std::uint64_t seed);

SingularSolve solve_singular(const HighestWeight& hw, int grade, const SolveOptions& opts = {});
std::vector<VermaVector> singular_vectors(const HighestWeight& hw, int grade, const SolveOptions& opts = {});

// S_p(-I(-1)/c_LI, ..., -I(-p)/c_LI)v; requires h_I/c_LI - 1 = p.
VermaVector schur_singular(const HighestWeight& hw, int p);

// Grade p singular vector for h_I/c_LI - 1 = -p with the L(-p)v coefficient 1.
VermaVector lambda_neg(const HighestWeight& hw, int p, const SolveOptions& opts = {});

// True when every annihilator kills w.
bool is_singular(const VermaModule& mod, const VermaVector& w);

}  // namespace hvff
