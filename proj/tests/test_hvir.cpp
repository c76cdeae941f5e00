#include <random>

#include "doctest.h"
#include "hvff/hvir.hpp"

using namespace hvff;

namespace {

std::vector<Generator> generators(Algebra alg, int bound) {
  std::vector<Generator> out;
  for (int n = -bound; n <= bound; ++n) {
    out.push_back(Generator::L(n, alg));
    out.push_back(alg == Algebra::HVir ? Generator::I(n) : Generator::W(n));
  }
  if (alg == Algebra::HVir) {
    for (auto k : {GenKind::C_L, GenKind::C_LI, GenKind::C_I}) out.push_back(Generator::central(k));
  } else {
    for (auto k : {GenKind::C, GenKind::C_W}) out.push_back(Generator::central(k));
  }
  return out;
}

}  // namespace

TEST_CASE("bracket examples") {
  const LieElement a = bracket(Generator::L(2), Generator::L(-2));
  CHECK(a.coeff(Generator::L(0)) == Scalar(4));
  CHECK(a.coeff(Generator::central(GenKind::C_L)) == Scalar::ratio(1, 2));
  CHECK(a.terms().size() == 2);

  const LieElement b = bracket(Generator::L(1), Generator::I(-1));
  CHECK(b == LieElement(Generator::I(0)) + LieElement(Generator::central(GenKind::C_LI), Scalar(-2)));

  CHECK(bracket(Generator::I(3), Generator::I(-3)) == LieElement(Generator::central(GenKind::C_I), Scalar(3)));
  CHECK(bracket(Generator::W(1), Generator::W(-1)).is_zero());
  CHECK(bracket(Generator::L(2, Algebra::W22), Generator::W(-2)) ==
        LieElement(Generator::W(0), Scalar(4)) + LieElement(Generator::central(GenKind::C_W), Scalar::ratio(1, 2)));
  CHECK(bracket(Generator::I(1), Generator::L(-1)) == LieElement(Generator::I(0)));
}

TEST_CASE("printing") {
  CHECK(Generator::L(-3).to_string() == "L(-3)");
  CHECK(Generator::I(2).to_string() == "I(2)");
  CHECK(Generator::W(0).to_string() == "W(0)");
  CHECK(Generator::central(GenKind::C_LI).to_string() == "C_LI");
  CHECK(bracket(Generator::L(2), Generator::L(-2)).to_string() == "4*L(0) + 1/2*C_L");
}

TEST_CASE("tag errors") {
  CHECK_THROWS_AS(bracket(Generator::L(1), Generator::W(1)), AlgebraMismatch);
  CHECK_THROWS_AS((Generator{Algebra::W22, GenKind::I, 1}).validate(), AlgebraMismatch);
  CHECK_THROWS_AS((Generator{Algebra::HVir, GenKind::W, 1}).validate(), AlgebraMismatch);
}

TEST_CASE("antisymmetry and centrality") {
  for (auto alg : {Algebra::HVir, Algebra::W22}) {
    const auto gens = generators(alg, 10);
    for (const auto& x : gens) {
      for (const auto& y : gens) {
        CHECK(bracket(x, y) == -bracket(y, x));
        if (x.is_central()) CHECK(bracket(x, y).is_zero());
      }
    }
  }
}

TEST_CASE("Jacobi identity") {
  for (auto alg : {Algebra::HVir, Algebra::W22}) {
    const auto gens = generators(alg, 6);
    for (const auto& x : gens) {
      for (const auto& y : gens) {
        for (const auto& z : gens) {
          const LieElement X(x), Y(y), Z(z);
          const LieElement j = bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) + bracket(Z, bracket(X, Y));
          if (!j.is_zero()) FAIL_CHECK(x.to_string() << " " << y.to_string() << " " << z.to_string());
        }
      }
    }
  }
}
