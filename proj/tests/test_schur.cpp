#include "doctest.h"
#include "hvff/schur.hpp"
#include "hvff/verma.hpp"

using namespace hvff;

TEST_CASE("schur_gen small cases") {
  CHECK(schur_gen(0) == SchurPoly(0, {{{}, 1}}));
  CHECK(schur_gen(1) == SchurPoly(1, {{{1}, 1}}));
  CHECK(schur_gen(2) == SchurPoly(2, {{{1, 1}, Rational(1, 2)}, {{2}, Rational(1, 2)}}));
  CHECK(schur_gen(3) ==
        SchurPoly(3, {{{1, 1, 1}, Rational(1, 6)}, {{2, 1}, Rational(1, 2)}, {{3}, Rational(1, 3)}}));
}

TEST_CASE("schur_det small cases") {
  CHECK(schur_det(0) == schur_gen(0));
  CHECK(schur_det(1) == SchurPoly(1, {{{1}, 1}}));
  CHECK(schur_det(2) == SchurPoly(2, {{{1, 1}, Rational(1, 2)}, {{2}, Rational(1, 2)}}));
  CHECK(schur_det(4) == schur_gen(4));
}

TEST_CASE("the two definitions agree") {
  for (int r = 0; r <= 10; ++r) CHECK(schur_gen(r) == schur_det(r));
}

TEST_CASE("Laplace recursion r S_r = sum S_i x_{r-i}") {
  for (int r = 1; r <= 10; ++r) {
    ModePoly rhs;
    for (int i = 0; i < r; ++i) rhs += schur_gen(i).to_mode_poly() * ModePoly::var(r - i);
    CHECK(schur_gen(r).to_mode_poly().scaled(Scalar(r)) == rhs);
  }
}

TEST_CASE("coefficient of x_1^r is 1/r! and of x_r is 1/r") {
  Rational f = 1;
  for (int r = 1; r <= 10; ++r) {
    f *= r;
    const auto s = schur_gen(r);
    CHECK(s.coeff(Partition(r, 1)) == 1 / f);
    CHECK(s.coeff(Partition{r}) == Rational(1, r));
    CHECK(s.terms().size() == partitions(r).size());
  }
}

TEST_CASE("substitution into a Verma module") {
  const Scalar c = Scalar::param(Param::c_LI);
  const VermaModule mod(HighestWeight::hvir(Scalar::param(Param::c_L), c, Scalar::param(Param::h), 2 * c));
  const auto img = [&](int n, const VermaVector& w) { return mod.apply(Generator::I(-n), w).scaled(-1 / c); };
  const VermaVector v = mod.highest();
  CHECK(substitute(schur_gen(0), v, img) == v);
  CHECK(substitute(schur_gen(1), v, img) == mod.vector({{1}, {}}, -1 / c));
  const VermaVector s2 = substitute(schur_gen(2), v, img);
  CHECK(s2 == mod.vector({{1, 1}, {}}, 1 / (2 * c * c)) + mod.vector({{2}, {}}, -1 / (2 * c)));
  std::map<int, std::function<VermaVector(const VermaVector&)>> table = {
      {1, [&](const VermaVector& w) { return img(1, w); }}};
  CHECK_THROWS_AS(substitute_images(schur_gen(2), v, table), MissingImage);
}

TEST_CASE("printing") {
  CHECK(schur_gen(2).to_string() == "1/2*x_2 + 1/2*x_1^2");
}
