#include <random>

#include "doctest.h"
#include "hvff/verma.hpp"

using namespace hvff;

namespace {

const Scalar cL = Scalar::param(Param::c_L);
const Scalar c = Scalar::param(Param::c_LI);
const Scalar h = Scalar::param(Param::h);
const Scalar hI = Scalar::param(Param::h_I);

PBWMonomial M(Partition a, Partition l) { return PBWMonomial{std::move(a), std::move(l)}; }

VermaVector random_vector(const VermaModule& mod, int grade, std::mt19937_64& rng) {
  VermaVector w(mod.algebra());
  for (const auto& m : mod.basis(grade)) w.add(m, Scalar(random_rational(rng, 5, 3)));
  return w;
}

std::vector<Generator> gens(Algebra alg, int bound) {
  std::vector<Generator> out;
  for (int n = -bound; n <= bound; ++n) {
    out.push_back(Generator::L(n, alg));
    out.push_back(alg == Algebra::HVir ? Generator::I(n) : Generator::W(n));
  }
  return out;
}

}  // namespace

TEST_CASE("apply examples") {
  const VermaModule mod(HighestWeight::hvir(cL, c, h, 2 * c));
  CHECK(mod.apply(Generator::L(1), mod.vector(M({1}, {}))).is_zero());

  const VermaModule gen(HighestWeight::hvir(cL, c, h, hI));
  const auto w = gen.vector(M({2}, {1}));
  CHECK(gen.apply(Generator::L(0), w) == w.scaled(h + 3));
  // I(1)L(-1)v = L(-1)I(1)v + [I(1), L(-1)]v = I(0)v
  CHECK(gen.apply(Generator::I(1), gen.vector(M({}, {1}))) == gen.highest().scaled(hI));
  CHECK(gen.apply(Generator::I(-1), gen.vector(M({}, {1}))) == gen.vector(M({1}, {1})));
  // L(-1)I(-1)v = I(-1)L(-1)v + I(-2)v
  CHECK(gen.apply(Generator::L(-1), gen.vector(M({1}, {}))) == gen.vector(M({1}, {1})) + gen.vector(M({2}, {})));
  CHECK_THROWS_AS(gen.apply(Generator::W(1), gen.highest()), AlgebraMismatch);
}

TEST_CASE("PBW basis dimensions") {
  const std::size_t expected[] = {1, 2, 5, 10, 20, 36, 65};
  const VermaModule mod(HighestWeight::hvir(cL, c, h, hI));
  for (int n = 0; n <= 6; ++n) {
    CHECK(verma_dim(n) == expected[n]);
    CHECK(mod.basis(n).size() == expected[n]);
  }
}

TEST_CASE("grade bookkeeping") {
  std::mt19937_64 rng(5);
  const VermaModule mod(HighestWeight::hvir(cL, c, h, hI));
  for (int g = 0; g <= 4; ++g) {
    const auto w = random_vector(mod, g, rng);
    for (int n = -3; n <= 3; ++n) {
      for (const auto& x : {Generator::L(n), Generator::I(n)}) {
        const auto r = mod.apply(x, w);
        if (!r.is_zero()) CHECK(r.grade() == g - n);
      }
    }
  }
}

TEST_CASE("the action is a representation") {
  std::mt19937_64 rng(17);
  const HighestWeight weights[] = {
      HighestWeight::hvir(Scalar::ratio(3, 7), Scalar::ratio(-2, 5), Scalar::ratio(11, 3), Scalar::ratio(1, 4)),
      HighestWeight::hvir(cL, c, h, hI),
      HighestWeight::w22(Scalar::ratio(5, 2), Scalar::ratio(-7, 3), Scalar::ratio(2, 9), Scalar::ratio(13, 4)),
      HighestWeight::w22(cL, Scalar::param(Param::c_W), h, Scalar::param(Param::h_W)),
  };
  for (const auto& hw : weights) {
    const VermaModule mod(hw);
    const bool symbolic = !hw.parameters().empty();
    const auto gs = gens(hw.algebra, 4);
    std::uniform_int_distribution<std::size_t> pick(0, gs.size() - 1);
    for (int t = 0; t < (symbolic ? 25 : 80); ++t) {
      const Generator x = gs[pick(rng)];
      const Generator y = gs[pick(rng)];
      const int g = static_cast<int>(rng() % (symbolic ? 4 : 6));
      const auto w = random_vector(mod, g, rng);
      const auto lhs = mod.apply(x, mod.apply(y, w)) - mod.apply(y, mod.apply(x, w));
      if (!(lhs == mod.apply(bracket(x, y), w))) FAIL_CHECK(x.to_string() << ", " << y.to_string() << " grade " << g);
    }
  }
}

TEST_CASE("singular_vectors examples") {
  SUBCASE("p = 1 at grade 1") {
    const auto v = singular_vectors(HighestWeight::hvir(cL, c, h, 2 * c), 1);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == VermaVector::monomial(Algebra::HVir, M({1}, {})));
  }
  SUBCASE("generic weight has none") {
    for (int n = 1; n <= 4; ++n) CHECK(singular_vectors(HighestWeight::hvir(cL, c, h, hI), n).empty());
  }
  SUBCASE("grade two vector at h_I = -c_LI") {
    const auto v = singular_vectors(HighestWeight::hvir(cL, c, h, -c), 2);
    REQUIRE(v.size() == 1);
    VermaVector expected(Algebra::HVir);
    expected.add(M({}, {2}), 1);
    expected.add(M({1}, {1}), 1 / c);
    expected.add(M({2}, {}), (cL + 8 * h - 2) / (16 * c));
    expected.add(M({1, 1}, {}), (cL + 24 * h - 2) / (48 * c * c));
    CHECK(v[0] == expected);
    CHECK(v[0].to_string() ==
          "L(-2)v + 1/c_LI*I(-1)L(-1)v + (c_L + 8*h - 2)/(16*c_LI)*I(-2)v + (c_L + 24*h - 2)/(48*c_LI^2)*I(-1)^2v");
  }
  SUBCASE("numeric fallback agrees in dimension") {
    SolveOptions opts;
    opts.mode = SolveMode::Numeric;
    const auto s = solve_singular(HighestWeight::hvir(cL, c, h, 3 * c), 2, opts);
    CHECK(!s.symbolic);
    CHECK(s.draws.size() >= 3);
    for (auto d : s.dims) CHECK(d == 1);
  }
}

TEST_CASE("schur_singular") {
  const VermaModule m1(HighestWeight::hvir(cL, c, h, 2 * c));
  CHECK(schur_singular(m1.weight(), 1) == m1.vector(M({1}, {}), -1 / c));
  CHECK(schur_singular(HighestWeight::hvir(cL, c, h, 3 * c), 2) ==
        m1.vector(M({1, 1}, {}), 1 / (2 * c * c)) + m1.vector(M({2}, {}), -1 / (2 * c)));
  for (int p = 1; p <= 6; ++p) {
    const HighestWeight hw = HighestWeight::hvir(cL, c, h, Scalar(p + 1) * c);
    const VermaModule mod(hw);
    const auto v = schur_singular(hw, p);
    CHECK(v.grade() == p);
    CHECK(is_singular(mod, v));
  }
  CHECK_THROWS_AS(schur_singular(HighestWeight::hvir(cL, c, h, hI), 2), PreconditionViolated);
  for (int p = 1; p <= 4; ++p) {
    const HighestWeight hw = HighestWeight::hvir(cL, c, h, Scalar(p + 1) * c);
    const auto sv = singular_vectors(hw, p);
    REQUIRE(sv.size() == 1);
    CHECK(sv[0].proportional_to(schur_singular(hw, p)));
  }
}

TEST_CASE("lambda_neg") {
  const VermaModule mod(HighestWeight::hvir(cL, c, h, 0));
  const auto l1 = lambda_neg(mod.weight(), 1);
  CHECK(l1 == mod.vector(M({}, {1})) + mod.vector(M({1}, {}), h / c));

  const HighestWeight hw2 = HighestWeight::hvir(cL, c, h, -c);
  const auto l2 = lambda_neg(hw2, 2);
  VermaVector expected(Algebra::HVir);
  expected.add(M({}, {2}), 1);
  expected.add(M({1}, {1}), 1 / c);
  expected.add(M({2}, {}), (cL + 8 * h - 2) / (16 * c));
  expected.add(M({1, 1}, {}), (cL + 24 * h - 2) / (48 * c * c));
  CHECK(l2 == expected);

  for (int p = 1; p <= 4; ++p) {
    const HighestWeight hw = HighestWeight::hvir(cL, c, h, Scalar(1 - p) * c);
    const auto l = lambda_neg(hw, p);
    CHECK(is_singular(VermaModule(hw), l));
    CHECK(l.coeff(M({}, {p})) == Scalar(1));
    if (p == 3) {
      const auto sv = singular_vectors(hw, 3);
      REQUIRE(sv.size() == 1);
      CHECK(sv[0] == l);
      CHECK(l.coeff(M({1}, {2})) == 1 / c);
      CHECK(l.coeff(M({1, 1}, {1})) == 1 / (2 * c * c));
      CHECK(l.coeff(M({2}, {1})) == 1 / (2 * c));
    }
  }
  CHECK_THROWS_AS(lambda_neg(HighestWeight::hvir(cL, c, h, c), 1), PreconditionViolated);
}

TEST_CASE("W(2,2) Verma module") {
  const Scalar cW = Scalar::param(Param::c_W);
  const VermaModule mod(HighestWeight::w22(cL, cW, h, Scalar::param(Param::h_W)));
  const auto w = mod.vector(M({1}, {}));
  CHECK(mod.apply(Generator::L(1, Algebra::W22), w) == mod.highest().scaled(2 * Scalar::param(Param::h_W)));
  CHECK(mod.apply(Generator::W(1), w).is_zero());
  CHECK(mod.vector(M({2, 1}, {1})).to_string() == "W(-2)W(-1)L(-1)v");
}
