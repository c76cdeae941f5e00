#include <doctest.h>

#include <random>

#include "hvff/w22.hpp"

using namespace hvff;

namespace {

Scalar P(Param p) { return Scalar::param(p); }

HighestWeight generic() { return HighestWeight::hvir(P(Param::c_L), P(Param::c_LI), P(Param::h), P(Param::h_I)); }

VermaVector ivec(PBWMonomial m, Scalar c = Scalar(1)) { return VermaVector::monomial(Algebra::HVir, std::move(m), c); }

}  // namespace

TEST_CASE("w22 weight") {
  const auto w = w22_weight(generic());
  const Scalar c = P(Param::c_LI), hI = P(Param::h_I);
  CHECK(w.algebra == Algebra::W22);
  CHECK(w.c_W == -24 * c * c);
  CHECK(w.h_W == hI * hI - 2 * c * hI);
  CHECK_THROWS_AS(w22_weight(w), AlgebraMismatch);
}

TEST_CASE("psi generator examples") {
  const Scalar c = P(Param::c_LI);
  const HighestWeight h3 = HighestWeight::hvir(P(Param::c_L), c, P(Param::h), 3 * c);
  CHECK(psi_generator(Generator::W(-1), h3) == ivec({{1}, {}}, 6 * c));
  CHECK(psi_generator(Generator::W(-2), h3) == ivec({{2}, {}}, 8 * c) + ivec({{1, 1}, {}}));
  CHECK(psi_generator(Generator::W(-1), HighestWeight::hvir(P(Param::c_L), c, P(Param::h), Scalar(0))).is_zero());
  CHECK(psi_generator(Generator::L(-3, Algebra::W22), h3) == ivec({{}, {3}}));
  CHECK_THROWS_AS(psi_generator(Generator::W(1), h3), PreconditionViolated);
  CHECK_THROWS_AS(psi_generator(Generator::I(-1), h3), PreconditionViolated);
}

TEST_CASE("psi agrees with operator images") {
  // ring map on W-polynomials versus W(m) built from I-modes on the Verma module
  const HighestWeight hw = generic();
  const VermaModule mod(hw);
  const VermaModule wmod(w22_weight(hw));
  for (int g = 1; g <= 4; ++g) {
    for (const auto& part : partitions(g)) {
      ModePoly m;
      m.add(part, Scalar(1));
      const VermaVector viaPoly = from_mode_poly(psi(m, hw), Algebra::HVir);
      const VermaVector viaOps = psi_vector(from_mode_poly(m, Algebra::W22), mod);
      CHECK(viaPoly == viaOps);
    }
  }
  // Psi intertwines L(n) and W(n) on mixed words
  const VermaVector x = wmod.vector(PBWMonomial{{2}, {1}}) + wmod.vector(PBWMonomial{{1}, {2}});
  for (int n = -2; n <= 2; ++n) {
    CHECK(psi_vector(wmod.apply(Generator::L(n, Algebra::W22), x), mod) ==
          mod.apply(Generator::L(n), psi_vector(x, mod)));
    CHECK(psi_vector(wmod.apply(Generator::W(n), x), mod) == w_image(n, mod, psi_vector(x, mod)));
  }
}

TEST_CASE("psi inverse") {
  const HighestWeight hw = generic();
  for (int n = 1; n <= 5; ++n) {
    CHECK(psi(psi_inverse_poly(n, hw), hw) == ModePoly::var(n));
    CHECK(psi_inverse(psi_poly(n, hw), hw) == ModePoly::var(n));
  }
  std::mt19937_64 rng(5);
  ModePoly r;
  for (const auto& part : partitions(5)) r.add(part, Scalar(random_rational(rng)));
  CHECK(psi(psi_inverse(r, hw), hw) == r);
  const Scalar c = P(Param::c_LI);
  CHECK_THROWS_AS(psi_inverse_poly(2, HighestWeight::hvir(P(Param::c_L), c, P(Param::h), -c)), PsiNotInvertible);
  CHECK_NOTHROW(psi_inverse_poly(1, HighestWeight::hvir(P(Param::c_L), c, P(Param::h), -c)));
  CHECK_THROWS_AS(to_mode_poly(ivec({{}, {1}})), PreconditionViolated);
}

TEST_CASE("psi matrix is triangular with the expected diagonal") {
  const HighestWeight hw = generic();
  for (int g = 1; g <= 5; ++g) {
    const auto parts = partitions(g);
    const Matrix m = psi_matrix(hw, g);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      Scalar d(1);
      for (int n : parts[j]) d *= psi_diagonal(n, hw);
      CHECK(m[j][j] == d);
      // images only reach monomials with at least as many factors
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].size() < parts[j].size()) CHECK(m[i][j].is_zero());
      }
    }
    CHECK(rank(m) == parts.size());
  }
  const Scalar c = P(Param::c_LI);
  for (int p = 1; p <= 4; ++p) {
    const HighestWeight bad = HighestWeight::hvir(P(Param::c_L), c, P(Param::h), Scalar(1 - p) * c);
    const Matrix m = psi_matrix(bad, p);
    CHECK(rank(m) < m.size());
  }
}

TEST_CASE("embedding") {
  const Report r = verify_embedding(P(Param::c_LI), 4);
  for (const auto& it : r.items) {
    INFO(it.id << ": " << it.detail);
    CHECK(it.pass);
  }
  CHECK(r.items.size() == 7);
  // numeric c_LI
  CHECK(verify_embedding(Scalar::ratio(-3, 7), 3).ok());
}

TEST_CASE("w22 singular vectors") {
  const Scalar c = P(Param::c_LI), cL = P(Param::c_L), h = P(Param::h);
  const Scalar cW = -24 * c * c;
  const VermaVector s2 = w22_singular(2, cL, h);
  VermaVector u2 = VermaVector::monomial(Algebra::W22, PBWMonomial{{2}, {}});
  u2.add(PBWMonomial{{1, 1}, {}}, 6 / cW);
  CHECK(s2 == u2);
  CHECK(w22_singular(1, cL, h) == VermaVector::monomial(Algebra::W22, PBWMonomial{{1}, {}}));

  for (int p = 1; p <= 4; ++p) {
    const HighestWeight hw = w22_weight(HighestWeight::hvir(cL, c, h, Scalar(p + 1) * c));
    const VermaModule mod(hw);
    const VermaVector s = w22_singular(p, cL, h);
    CHECK(s.grade() == p);
    CHECK(s.leading() == PBWMonomial{{p}, {}});
    CHECK(s.coeff(PBWMonomial{{p}, {}}) == Scalar(1));
    for (const auto& g : mod.annihilators()) CHECK(mod.apply(g, s).is_zero());
    CHECK(hw.h_W / hw.c_W == Scalar::ratio(1 - p * p, 24));
    // independent solve in the W(2,2) Verma module at a numeric point
    if (p <= 3) {
      const auto sols = singular_vectors(hw.specialized({{Param::c_L, Rational(3, 5)}, {Param::c_LI, Rational(2)},
                                                         {Param::h, Rational(-1, 3)}}),
                                         p, {SolveMode::Symbolic});
      REQUIRE(sols.size() == 1);
      const VermaVector num = s.specialized({{Param::c_L, Rational(3, 5)}, {Param::c_LI, Rational(2)},
                                             {Param::h, Rational(-1, 3)}});
      CHECK(sols.front().proportional_to(num));
    }
  }
  // numeric inputs
  const VermaVector n3 = w22_singular(3, Scalar(1), Scalar::ratio(1, 2), Scalar(2));
  CHECK(n3.coeff(PBWMonomial{{1, 1, 1}, {}}) == Scalar::ratio(1, 64 * 16));
  CHECK_THROWS_AS(w22_singular(0, cL, h), PreconditionViolated);
}

TEST_CASE("w22 report") {
  const Report r = verify_w22(3, 4);
  CHECK(r.ok());
  CHECK(r.to_json().find("\"status\": \"pass\"") != std::string::npos);
  CHECK(r.to_text().find("FAIL") == std::string::npos);
}

TEST_CASE("report formatting") {
  Report r;
  r.command = "demo";
  r.params = {{"p", "2"}};
  r.add("b-item", "second", true);
  r.add("a-item", "first", false, "mismatch");
  CHECK_FALSE(r.ok());
  const std::string j = r.to_json();
  CHECK(j.find("a-item") < j.find("b-item"));
  CHECK(j.find("\"status\": \"fail\"") != std::string::npos);
  const std::string t = r.to_text();
  CHECK(t.find("FAIL a-item [first]: mismatch") != std::string::npos);
  CHECK(t.rfind("FAIL (2 checks)") != std::string::npos);
}
