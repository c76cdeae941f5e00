#include <doctest.h>

#include <random>

#include "hvff/tensor.hpp"

using namespace hvff;

namespace {

Scalar P(Param p) { return Scalar::param(p); }
Scalar Q(long n, long d = 1) { return Scalar::ratio(n, d); }

// Oracle: phi_n(u) is the coefficient of v_n in S(u)v_{n+k}, where S reverses
// the word and negates each letter, acting on the intermediate series module.
struct SeriesVec {
  long index;
  Scalar coeff;
};

SeriesVec act_series(GenKind kind, int mode, const SeriesVec& v, const Scalar& n0, const IntermediateParams& prm) {
  const Scalar m = n0 + Scalar(v.index);
  if (kind == GenKind::L) return {v.index + mode, v.coeff * -(m + prm.a + prm.b + Scalar(mode) * prm.b)};
  return {v.index + mode, v.coeff * prm.F};
}

Scalar phi_oracle(const Scalar& n, const VermaVector& u, const IntermediateParams& prm) {
  Scalar out;
  for (const auto& [m, c] : u.terms()) {
    // word letters left to right: I-part then L-part; S(u) applies them left first
    std::vector<std::pair<GenKind, int>> word;
    for (int a : m.a) word.emplace_back(GenKind::I, -a);
    for (int l : m.l) word.emplace_back(GenKind::L, -l);
    SeriesVec v{m.grade(), Scalar(1)};
    for (const auto& [kind, mode] : word) {
      v = act_series(kind, mode, v, n, prm);
      v.coeff = -v.coeff;
    }
    REQUIRE(v.index == 0);
    out += c * v.coeff;
  }
  return out;
}

HighestWeight neg_weight(int p) {
  const Scalar c = P(Param::c_LI);
  return HighestWeight::hvir(P(Param::c_L), c, P(Param::h), Scalar(1 - p) * c);
}

}  // namespace

TEST_CASE("phi examples") {
  const IntermediateParams prm{P(Param::a), P(Param::b), P(Param::F)};
  const Scalar n = P(Param::n), c = P(Param::c_LI), hp = P(Param::h);
  CHECK(phi(n, PBWMonomial{}, prm) == Q(1));
  CHECK(phi(n, PBWMonomial{{1}, {}}, prm) == -P(Param::F));
  VermaVector lam = VermaVector::monomial(Algebra::HVir, PBWMonomial{{}, {1}});
  lam.add(PBWMonomial{{1}, {}}, hp / c);
  CHECK(phi(n, lam, prm) == n + 1 + P(Param::a) - P(Param::F) * hp / c);
  CHECK_THROWS_AS(phi(n, VermaVector(Algebra::W22), prm), AlgebraMismatch);
}

TEST_CASE("phi agrees with the intermediate series oracle") {
  std::mt19937_64 rng(7);
  const IntermediateParams sym{P(Param::a), P(Param::b), P(Param::F)};
  const VermaModule mod(HighestWeight::hvir(Q(1), Q(1), Q(0), Q(0)));
  for (int g = 0; g <= 5; ++g) {
    for (const auto& m : mod.basis(g)) {
      const VermaVector u = mod.vector(m);
      CHECK(phi(P(Param::n), u, sym) == phi_oracle(P(Param::n), u, sym));
    }
  }
  for (int t = 0; t < 10; ++t) {
    const IntermediateParams prm{Scalar(random_rational(rng)), Scalar(random_rational(rng)),
                                 Scalar(random_rational(rng))};
    const Scalar n(static_cast<long>(t) - 5);
    VermaVector u(Algebra::HVir);
    for (const auto& m : mod.basis(4)) u.add(m, Scalar(random_rational(rng)));
    CHECK(phi(n, u, prm) == phi_oracle(n, u, prm));
  }
}

TEST_CASE("phi on the Schur singular vector") {
  const Scalar F = P(Param::F), c = P(Param::c_LI);
  for (int p = 1; p <= 6; ++p) CHECK(phi_omega(p, F, c) == phi_omega_closed(p, F, c));
  CHECK(phi_omega(1, F, c) == F / c);
  CHECK(phi_omega(2, F, c) == (F * F / (c * c) + F / c) / 2);
  for (int p = 1; p <= 6; ++p) {
    for (int i = 1; i <= p; ++i) CHECK(phi_omega(p, Scalar(i - p) * c, c).is_zero());
    CHECK_FALSE(phi_omega(p, Scalar(1) * c, c).is_zero());
    CHECK_FALSE(phi_omega(p, Scalar(-p) * c, c).is_zero());
  }
  // numeric c
  CHECK(phi_omega(3, Q(5, 2), Q(-3)) == phi_omega_closed(3, Q(5, 2), Q(-3)));
}

TEST_CASE("positive case irreducibility") {
  const Scalar c = P(Param::c_LI);
  auto v = irreducible_pos(2, -c, c);
  CHECK_FALSE(v.irreducible);
  CHECK(v.witness == 1);
  CHECK(irreducible_pos(2, c / 2, c).irreducible);
  CHECK_FALSE(irreducible_pos(1, Q(0), c).irreducible);
  CHECK(irreducible_pos(3, P(Param::F), c).irreducible);
  for (int p = 1; p <= 5; ++p) {
    for (int j = -p - 2; j <= 2; ++j) {
      const auto r = irreducible_pos(p, Scalar(j) * c, c);
      CHECK(r.irreducible == (j < 1 - p || j > 0));
    }
  }
}

TEST_CASE("negative case at p = 1") {
  const HighestWeight hw = neg_weight(1);
  const Scalar c = hw.c_LI, h = hw.h, F = P(Param::F);
  const auto rec = reducibility_neg(1, hw, {P(Param::a), P(Param::b), F});
  CHECK(rec.kind == NegativeCase::Generic);
  CHECK(rec.phi_lambda == P(Param::n) + 1 + P(Param::a) - F * h / c);
  REQUIRE(rec.alpha0);
  CHECK(*rec.alpha0 == F * h / c - 1);
  CHECK(rec.quotient_weight->second == F);
  CHECK_FALSE(rec.reducible.has_value());

  // numeric a
  const HighestWeight num = HighestWeight::hvir(Q(5), Q(2), Q(3), Q(0));
  const auto yes = reducibility_neg(1, num, {Q(7, 2) - 3, Q(1, 3), Q(1)});
  CHECK(yes.reducible == true);
  const auto no = reducibility_neg(1, num, {Q(1, 3), Q(1, 3), Q(1)});
  CHECK(no.reducible == false);
  CHECK(no.witnesses == std::vector<std::string>{"none"});
}

TEST_CASE("negative case at p = 2, F = -k c_LI") {
  // module weight h', and b = 1 - h
  const Scalar c = P(Param::c_LI), cL = P(Param::c_L), h = P(Param::h), hp = P(Param::h_prime);
  const HighestWeight hw = HighestWeight::hvir(cL, c, hp, -c);
  const Scalar F = P(Param::F), a = P(Param::a), b = P(Param::b), n = P(Param::n);
  const auto gen = reducibility_neg(2, hw, {a, b, F});
  const Scalar printed = (n + 2 + a - b) - F / c * (n + 1 + a) - F / c * (cL + 8 * hp - 2) / 16 +
                         F * F / (c * c) * (cL + 24 * hp - 2) / 48;
  CHECK(gen.phi_lambda == printed);
  for (long k : {0L, 1L, 2L, 3L, 5L}) {
    const Scalar K(k);
    const auto rec = reducibility_neg(2, hw, {a, 1 - h, -K * c});
    REQUIRE(rec.kind == NegativeCase::Generic);
    const Scalar hpp = (K + 2) / (K + 1) * h + (K + 2) / 2 * hp + K * (K + 3) / (K + 1) * (cL - 2) / 48;
    // the printed a = h + h' - h'' is the representative a0 + 1 of the class a0 mod Z
    CHECK(*rec.alpha0 + 1 == h + hp - hpp);
    CHECK(rec.quotient_weight->first == hpp + 1);
    CHECK(rec.quotient_weight->second == -(K + 1) * c);
  }
}

TEST_CASE("negative case: boundary and always reducible") {
  for (int p = 2; p <= 3; ++p) {
    const HighestWeight hw = neg_weight(p);
    const Scalar c = hw.c_LI, cL = hw.c_L, b = P(Param::b);
    const auto rec = reducibility_neg(p, hw, {P(Param::a), b, c});
    CHECK(rec.kind == NegativeCase::Boundary);
    REQUIRE(rec.condition);
    CHECK(rec.condition->substitute(Param::b, 1 - (cL - 2) / 24).is_zero());
    CHECK_FALSE(rec.condition->is_zero());
    CHECK_FALSE(rec.reducible.has_value());
    // computed boundary value of g_p; the relation g_p(c) = b - 1 does not hold
    CHECK(extract_g_p(p, hw, c) == -(cL - 2) / 24);
  }
  const HighestWeight hw3 = neg_weight(3);
  const auto rec = reducibility_neg(3, hw3, {P(Param::a), P(Param::b), 2 * hw3.c_LI});
  CHECK(rec.kind == NegativeCase::AlwaysReducible);
  CHECK(rec.reducible == true);
  CHECK(rec.phi_lambda.is_zero());
  CHECK_THROWS_AS(reducibility_neg(2, neg_weight(1), {P(Param::a), P(Param::b), P(Param::F)}), PreconditionViolated);
}

TEST_CASE("phi on the negative singular vector is affine in n") {
  std::mt19937_64 rng(13);
  for (int p = 2; p <= 3; ++p) {
    for (int t = 0; t < 3; ++t) {
      const Scalar c(random_rational(rng));
      const HighestWeight hw =
          HighestWeight::hvir(Scalar(random_rational(rng)), c, Scalar(random_rational(rng)), Scalar(1 - p) * c);
      const IntermediateParams prm{Scalar(random_rational(rng)), Scalar(random_rational(rng)),
                                   Scalar(random_rational(rng))};
      const VermaVector lam = lambda_neg(hw, p);
      const Scalar v = phi(P(Param::n), lam, prm);
      const auto coeffs = v.coefficients_in(Param::n);
      REQUIRE(coeffs.size() == 2);
      const Scalar expect = gen_binomial(prm.F / c - 1, static_cast<unsigned>(p - 1));
      CHECK(coeffs[1] == (p % 2 == 1 ? expect : -expect));
    }
  }
}

TEST_CASE("g_p zeros") {
  for (int p = 3; p <= 4; ++p) {
    const HighestWeight hw = neg_weight(p);
    const Scalar c = hw.c_LI;
    const Scalar g = extract_g_p(p, hw, P(Param::F));
    for (int i = 2; i <= p - 1; ++i) CHECK(g.substitute(Param::F, Scalar(i) * c).is_zero());
    // the endpoint i = p is not a zero
    CHECK_FALSE(g.substitute(Param::F, Scalar(p) * c).is_zero());
  }
  const HighestWeight hw2 = neg_weight(2);
  CHECK_FALSE(extract_g_p(2, hw2, 2 * hw2.c_LI).is_zero());
}
