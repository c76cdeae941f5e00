#include <doctest.h>

#include <random>

#include "hvff/fock.hpp"
#include "hvff/fusion.hpp"

using namespace hvff;

namespace {

Scalar P(Param p) { return Scalar::param(p); }
Scalar Q(long n, long d = 1) { return Scalar::ratio(n, d); }

struct Sample {
  FusionQuery query;
  Scalar r1, s1, r2, s2, lambda, mu;
};

// Random weights with h_I/c - 1 = q and h'_I/c - 1 = p; lattice points from
// fock_params_for.
Sample draw(std::mt19937_64& rng, long p, long q) {
  Sample s;
  do {
    s.lambda = Scalar(random_rational(rng));
    s.mu = Scalar(random_rational(rng));
  } while ((s.lambda - s.mu).is_zero());
  const Scalar c = s.lambda - s.mu;
  const Scalar cL = 2 - 12 * (s.lambda * s.lambda - s.mu * s.mu);
  const Scalar h(random_rational(rng)), hp(random_rational(rng));
  const Scalar hI = Scalar(q + 1) * c, hpI = Scalar(p + 1) * c;
  std::tie(s.r1, s.s1) = fock_params_for(h, hI, s.lambda, s.mu);
  std::tie(s.r2, s.s2) = fock_params_for(hp, hpI, s.lambda, s.mu);
  s.query = {h, hI, hp, hpI, cL, c};
  return s;
}

}  // namespace

TEST_CASE("fusion examples") {
  const Scalar c = P(Param::c_LI), cL = P(Param::c_L), h = P(Param::h), hp = P(Param::h_prime);
  const auto a = fusion_dim({h, Q(0), hp, Q(0), cL, c});
  CHECK(a.kind == FusionCase::BothNegative);
  CHECK(a.d == 1);
  CHECK(*a.h_out == h + hp);
  CHECK(a.h_I_out->is_zero());

  const auto z = fusion_dim({h, 3 * c, hp, 2 * c, cL, c});
  CHECK(z.kind == FusionCase::Vanishing);
  CHECK(z.d == 0);
  CHECK_FALSE(z.h_out.has_value());

  CHECK(fusion_dim({h, c, hp, 0 * c, cL, c}).kind == FusionCase::OutOfRange);
  CHECK(fusion_dim({h, c / 2, hp, 0 * c, cL, c}).kind == FusionCase::OutOfRange);
  CHECK(fusion_dim({h, P(Param::h_I), hp, 0 * c, cL, c}).kind == FusionCase::OutOfRange);
  CHECK_THROWS_AS(fusion_dim({h, Q(1), hp, Q(1), cL, Q(0)}), PreconditionViolated);

  // q = -1, p = 2 is case ii; q = 2, p = -2 is case iii; q = -3, p = 2 vanishes
  CHECK(fusion_dim({h, 0 * c, hp, 3 * c, cL, c}).kind == FusionCase::FirstNegative);
  CHECK(fusion_dim({h, 3 * c, hp, -c, cL, c}).kind == FusionCase::SecondNegative);
  CHECK(fusion_dim({h, -2 * c, hp, 3 * c, cL, c}).kind == FusionCase::Vanishing);
}

TEST_CASE("fusion formulas agree with lattice arithmetic") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> mag(1, 6);
  int counts[3] = {0, 0, 0};
  for (int t = 0; t < 200; ++t) {
    const Sample s = draw(rng, -mag(rng), -mag(rng));
    const auto a = fusion_dim(s.query);
    REQUIRE(a.kind == FusionCase::BothNegative);
    CHECK(*a.h_out == delta(s.r1 + s.r2, s.s1 + s.s2, s.lambda, s.mu));
    CHECK(*a.h_I_out == s.query.h_I + s.query.hp_I);
    ++counts[0];
  }
  for (int t = 0; t < 200; ++t) {
    const long q0 = mag(rng);
    const long p = q0 + mag(rng) - 1;
    const Sample s = draw(rng, p, -q0);
    const auto a = fusion_dim(s.query);
    REQUIRE(a.kind == FusionCase::FirstNegative);
    CHECK(*a.h_out == delta(s.r2 - s.r1, s.s2 - s.s1, s.lambda, s.mu));
    ++counts[1];
  }
  for (int t = 0; t < 200; ++t) {
    const long p0 = mag(rng);
    const long q = p0 + mag(rng) - 1;
    const Sample s = draw(rng, -p0, q);
    const auto a = fusion_dim(s.query);
    REQUIRE(a.kind == FusionCase::SecondNegative);
    CHECK(*a.h_out == delta(s.r2 - s.r1, s.s2 - s.s1, s.lambda, s.mu));
    ++counts[2];
  }
  CHECK(counts[0] == 200);
  CHECK(counts[1] == 200);
  CHECK(counts[2] == 200);
}

TEST_CASE("fusion table shape") {
  const Scalar c = P(Param::c_LI), cL = P(Param::c_L), h = P(Param::h), hp = P(Param::h_prime);
  for (long p = -3; p <= 3; ++p) {
    for (long q = -3; q <= 3; ++q) {
      const auto a = fusion_dim({h, Scalar(q + 1) * c, hp, Scalar(p + 1) * c, cL, c});
      if (p == 0 || q == 0) {
        CHECK(a.kind == FusionCase::OutOfRange);
        continue;
      }
      CHECK(a.d <= 1);
      const bool expect = (p < 0 && q < 0) || (1 <= -q && -q <= p) || (1 <= -p && -p <= q);
      CHECK(a.d == (expect ? 1 : 0));
      if (p > 0 && q > 0) CHECK(a.d == 0);
    }
  }
}

TEST_CASE("uniqueness relation") {
  std::mt19937_64 rng(99);
  for (int p0 = 1; p0 <= 3; ++p0) {
    for (long p : {-2L, -1L, static_cast<long>(p0), static_cast<long>(p0) + 2}) {
      for (int t = 0; t < 2; ++t) {
        const Sample s = draw(rng, p, -p0);
        const auto a = fusion_dim(s.query);
        REQUIRE(a.d == 1);
        const Scalar sum = delta(s.r1 + s.r2, s.s1 + s.s2, s.lambda, s.mu);
        CHECK(fund_relation_residual(s.query, sum).is_zero());
        CHECK_FALSE(fund_relation_residual(s.query, sum + 1).is_zero());
        CHECK(uniqueness_weight(s.query) == sum);
        if (a.kind == FusionCase::BothNegative) {
          CHECK(fund_relation_residual(s.query, *a.h_out).is_zero());
        } else {
          // the printed mixed-case weight is Delta(r2 - r1, s2 - s1); the relation rejects it
          CHECK_FALSE(fund_relation_residual(s.query, *a.h_out).is_zero());
        }
      }
    }
  }
  // transposed: only the second module negative
  for (int p0 = 1; p0 <= 3; ++p0) {
    const Sample s = draw(rng, -p0, p0 + 1);
    CHECK(uniqueness_weight(s.query) == delta(s.r1 + s.r2, s.s1 + s.s2, s.lambda, s.mu));
  }
  const Scalar c = P(Param::c_LI), cL = P(Param::c_L), h = P(Param::h), hp = P(Param::h_prime);
  const FusionQuery fq{h, -c, hp, -c, cL, c};
  CHECK(fund_relation_residual(fq, *fusion_dim(fq).h_out).is_zero());
  CHECK(uniqueness_weight(fq) == *fusion_dim(fq).h_out);
  CHECK_THROWS_AS(fund_relation_residual({h, 2 * c, hp, -c, cL, c}, h), PreconditionViolated);
  CHECK_THROWS_AS(uniqueness_weight({h, 2 * c, hp, 3 * c, cL, c}), PreconditionViolated);
}
