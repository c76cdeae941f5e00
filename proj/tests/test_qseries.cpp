#include <doctest.h>

#include "hvff/partition.hpp"
#include "hvff/qseries.hpp"
#include "hvff/verma.hpp"

using namespace hvff;

namespace {

std::vector<Scalar> ints(std::initializer_list<long> xs) {
  std::vector<Scalar> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("verma character") {
  CHECK(verma_char(5).coeffs() == ints({1, 2, 5, 10, 20, 36}));
  CHECK(verma_char(0).coeffs() == ints({1}));
  // pairs of partitions, counted by enumeration
  for (int n = 0; n <= 12; ++n) {
    long count = 0;
    for (int k = 0; k <= n; ++k) count += static_cast<long>(partitions(k).size() * partitions(n - k).size());
    CHECK(verma_char(12).coeff(n) == Scalar(count));
  }
  for (int n = 0; n <= 6; ++n) CHECK(verma_char(6).coeff(n) == Scalar(static_cast<long>(verma_dim(n))));
  const VermaModule mod(HighestWeight::hvir(Scalar(3), Scalar(1), Scalar(0), Scalar(0)));
  for (int n = 0; n <= 6; ++n) CHECK(verma_char(6).coeff(n) == Scalar(static_cast<long>(mod.basis(n).size())));
}

TEST_CASE("partition counts") {
  const auto p = partition_counts(40);
  CHECK(p[5] == 7);
  CHECK(p[10] == 42);
  CHECK(p[40] == 37338);
  for (int n = 0; n <= 15; ++n) CHECK(p[n] == static_cast<long>(partitions(n).size()));
  // convolution square
  const QSeries v = verma_char(30);
  for (int n = 0; n <= 30; ++n) {
    Integer acc = 0;
    for (int k = 0; k <= n; ++k) acc += p[k] * p[n - k];
    CHECK(v.coeff(n) == Scalar(Rational(acc)));
  }
}

TEST_CASE("irreducible character") {
  CHECK(irr_char(1, 5).coeffs() == ints({1, 1, 3, 5, 10, 16}));
  CHECK(irr_char(2, 4).coeffs() == ints({1, 2, 4, 8, 15}));
  for (int p = 1; p <= 6; ++p) CHECK(irr_char(p, 8).coeff(0) == Scalar(1));
  CHECK_THROWS_AS(irr_char(0, 3), PreconditionViolated);
}

TEST_CASE("character decomposition") {
  CHECK(decomp_check(1, 20));
  CHECK(decomp_check(3, 20));
  CHECK(decomp_check(1, 0));
  for (int p = 1; p <= 6; ++p) {
    for (int n = 0; n <= 30; ++n) CHECK(decomp_check(p, n));
  }
}

TEST_CASE("series arithmetic") {
  const QSeries a(Scalar(0), ints({1, -1}));
  const QSeries b(Scalar(0), ints({1, 1, 1, 1}));
  CHECK((a * b).coeffs() == ints({1, 0}));
  CHECK(b.shifted(2).coeffs() == ints({0, 0, 1, 1}));
  CHECK_THROWS(verma_char(3) + QSeries(Scalar(0), ints({1})));
  CHECK(verma_char(3).to_string() == "q^h·(1 + 2q + 5q² + 10q³ + …)");
  CHECK(QSeries(Scalar(0), ints({0, -1, 0, 12})).to_string() == "(-q + 12q³ + …)");
}
