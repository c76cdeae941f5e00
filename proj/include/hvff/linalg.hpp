#pragma once

// Fraction-free elimination over Z and Q[params] for Scalar matrices.

#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "hvff/scalar.hpp"

namespace hvff {

using ScalarVec = std::vector<Scalar>;
using Matrix = std::vector<ScalarVec>;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KernelOptions {
  // Total polynomial terms allowed in the working matrix; 0 disables the check.
  std::size_t max_terms = 0;
};

struct Elimination {
  std::size_t cols = 0;
  std::vector<std::size_t> pivot_cols;
  // One vector per free column, in increasing column order; entries are
  // polynomial (or integral) with trivial content.
  std::vector<ScalarVec> kernel;
};

Elimination eliminate(const Matrix& m, std::size_t cols, const KernelOptions& opts = {});

// Right kernel basis of m. An empty m with cols columns has the full basis.
std::vector<ScalarVec> ff_kernel(const Matrix& m, std::size_t cols, const KernelOptions& opts = {});
std::vector<ScalarVec> ff_kernel(const Matrix& m, const KernelOptions& opts = {});

std::size_t rank(const Matrix& m, const KernelOptions& opts = {});

// Some x with a*x = b, or nullopt when inconsistent.
std::optional<ScalarVec> solve(const Matrix& a, const ScalarVec& b, std::size_t cols,
                               const KernelOptions& opts = {});

ScalarVec mat_vec(const Matrix& m, const ScalarVec& v);
std::size_t term_count(const Matrix& m);

// Random nonzero rational with small numerator and denominator.
Rational random_rational(std::mt19937_64& rng, long num_bound = 97, long den_bound = 13);

}  // namespace hvff
