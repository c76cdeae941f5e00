#include "hvff/linalg.hpp"

#include <algorithm>
#include <utility>

namespace hvff {

namespace {

struct IntOps {
  using T = Integer;
  static bool zero(const T& x) { return x == 0; }
  static T one() { return 1; }
  static T exact_div(const T& a, const T& b) {
    T q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static std::size_t weight(const T& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }
  static std::size_t terms(const T& x) { return zero(x) ? 0 : 1; }
  static Scalar to_scalar(const T& x) { return Scalar(Rational(x)); }
};

struct PolyOps {
  using T = Poly;
  static bool zero(const T& x) { return x.is_zero(); }
  static T one() { return Poly(Rational(1)); }
  static T exact_div(const T& a, const T& b) {
    if (auto c = b.as_constant()) return a.scaled(Rational(1) / *c);
    auto q = a.divide_exact(b);
    if (!q) throw std::logic_error("Bareiss step is not exact");
    return *std::move(q);
  }
  static std::size_t weight(const T& x) { return x.size() * 64 + x.total_degree(); }
  static std::size_t terms(const T& x) { return x.size(); }
  static Scalar to_scalar(const T& x) { return Scalar(x); }
};

template <class Ops>
Elimination bareiss(std::vector<std::vector<typename Ops::T>> m, std::size_t cols, const KernelOptions& opts) {
  using T = typename Ops::T;
  Elimination out;
  out.cols = cols;
  const std::size_t rows = m.size();
  std::vector<bool> is_pivot(cols, false);
  std::vector<std::size_t> pivot_row_of;  // parallel to out.pivot_cols
  T prev = Ops::one();
  std::size_t r = 0;

  const auto check_budget = [&] {
    if (opts.max_terms == 0) return;
    std::size_t total = 0;
    for (const auto& row : m) {
      for (const auto& e : row) total += Ops::terms(e);
    }
    if (total > opts.max_terms) throw BudgetExceeded("elimination exceeded term budget");
  };

  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (Ops::zero(m[i][c])) continue;
      if (best == rows || Ops::weight(m[i][c]) < Ops::weight(m[best][c])) best = i;
    }
    if (best == rows) continue;
    std::swap(m[best], m[r]);
    const T piv = m[r][c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const T f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        T v = piv * m[i][j];
        if (!Ops::zero(f) && !Ops::zero(m[r][j])) v -= f * m[r][j];
        m[i][j] = Ops::exact_div(v, prev);
      }
      m[i][c] = T{};
    }
    prev = piv;
    is_pivot[c] = true;
    out.pivot_cols.push_back(c);
    pivot_row_of.push_back(r);
    ++r;
    check_budget();
  }

  for (std::size_t j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<T> v(cols);
    v[j] = prev;
    for (std::size_t k = 0; k < out.pivot_cols.size(); ++k) v[out.pivot_cols[k]] = -m[pivot_row_of[k]][j];
    ScalarVec sv;
    sv.reserve(cols);
    for (auto& e : v) sv.push_back(Ops::to_scalar(e));
    out.kernel.push_back(std::move(sv));
  }
  return out;
}

// Divides out the content of a polynomial vector and makes the first nonzero
// entry's leading coefficient positive.
void remove_content(ScalarVec& v) {
  Poly g;
  bool first = true;
  for (const auto& e : v) {
    if (e.is_zero()) continue;
    const Poly p = e.numerator();
    g = first ? p.monic() : gcd(g, p);
    first = false;
    if (g.is_one()) break;
  }
  if (first) return;
  // Rational content: make coefficients integral and coprime.
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (auto& e : v) {
    if (e.is_zero()) continue;
    Poly p = e.numerator();
    if (!g.is_one()) p = *p.divide_exact(g);
    e = Scalar(p);
  }
  for (const auto& e : v) {
    const Poly num = e.numerator();
    for (const auto& t : num.terms()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  for (const auto& e : v) {
    if (e.is_zero()) continue;
    if (e.numerator().leading().coeff < 0) scale = -scale;
    break;
  }
  for (auto& e : v) e *= Scalar(scale);
}

}  // namespace

std::size_t term_count(const Matrix& m) {
  std::size_t total = 0;
  for (const auto& row : m) {
    for (const auto& e : row) total += e.numerator().size() + (e.is_rational() ? 0 : e.denominator().size());
  }
  return total;
}

Elimination eliminate(const Matrix& m, std::size_t cols, const KernelOptions& opts) {
  const bool all_rational = std::all_of(m.begin(), m.end(), [](const ScalarVec& row) {
    return std::all_of(row.begin(), row.end(), [](const Scalar& e) { return e.is_rational(); });
  });
  Elimination out;
  if (all_rational) {
    std::vector<std::vector<Integer>> im;
    im.reserve(m.size());
    for (const auto& row : m) {
      Integer l = 1;
      for (const auto& e : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.if_rational()->get_den_mpz_t());
      std::vector<Integer> irow;
      irow.reserve(cols);
      for (const auto& e : row) {
        const Rational& q = *e.if_rational();
        irow.push_back(q.get_num() * (l / q.get_den()));
      }
      im.push_back(std::move(irow));
    }
    out = bareiss<IntOps>(std::move(im), cols, opts);
  } else {
    std::vector<std::vector<Poly>> pm;
    pm.reserve(m.size());
    for (const auto& row : m) {
      Poly l(Rational(1));
      for (const auto& e : row) {
        const Poly d = e.denominator();
        if (d.is_one() || l.divide_exact(d)) continue;
        const Poly g = gcd(l, d);
        l = l * *d.divide_exact(g);
      }
      std::vector<Poly> prow;
      prow.reserve(cols);
      for (const auto& e : row) {
        if (e.is_zero()) {
          prow.emplace_back();
          continue;
        }
        const Poly d = e.denominator();
        prow.push_back(d.is_one() ? e.numerator() * l : e.numerator() * *l.divide_exact(d));
      }
      pm.push_back(std::move(prow));
    }
    out = bareiss<PolyOps>(std::move(pm), cols, opts);
  }
  for (auto& v : out.kernel) remove_content(v);
  return out;
}

std::vector<ScalarVec> ff_kernel(const Matrix& m, std::size_t cols, const KernelOptions& opts) {
  return eliminate(m, cols, opts).kernel;
}

std::vector<ScalarVec> ff_kernel(const Matrix& m, const KernelOptions& opts) {
  if (m.empty()) return {};
  return ff_kernel(m, m.front().size(), opts);
}

std::size_t rank(const Matrix& m, const KernelOptions& opts) {
  if (m.empty()) return 0;
  return eliminate(m, m.front().size(), opts).pivot_cols.size();
}

std::optional<ScalarVec> solve(const Matrix& a, const ScalarVec& b, std::size_t cols, const KernelOptions& opts) {
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(-b[i]);
  const Elimination e = eliminate(aug, cols + 1, opts);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == cols) return std::nullopt;
  const ScalarVec& v = e.kernel.back();
  ScalarVec x(v.begin(), v.end() - 1);
  const Scalar last = v.back();
  for (auto& xi : x) xi /= last;
  return x;
}

ScalarVec mat_vec(const Matrix& m, const ScalarVec& v) {
  ScalarVec out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Scalar acc;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_zero() && !v[j].is_zero()) acc += row[j] * v[j];
    }
    out.push_back(acc);
  }
  return out;
}

Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  long n = 0;
  while (n == 0) n = num(rng);
  Rational q(n, den(rng));
  q.canonicalize();
  return q;
}

}  // namespace hvff
