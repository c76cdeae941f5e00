#include "hvff/verma.hpp"

#include <algorithm>
#include <random>

#include "hvff/schur.hpp"

namespace hvff {

// ---------------------------------------------------------------- weights

HighestWeight HighestWeight::hvir(Scalar c_L, Scalar c_LI, Scalar h, Scalar h_I) {
  HighestWeight w;
  w.algebra = Algebra::HVir;
  w.c_L = std::move(c_L);
  w.c_LI = std::move(c_LI);
  w.h = std::move(h);
  w.h_I = std::move(h_I);
  return w;
}

HighestWeight HighestWeight::w22(Scalar c_L, Scalar c_W, Scalar h, Scalar h_W) {
  HighestWeight w;
  w.algebra = Algebra::W22;
  w.c_L = std::move(c_L);
  w.c_W = std::move(c_W);
  w.h = std::move(h);
  w.h_W = std::move(h_W);
  return w;
}

Scalar HighestWeight::value(const Generator& g) const {
  switch (g.kind) {
    case GenKind::C_L:
    case GenKind::C: return c_L;
    case GenKind::C_LI: return c_LI;
    case GenKind::C_I: return Scalar(0);
    case GenKind::C_W: return c_W;
    case GenKind::L: return g.mode == 0 ? h : Scalar(0);
    case GenKind::I: return g.mode == 0 ? h_I : Scalar(0);
    case GenKind::W: return g.mode == 0 ? h_W : Scalar(0);
  }
  return Scalar(0);
}

HighestWeight HighestWeight::specialized(const Bindings& b) const {
  HighestWeight w = *this;
  for (Scalar* s : {&w.c_L, &w.c_LI, &w.h, &w.h_I, &w.c_W, &w.h_W}) *s = Scalar(s->specialize(b));
  return w;
}

std::vector<Param> HighestWeight::parameters() const {
  std::vector<Param> out;
  for (const Scalar* s : {&c_L, &c_LI, &h, &h_I, &c_W, &h_W}) {
    for (Param p : parameters_of(*s)) {
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Scalar HighestWeight::p_value() const {
  if (algebra != Algebra::HVir) throw AlgebraMismatch("p is defined for HVir weights");
  if (c_LI.is_zero()) throw PreconditionViolated("c_LI must be nonzero");
  return h_I / c_LI - 1;
}

std::string HighestWeight::to_string() const {
  if (algebra == Algebra::HVir) {
    return "(c_L, c_I, c_LI, h, h_I) = (" + c_L.to_string() + ", 0, " + c_LI.to_string() + ", " + h.to_string() +
           ", " + h_I.to_string() + ")";
  }
  return "(c_L, c_W, h, h_W) = (" + c_L.to_string() + ", " + c_W.to_string() + ", " + h.to_string() + ", " +
         h_W.to_string() + ")";
}

// ---------------------------------------------------------------- monomials

int PBWMonomial::grade() const { return partition_sum(a) + partition_sum(l); }

namespace {

void append_letters(std::string& s, char letter, const Partition& p) {
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    s += letter;
    s += "(" + std::to_string(-p[i]) + ")";
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
}

}  // namespace

std::string PBWMonomial::to_string(Algebra alg) const {
  std::string s;
  append_letters(s, alg == Algebra::HVir ? 'I' : 'W', a);
  append_letters(s, 'L', l);
  return s;
}

bool leading_less(const PBWMonomial& x, const PBWMonomial& y) {
  const int lx = partition_sum(x.l);
  const int ly = partition_sum(y.l);
  if (lx != ly) return lx < ly;
  if (x.length() != y.length()) return x.length() > y.length();
  return x < y;
}

// ---------------------------------------------------------------- vectors

VermaVector::VermaVector(Algebra alg, Terms terms) : algebra_(alg) {
  for (auto& [m, c] : terms) add(m, c);
}

VermaVector VermaVector::monomial(Algebra alg, PBWMonomial m, Scalar c) {
  VermaVector v(alg);
  v.add(m, c);
  return v;
}

Scalar VermaVector::coeff(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<int> VermaVector::grade() const {
  if (terms_.empty()) return std::nullopt;
  const int g = terms_.begin()->first.grade();
  for (const auto& [m, c] : terms_) {
    if (m.grade() != g) return std::nullopt;
  }
  return g;
}

const PBWMonomial& VermaVector::leading() const {
  if (terms_.empty()) throw std::logic_error("zero vector has no leading monomial");
  auto it = std::max_element(terms_.begin(), terms_.end(),
                             [](const auto& x, const auto& y) { return leading_less(x.first, y.first); });
  return it->first;
}

void VermaVector::add(const PBWMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VermaVector VermaVector::scaled(const Scalar& c) const {
  VermaVector out(algebra_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

VermaVector& VermaVector::operator+=(const VermaVector& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

VermaVector& VermaVector::operator-=(const VermaVector& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

bool operator==(const VermaVector& a, const VermaVector& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (it->first != m || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

VermaVector VermaVector::normalized() const {
  if (is_zero()) return *this;
  return scaled(coeff(leading()).inverse());
}

VermaVector VermaVector::specialized(const Bindings& b) const {
  VermaVector out(algebra_);
  for (const auto& [m, c] : terms_) out.add(m, Scalar(c.specialize(b)));
  return out;
}

bool VermaVector::proportional_to(const VermaVector& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  const PBWMonomial& lead = o.leading();
  const Scalar mine = coeff(lead);
  if (mine.is_zero()) return false;
  return *this == o.scaled(mine / o.coeff(lead));
}

std::string VermaVector::to_string() const {
  std::vector<std::pair<PBWMonomial, Scalar>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return leading_less(y.first, x.first); });
  std::vector<std::pair<CoeffText, std::string>> parts;
  for (const auto& [m, c] : sorted) parts.emplace_back(coefficient_text(c), m.to_string(algebra_) + "v");
  return join_terms(parts);
}

// ---------------------------------------------------------------- action

namespace {

// Sort key of a PBW letter; words are ascending in this key.
std::pair<int, int> letter_key(GenKind kind, int mode) { return {kind == GenKind::L ? 1 : 0, mode}; }

}  // namespace

VermaModule::VermaModule(HighestWeight hw) : hw_(std::move(hw)) {}

VermaVector VermaModule::highest() const { return VermaVector::monomial(hw_.algebra, PBWMonomial{}); }

VermaVector VermaModule::vector(const PBWMonomial& m, const Scalar& c) const {
  return VermaVector::monomial(hw_.algebra, m, c);
}

void VermaModule::accumulate(const Generator& g, const VermaVector::Terms& in, const Scalar& scale,
                             VermaVector::Terms& out) const {
  for (const auto& [m, c] : in) {
    const Scalar factor = c * scale;
    for (const auto& [m2, c2] : apply_monomial(g, m)) {
      const Scalar add = c2 * factor;
      auto [it, inserted] = out.try_emplace(m2, add);
      if (!inserted) {
        it->second += add;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
}

const VermaVector::Terms& VermaModule::apply_monomial(const Generator& g, const PBWMonomial& m) const {
  const Key key{g, m};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
  }
  auto result = std::make_unique<VermaVector::Terms>();
  VermaVector::Terms& out = *result;
  const auto put = [&](const PBWMonomial& mono, const Scalar& c) {
    if (!c.is_zero()) out.emplace(mono, c);
  };
  const bool special_zero = g.mode == 0 && (g.kind == GenKind::L || g.kind == GenKind::I);

  if (g.is_central()) {
    put(m, hw_.value(g));
  } else if (special_zero) {
    // L(0) measures the grade; I(0) is central at level zero.
    put(m, g.kind == GenKind::L ? hw_.h + Scalar(m.grade()) : hw_.h_I);
  } else if (m.a.empty() && m.l.empty() && g.mode >= 0) {
    put(m, hw_.value(g));
  } else if (m.a.empty() && m.l.empty()) {
    PBWMonomial mm;
    (g.kind == GenKind::L ? mm.l : mm.a).push_back(-g.mode);
    put(mm, Scalar(1));
  } else {
    const bool first_is_a = !m.a.empty();
    const GenKind first_kind = first_is_a ? (hw_.algebra == Algebra::HVir ? GenKind::I : GenKind::W) : GenKind::L;
    const int first_mode = first_is_a ? -m.a.front() : -m.l.front();
    if (g.mode < 0 && letter_key(g.kind, g.mode) <= letter_key(first_kind, first_mode)) {
      PBWMonomial mm = m;
      Partition& part = g.kind == GenKind::L ? mm.l : mm.a;
      part.insert(part.begin(), -g.mode);
      put(mm, Scalar(1));
    } else {
      // g X rest = X (g rest) + [g, X] rest
      PBWMonomial rest = m;
      Partition& part = first_is_a ? rest.a : rest.l;
      part.erase(part.begin());
      const Generator x{hw_.algebra, first_kind, first_mode};
      VermaVector::Terms inner;
      accumulate(g, {{rest, Scalar(1)}}, Scalar(1), inner);
      accumulate(x, inner, Scalar(1), out);
      const LieElement gx = bracket(g, x);
      for (const auto& [h, c] : gx.terms()) accumulate(h, {{rest, Scalar(1)}}, c, out);
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cache_.try_emplace(key, std::move(result));
  return *it->second;
}

VermaVector VermaModule::apply(const Generator& g, const VermaVector& w) const {
  g.validate();
  if (g.algebra != hw_.algebra || (!w.is_zero() && w.algebra() != hw_.algebra)) {
    throw AlgebraMismatch("generator and module belong to different algebras");
  }
  VermaVector::Terms out;
  accumulate(g, w.terms(), Scalar(1), out);
  return VermaVector(hw_.algebra, std::move(out));
}

VermaVector VermaModule::apply(const LieElement& x, const VermaVector& w) const {
  VermaVector out(hw_.algebra);
  for (const auto& [g, c] : x.terms()) out += apply(g, w).scaled(c);
  return out;
}

VermaVector VermaModule::apply_word(const std::vector<Generator>& word, const VermaVector& w) const {
  VermaVector cur = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply(*it, cur);
  return cur;
}

std::vector<PBWMonomial> VermaModule::basis(int grade) const {
  std::vector<PBWMonomial> out;
  for (int k = 0; k <= grade; ++k) {
    for (const auto& pa : partitions(k)) {
      for (const auto& pl : partitions(grade - k)) out.push_back(PBWMonomial{pa, pl});
    }
  }
  std::sort(out.begin(), out.end(), leading_less);
  return out;
}

std::vector<Generator> VermaModule::annihilators() const {
  if (hw_.algebra == Algebra::HVir) return {Generator::L(1), Generator::L(2), Generator::I(1)};
  // [L(1), W(1)] = 0, so W(2) is needed as well.
  return {Generator::L(1, Algebra::W22), Generator::L(2, Algebra::W22), Generator::W(1), Generator::W(2)};
}

std::size_t verma_dim(int grade) {
  std::size_t total = 0;
  for (int k = 0; k <= grade; ++k) total += partitions(k).size() * partitions(grade - k).size();
  return total;
}

bool is_singular(const VermaModule& mod, const VermaVector& w) {
  for (const auto& g : mod.annihilators()) {
    if (!mod.apply(g, w).is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- solvers

Matrix annihilation_matrix(const VermaModule& mod, int grade) {
  const auto basis = mod.basis(grade);
  const auto gens = mod.annihilators();
  std::map<std::pair<std::size_t, PBWMonomial>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const VermaVector b = mod.vector(basis[j]);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const VermaVector img = mod.apply(gens[gi], b);
      for (const auto& [m, c] : img.terms()) {
        auto [it, inserted] = row_of.try_emplace({gi, m}, row_of.size());
        cols[j].emplace_back(it->second, c);
      }
    }
  }
  Matrix mat(row_of.size(), ScalarVec(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [i, c] : cols[j]) mat[i][j] = c;
  }
  return mat;
}

std::vector<Bindings> random_draws(const HighestWeight& hw, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto params = hw.parameters();
  std::vector<Bindings> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 1000 * count) throw std::runtime_error("could not find admissible random specializations");
    Bindings b;
    for (Param p : params) b[p] = random_rational(rng);
    try {
      const HighestWeight s = hw.specialized(b);
      if (hw.algebra == Algebra::HVir && s.c_LI.is_zero()) continue;
      if (hw.algebra == Algebra::W22 && s.c_W.is_zero()) continue;
    } catch (const VanishingDenominator&) {
      continue;
    }
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

std::vector<VermaVector> vectors_from_kernel(const VermaModule& mod, const std::vector<PBWMonomial>& basis,
                                             const std::vector<ScalarVec>& kernel) {
  std::vector<VermaVector> out;
  for (const auto& v : kernel) {
    VermaVector w(mod.algebra());
    for (std::size_t j = 0; j < v.size(); ++j) w.add(basis[j], v[j]);
    out.push_back(w.normalized());
  }
  return out;
}

}  // namespace

SingularSolve solve_singular(const HighestWeight& hw, int grade, const SolveOptions& opts) {
  if (grade < 1) throw PreconditionViolated("singular vectors are sought at positive grade");
  SingularSolve out;
  if (opts.mode != SolveMode::Numeric || hw.parameters().empty()) {
    const VermaModule mod(hw);
    const auto basis = mod.basis(grade);
    const Matrix m = annihilation_matrix(mod, grade);
    try {
      const KernelOptions ko{opts.mode == SolveMode::Auto ? opts.term_budget : 0};
      out.vectors = vectors_from_kernel(mod, basis, ff_kernel(m, basis.size(), ko));
      out.symbolic = true;
      out.dims = {out.vectors.size()};
      return out;
    } catch (const BudgetExceeded&) {
    }
  }
  out.symbolic = false;
  out.draws = random_draws(hw, std::max(opts.draws, 3), opts.seed);
  std::size_t best = 0;
  for (std::size_t d = 0; d < out.draws.size(); ++d) {
    const VermaModule mod(hw.specialized(out.draws[d]));
    const auto basis = mod.basis(grade);
    auto vecs = vectors_from_kernel(mod, basis, ff_kernel(annihilation_matrix(mod, grade), basis.size()));
    out.dims.push_back(vecs.size());
    // The generic dimension is the smallest one observed.
    if (d == 0 || vecs.size() < out.dims[best]) {
      best = d;
      out.vectors = std::move(vecs);
    }
  }
  if (best != 0) std::swap(out.draws[0], out.draws[best]);
  return out;
}

std::vector<VermaVector> singular_vectors(const HighestWeight& hw, int grade, const SolveOptions& opts) {
  return solve_singular(hw, grade, opts).vectors;
}

VermaVector schur_singular(const HighestWeight& hw, int p) {
  if (hw.algebra != Algebra::HVir) throw AlgebraMismatch("schur_singular needs an HVir weight");
  if (p < 1) throw PreconditionViolated("p must be positive");
  if (!(hw.p_value() == Scalar(p))) {
    throw PreconditionViolated("h_I/c_LI - 1 = " + hw.p_value().to_string() + " differs from p = " + std::to_string(p));
  }
  const VermaModule mod(hw);
  const Scalar factor = -hw.c_LI.inverse();
  return substitute(schur_gen(p), mod.highest(), [&](int n, const VermaVector& w) {
    return mod.apply(Generator::I(-n), w).scaled(factor);
  });
}

namespace {

VermaVector lambda_neg_symbolic(const HighestWeight& hw, int p, std::size_t budget) {
  const VermaModule mod(hw);
  const Scalar inv = hw.c_LI.inverse();
  // Known part: sum_i S_i(I(-1)/c_LI, ...) L(i-p)v.
  VermaVector known(Algebra::HVir);
  for (int i = 0; i < p; ++i) {
    const VermaVector base = mod.apply(Generator::L(i - p), mod.highest());
    known += substitute(schur_gen(i), base, [&](int n, const VermaVector& w) {
      return mod.apply(Generator::I(-n), w).scaled(inv);
    });
  }
  const auto unknowns = partitions(p);
  const auto gens = mod.annihilators();
  std::map<std::pair<std::size_t, PBWMonomial>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(unknowns.size() + 1);
  const auto record = [&](std::size_t col, const VermaVector& w) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const VermaVector img = mod.apply(gens[gi], w);
      for (const auto& [m, c] : img.terms()) {
        auto [it, inserted] = row_of.try_emplace({gi, m}, row_of.size());
        cols[col].emplace_back(it->second, c);
      }
    }
  };
  for (std::size_t j = 0; j < unknowns.size(); ++j) record(j, mod.vector(PBWMonomial{unknowns[j], {}}));
  record(unknowns.size(), known);
  Matrix a(row_of.size(), ScalarVec(unknowns.size()));
  ScalarVec rhs(row_of.size());
  for (std::size_t j = 0; j <= unknowns.size(); ++j) {
    for (const auto& [i, c] : cols[j]) {
      if (j < unknowns.size()) a[i][j] = c;
      else rhs[i] = -c;
    }
  }
  auto y = solve(a, rhs, unknowns.size(), KernelOptions{budget});
  if (!y) throw std::runtime_error("no grade-" + std::to_string(p) + " completion of the L-linear part exists");
  VermaVector out = known;
  for (std::size_t j = 0; j < unknowns.size(); ++j) out.add(PBWMonomial{unknowns[j], {}}, (*y)[j]);
  return out;
}

}  // namespace

VermaVector lambda_neg(const HighestWeight& hw, int p, const SolveOptions& opts) {
  if (hw.algebra != Algebra::HVir) throw AlgebraMismatch("lambda_neg needs an HVir weight");
  if (p < 1) throw PreconditionViolated("p must be positive");
  if (!(hw.p_value() == Scalar(-p))) {
    throw PreconditionViolated("h_I/c_LI - 1 = " + hw.p_value().to_string() + " differs from -p = " +
                               std::to_string(-p));
  }
  if (opts.mode != SolveMode::Numeric || hw.parameters().empty()) {
    try {
      return lambda_neg_symbolic(hw, p, opts.mode == SolveMode::Auto ? opts.term_budget : 0);
    } catch (const BudgetExceeded&) {
    }
  }
  const auto draws = random_draws(hw, 1, opts.seed);
  return lambda_neg_symbolic(hw.specialized(draws.front()), p, 0);
}

}  // namespace hvff
