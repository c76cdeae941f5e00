#include "hvff/schur.hpp"

#include <vector>

namespace hvff {

ModePoly::ModePoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Partition{}, c);
}

ModePoly ModePoly::var(int n, const Scalar& c) {
  ModePoly p;
  p.add(Partition{n}, c);
  return p;
}

Scalar ModePoly::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void ModePoly::add(const Partition& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ModePoly& ModePoly::operator+=(const ModePoly& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

ModePoly& ModePoly::operator-=(const ModePoly& o) {
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

ModePoly operator*(const ModePoly& a, const ModePoly& b) {
  ModePoly out;
  for (const auto& [p, c] : a.terms_) {
    for (const auto& [q, d] : b.terms_) out.add(merge_partitions(p, q), c * d);
  }
  return out;
}

ModePoly ModePoly::scaled(const Scalar& c) const {
  ModePoly out;
  if (c.is_zero()) return out;
  for (const auto& [p, v] : terms_) out.terms_.emplace(p, v * c);
  return out;
}

bool operator==(const ModePoly& a, const ModePoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [p, c] : a.terms_) {
    if (it->first != p || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

ModePoly ModePoly::compose(const std::function<ModePoly(int)>& images) const {
  std::map<int, ModePoly> cache;
  const auto image = [&](int n) -> const ModePoly& {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, images(n)).first;
    return it->second;
  };
  ModePoly out;
  for (const auto& [p, c] : terms_) {
    ModePoly term(c);
    for (int n : p) term = term * image(n);
    out += term;
  }
  return out;
}

std::string ModePoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [p, c] = *it;
    std::string cs = c.to_string();
    const bool neg = c.is_rational() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < p.size();) {
      std::size_t j = i;
      while (j < p.size() && p[j] == p[i]) ++j;
      if (!mono.empty()) mono += "*";
      mono += var + "_" + std::to_string(p[i]);
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    if (mono.empty()) {
      s += c.is_rational() ? cs : "(" + cs + ")";
    } else if (cs == "1") {
      s += mono;
    } else {
      s += (c.is_rational() ? cs : "(" + cs + ")") + "*" + mono;
    }
  }
  return s;
}

SchurPoly::SchurPoly(int r, std::map<Partition, Rational> terms) : r_(r), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second.canonicalize();
    if (partition_sum(it->first) != r_) throw std::invalid_argument("Schur term of wrong weight");
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
}

Rational SchurPoly::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

ModePoly SchurPoly::to_mode_poly() const {
  ModePoly out;
  for (const auto& [p, c] : terms_) out.add(p, Scalar(c));
  return out;
}

std::string SchurPoly::to_string() const { return to_mode_poly().to_string("x"); }

namespace {

using XPoly = std::map<Partition, Rational>;

void add_into(XPoly& acc, const Partition& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

XPoly mul(const XPoly& a, const XPoly& b) {
  XPoly out;
  for (const auto& [p, c] : a) {
    for (const auto& [q, d] : b) add_into(out, merge_partitions(p, q), c * d);
  }
  return out;
}

// Power series in y truncated after degree r, coefficients in XPoly.
using YSeries = std::vector<XPoly>;

YSeries mul(const YSeries& a, const YSeries& b, int r) {
  YSeries out(r + 1);
  for (int i = 0; i <= r; ++i) {
    if (a[i].empty()) continue;
    for (int j = 0; i + j <= r; ++j) {
      if (b[j].empty()) continue;
      for (const auto& [p, c] : mul(a[i], b[j])) add_into(out[i + j], p, c);
    }
  }
  return out;
}

}  // namespace

SchurPoly schur_gen(int r) {
  if (r < 0) throw std::invalid_argument("negative Schur index");
  YSeries t(r + 1);
  for (int n = 1; n <= r; ++n) t[n][Partition{n}] = Rational(1, n);
  YSeries power(r + 1);
  power[0][Partition{}] = 1;
  XPoly result = r == 0 ? XPoly{{Partition{}, Rational(1)}} : XPoly{};
  Rational factorial = 1;
  // Only T^k with k <= r reach degree r.
  for (int k = 1; k <= r; ++k) {
    power = mul(power, t, r);
    factorial *= k;
    for (const auto& [p, c] : power[r]) add_into(result, p, c / factorial);
  }
  return SchurPoly(r, std::move(result));
}

SchurPoly schur_det(int r) {
  if (r < 0) throw std::invalid_argument("negative Schur index");
  const auto entry = [r](int i, int j) -> XPoly {
    if (i == 0) return {{Partition{j + 1}, Rational(1)}};
    if (j == i - 1) return {{Partition{}, Rational(-(r - i))}};
    if (j >= i) return {{Partition{j - i + 1}, Rational(1)}};
    return {};
  };
  // det of the submatrix on rows in `mask` and the last popcount(mask) columns,
  // expanded along its first column.
  std::map<unsigned, XPoly> memo;
  std::function<XPoly(unsigned)> det = [&](unsigned mask) -> XPoly {
    if (mask == 0) return {{Partition{}, Rational(1)}};
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int col = r - __builtin_popcount(mask);
    XPoly out;
    int sign_pos = 0;
    for (int i = 0; i < r; ++i) {
      if (!(mask & (1U << i))) continue;
      const XPoly e = entry(i, col);
      if (!e.empty()) {
        const Rational sign = sign_pos % 2 == 0 ? 1 : -1;
        for (const auto& [p, c] : mul(e, det(mask & ~(1U << i)))) add_into(out, p, sign * c);
      }
      ++sign_pos;
    }
    memo.emplace(mask, out);
    return out;
  };
  XPoly d = det(r == 0 ? 0U : (1U << r) - 1);
  Rational factorial = 1;
  for (int k = 2; k <= r; ++k) factorial *= k;
  for (auto& [p, c] : d) c /= factorial;
  return SchurPoly(r, std::move(d));
}

}  // namespace hvff
