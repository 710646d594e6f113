#include "chern/hilbert_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace chern {

bool LaurentPoly::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; });
}

long long LaurentPoly::at_one() const {
  long long s = 0;
  for (long long c : coeffs) s += c;
  return s;
}

long long LaurentPoly::operator[](int exponent) const {
  const long i = static_cast<long>(exponent) - low;
  if (i < 0 || i >= static_cast<long>(coeffs.size())) return 0;
  return coeffs[static_cast<std::size_t>(i)];
}

LaurentPoly& LaurentPoly::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(lead));
    low += static_cast<int>(lead);
  }
  if (coeffs.empty()) low = 0;
  return *this;
}

namespace {

LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, long long sign) {
  if (a.coeffs.empty()) {
    LaurentPoly r = b;
    for (auto& c : r.coeffs) c *= sign;
    return r;
  }
  if (b.coeffs.empty()) return a;
  const int lo = std::min(a.low, b.low);
  const int hi = std::max(a.low + static_cast<int>(a.coeffs.size()), b.low + static_cast<int>(b.coeffs.size()));
  LaurentPoly r{lo, std::vector<long long>(static_cast<std::size_t>(hi - lo), 0)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[static_cast<std::size_t>(a.low - lo) + i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) {
    r.coeffs[static_cast<std::size_t>(b.low - lo) + i] += sign * b.coeffs[i];
  }
  return r.trim();
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, 1); }
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, -1); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  LaurentPoly r{a.low + b.low, std::vector<long long>(a.coeffs.size() + b.coeffs.size() - 1, 0)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return r.trim();
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a, y = b;
  x.trim();
  y.trim();
  return x.low == y.low && x.coeffs == y.coeffs;
}

LaurentPoly LaurentPoly::monomial(int exponent, long long c) {
  if (c == 0) return {};
  return LaurentPoly{exponent, {c}};
}

LaurentPoly LaurentPoly::divided_by_one_minus_t() const {
  if (at_one() != 0) throw std::domain_error("(1 - t) does not divide " + to_string());
  LaurentPoly p = *this;
  p.trim();
  if (p.coeffs.empty()) return {};
  // p = (1 - t) q  <=>  q_i = sum_{j <= i} p_j.
  LaurentPoly q{p.low, std::vector<long long>(p.coeffs.size() - 1, 0)};
  long long acc = 0;
  for (std::size_t i = 0; i + 1 < p.coeffs.size(); ++i) {
    acc += p.coeffs[i];
    q.coeffs[i] = acc;
  }
  return q.trim();
}

std::string LaurentPoly::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const long long c = coeffs[i];
    if (c == 0) continue;
    const int e = low + static_cast<int>(i);
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const long long m = c < 0 ? -c : c;
    if (e == 0) {
      out += std::to_string(m);
    } else {
      if (m != 1) out += std::to_string(m) + "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

HilbertSeries::HilbertSeries(LaurentPoly numerator, int denominator_power)
    : num_(std::move(numerator.trim())), power_(denominator_power) {}

HilbertSeries HilbertSeries::reduced() const {
  LaurentPoly n = num_;
  int p = power_;
  if (n.is_zero()) return HilbertSeries({}, 0);
  while (p > 0 && n.at_one() == 0) {
    n = n.divided_by_one_minus_t();
    --p;
  }
  return HilbertSeries(std::move(n), p);
}

int HilbertSeries::dimension() const {
  if (num_.is_zero()) return kDimensionOfZero;
  return reduced().power_;
}

long long HilbertSeries::multiplicity() const {
  if (num_.is_zero()) return 0;
  return reduced().num_.at_one();
}

std::optional<long long> HilbertSeries::length() const {
  const auto r = reduced();
  if (r.power_ > 0) return std::nullopt;
  return r.num_.at_one();
}

long long HilbertSeries::value(int degree) const {
  // Coefficient of t^degree in num / (1-t)^p = sum_j num_j binom(degree - j + p - 1, p - 1).
  long long total = 0;
  for (std::size_t i = 0; i < num_.coeffs.size(); ++i) {
    const int j = num_.low + static_cast<int>(i);
    const int k = degree - j;
    if (k < 0) continue;
    long long b = 1;
    if (power_ == 0) {
      b = k == 0 ? 1 : 0;
    } else {
      for (int s = 1; s < power_; ++s) b = b * (k + s) / s;
    }
    total += num_.coeffs[i] * b;
  }
  return total;
}

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
  const int p = std::max(a.power_, b.power_);
  LaurentPoly na = a.num_, nb = b.num_;
  const LaurentPoly one_minus_t{0, {1, -1}};
  for (int i = a.power_; i < p; ++i) na = na * one_minus_t;
  for (int i = b.power_; i < p; ++i) nb = nb * one_minus_t;
  return HilbertSeries(na + nb, p);
}

HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
  return a + HilbertSeries(LaurentPoly{} - b.num_, b.power_);
}

// ---------------------------------------------------------------------------

namespace {

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out) {
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

LaurentPoly numerator_rec(std::vector<Monomial> gens) {
  minimalize(gens);
  const LaurentPoly one = LaurentPoly::monomial(0);
  if (gens.empty()) return one;
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) coprime = gens[i].coprime(gens[j]);
  }
  if (coprime) {
    LaurentPoly r = one;
    for (const auto& g : gens) r = r * (one - LaurentPoly::monomial(g.degree()));
    return r;
  }
  // Pivot on a variable of a mixed generator: H(I) = H(I + p) + t^deg p H(I : p).
  int best = -1;
  int best_count = 0;
  for (int v = 0; v < kMaxVars; ++v) {
    int count = 0;
    bool in_mixed = false;
    for (const auto& g : gens) {
      if (g[v] > 0) {
        ++count;
        in_mixed = in_mixed || g.degree() != g[v];
      }
    }
    if (in_mixed && count > best_count) {
      best = v;
      best_count = count;
    }
  }
  std::vector<int> exps;
  int pure = 0;
  for (const auto& g : gens) {
    if (g[best] > 0) exps.push_back(g[best]);
    if (g[best] > 0 && g.degree() == g[best]) pure = g[best];
  }
  std::sort(exps.begin(), exps.end());
  int e = exps[exps.size() / 2];
  if (pure > 0) e = std::min(e, pure - 1);
  e = std::max(e, 1);
  const Monomial p = Monomial::variable(best, e);

  std::vector<Monomial> sum = gens;
  sum.push_back(p);
  std::vector<Monomial> quot;
  quot.reserve(gens.size());
  for (const auto& g : gens) quot.push_back(g / gcd(g, p));
  return numerator_rec(std::move(sum)) + LaurentPoly::monomial(e) * numerator_rec(std::move(quot));
}

}  // namespace

LaurentPoly monomial_ideal_numerator(std::vector<Monomial> gens) { return numerator_rec(std::move(gens)); }

template <class F>
HilbertSeries hilbert_series(const SubmoduleGB<F>& gb) {
  const auto& amb = gb.ambient();
  const auto leads = gb.leading_monomials();
  LaurentPoly num;
  for (int c = 0; c < amb.rank(); ++c) {
    num = num + LaurentPoly::monomial(amb.degree(c)) * monomial_ideal_numerator(leads[static_cast<std::size_t>(c)]);
  }
  return HilbertSeries(std::move(num), amb.ring().num_vars());
}

template HilbertSeries hilbert_series(const SubmoduleGB<PrimeField>&);
template HilbertSeries hilbert_series(const SubmoduleGB<RationalField>&);

}  // namespace chern
