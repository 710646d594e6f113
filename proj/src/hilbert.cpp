#include "chern/hilbert.hpp"

#include <gmpxx.h>

namespace chern {

long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  long long b = 1;
  for (long long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

long long HilbertCoefficients::polynomial_at(int n) const {
  long long v = 0;
  for (int i = 0; i <= r; ++i) {
    const long long term = e_at(i) * binomial(n + r - i, r - i);
    v += (i % 2 == 0) ? term : -term;
  }
  return v;
}

std::optional<std::vector<long long>> fit_shifted_basis(const std::vector<long long>& values, int n0, int s,
                                                        int shift) {
  const int size = s + 1;
  std::vector<std::vector<mpq_class>> a(static_cast<std::size_t>(size), std::vector<mpq_class>(size + 1));
  for (int k = 0; k < size; ++k) {
    const int n = n0 + k;
    for (int i = 0; i < size; ++i) {
      const long long b = binomial(n + shift + s - i, s - i);
      a[k][i] = static_cast<long>((i % 2 == 0) ? b : -b);
    }
    a[k][size] = static_cast<long>(values[static_cast<std::size_t>(n)]);
  }
  for (int col = 0; col < size; ++col) {
    int piv = col;
    while (piv < size && a[piv][col] == 0) ++piv;
    if (piv == size) return std::nullopt;
    std::swap(a[piv], a[col]);
    for (int row = 0; row < size; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const mpq_class f = a[row][col] / a[col][col];
      for (int c = col; c <= size; ++c) a[row][c] -= f * a[col][c];
    }
  }
  std::vector<long long> out;
  for (int i = 0; i < size; ++i) {
    mpq_class v = a[i][size] / a[i][i];
    v.canonicalize();
    if (v.get_den() != 1) return std::nullopt;
    out.push_back(v.get_num().get_si());
  }
  return out;
}

std::optional<std::vector<long long>> fit_binomial_basis(const std::vector<long long>& values, int n0, int s) {
  return fit_shifted_basis(values, n0, s, 0);
}

template <class F>
long long finite_colength(const GradedModule<F>& m, const std::vector<Poly<F>>& ideal) {
  auto quot = quotient_by_ideal(m, ideal);
  if (auto w = quot.gb().infinite_direction()) {
    const auto& name = m.ring().var_names()[static_cast<std::size_t>(w->second)];
    throw NotParameterIdeal("M/QM has infinite length: no power of " + name + " lies in the leading terms of component " +
                                std::to_string(w->first),
                            w->first, w->second);
  }
  return *colength(quot.gb());
}

template <class F>
ParameterIdeal<F> make_parameter_ideal(const GradedModule<F>& m, std::vector<Poly<F>> gens) {
  ParameterIdeal<F> q;
  for (const auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("parameter ideal generators must be nonzero");
    if (!PolyRing<F>::is_homogeneous(g)) throw InhomogeneousInput("parameter ideal generators must be homogeneous");
    if (g.lead().mono.degree() == 0) throw std::invalid_argument("parameter ideal generators must have positive degree");
    q.degrees.push_back(g.lead().mono.degree());
  }
  const int r = dim_module(m);
  if (r == kDimensionOfZero) throw std::invalid_argument("the zero module has no parameter ideals");
  if (static_cast<int>(gens.size()) != r) {
    throw std::invalid_argument("a parameter ideal needs dim M = " + std::to_string(r) + " generators, got " +
                                std::to_string(gens.size()));
  }
  q.colength = finite_colength(m, gens);
  q.gens = std::move(gens);
  return q;
}

template <class F>
SamuelFunction<F>::SamuelFunction(GradedModule<F> m, std::vector<Poly<F>> ideal)
    : m_(std::move(m)), ideal_(std::move(ideal)) {
  std::erase_if(ideal_, [](const Poly<F>& p) { return p.is_zero(); });
}

template <class F>
long long SamuelFunction<F>::operator()(int n) {
  auto s = FreeModule<F>::ring_module(m_.ring_ptr());
  while (static_cast<int>(values_.size()) <= n) {
    const std::size_t k = values_.size();
    if (powers_.empty()) {
      powers_.push_back(groebner(s, ideal_));
    } else {
      std::vector<Poly<F>> prods;
      for (const auto& b : powers_.back().basis()) {
        for (const auto& g : ideal_) prods.push_back(s.mul(g, b));
      }
      powers_.push_back(groebner(s, std::move(prods)));
    }
    std::vector<Poly<F>> ideal_gens;
    for (const auto& b : powers_[k].basis()) ideal_gens.push_back(b);
    auto quot = quotient_by_ideal(m_, ideal_gens);
    auto len = colength(quot.gb());
    if (!len) throw NotParameterIdeal("ideal power does not have finite colength", 0, 0);
    values_.push_back(*len);
  }
  return values_[static_cast<std::size_t>(n)];
}

template <class F>
HilbertSamuelTable hilbert_samuel(const GradedModule<F>& m, const ParameterIdeal<F>& q, int n) {
  SamuelFunction<F> fn(m, q.gens);
  HilbertSamuelTable t;
  for (int i = 0; i <= n; ++i) t.values.push_back(fn(i));
  const int r = static_cast<int>(q.gens.size());
  for (int n0 = 0; n0 + r + 2 <= n; ++n0) {
    auto a = fit_binomial_basis(t.values, n0, r);
    auto b = fit_binomial_basis(t.values, n0 + 1, r);
    if (a && b && *a == *b) {
      t.stabilized = true;
      t.stabilized_at = n0;
      break;
    }
  }
  return t;
}

template <class F>
HilbertCoefficients samuel_coefficients(const GradedModule<F>& m, const std::vector<Poly<F>>& ideal,
                                        const SamuelOptions& options) {
  const int s = dim_module(m);
  HilbertCoefficients out;
  if (s == kDimensionOfZero) {
    out.r = -1;
    out.table.stabilized = true;
    out.table.stabilized_at = 0;
    return out;
  }
  out.r = s;
  SamuelFunction<F> fn(m, ideal);
  std::vector<long long> values;
  for (int n0 = 0; n0 + s + 2 <= options.n_max; ++n0) {
    while (static_cast<int>(values.size()) <= n0 + s + 2) values.push_back(fn(static_cast<int>(values.size())));
    auto a = fit_binomial_basis(values, n0, s);
    auto b = fit_binomial_basis(values, n0 + 1, s);
    if (!a || !b || *a != *b) continue;
    out.e = *a;
    out.stabilized_at = n0;
    if (out.polynomial_at(n0 + s + 2) != values[static_cast<std::size_t>(n0 + s + 2)]) continue;
    out.table.values = values;
    out.table.stabilized = true;
    out.table.stabilized_at = n0;
    return out;
  }
  throw StabilizationError("Hilbert-Samuel polynomial did not stabilize by n = " + std::to_string(options.n_max) +
                           "; raise the bound");
}

template <class F>
GradedModule<F> zeroth_local_cohomology(const GradedModule<F>& m) {
  std::vector<Poly<F>> vars;
  for (int i = 0; i < m.ring().num_vars(); ++i) vars.push_back(m.ring().variable(i));
  auto sat = saturate(m.gb(), vars);
  return subquotient(m.ambient(), sat.basis(), m.gb().basis());
}

template <class F>
SuperficialReport superficial_check(const GradedModule<F>& m, const ParameterIdeal<F>& q, const Poly<F>& h,
                                    const SamuelOptions& options) {
  SuperficialReport rep;
  const int r = static_cast<int>(q.gens.size());
  auto torsion = colon_module(m, h);
  auto tl = length(torsion);
  rep.colon_finite = tl.has_value();
  rep.colon_length = tl.value_or(-1);
  auto quot = quotient_by_ideal(m, {h});
  rep.dimension_drops = dim_module(quot) == r - 1;
  rep.e_module = hilbert_coefficients(m, q, options).e;
  if (!rep.colon_finite || !rep.dimension_drops) return rep;
  rep.e_quotient = samuel_coefficients(quot, q.gens, options).e;
  rep.lower_identities = true;
  for (int i = 0; i < r - 1; ++i) {
    rep.lower_identities = rep.lower_identities && rep.e_module[i] == rep.e_quotient[i];
  }
  const long long sign = (r % 2 == 0) ? 1 : -1;
  rep.top_identity = rep.e_module[r - 1] == rep.e_quotient[r - 1] + sign * rep.colon_length;
  rep.h0_quotient = *length(zeroth_local_cohomology(quot));
  rep.lemma_bound = rep.colon_length <= rep.h0_quotient;
  rep.pass = rep.lower_identities && rep.top_identity && rep.lemma_bound;
  return rep;
}

#define CHERN_INSTANTIATE(F)                                                                              \
  template class SamuelFunction<F>;                                                                       \
  template long long finite_colength(const GradedModule<F>&, const std::vector<Poly<F>>&);               \
  template ParameterIdeal<F> make_parameter_ideal(const GradedModule<F>&, std::vector<Poly<F>>);         \
  template HilbertSamuelTable hilbert_samuel(const GradedModule<F>&, const ParameterIdeal<F>&, int);      \
  template HilbertCoefficients samuel_coefficients(const GradedModule<F>&, const std::vector<Poly<F>>&, \
                                                   const SamuelOptions&);                                 \
  template GradedModule<F> zeroth_local_cohomology(const GradedModule<F>&);                               \
  template SuperficialReport superficial_check(const GradedModule<F>&, const ParameterIdeal<F>&,         \
                                               const Poly<F>&, const SamuelOptions&);
CHERN_INSTANTIATE(PrimeField)
CHERN_INSTANTIATE(RationalField)
#undef CHERN_INSTANTIATE

}  // namespace chern
