#include "chern/brim.hpp"

#include <functional>

namespace chern {

int sequence_degree(const std::vector<long long>& values, int from) {
  std::vector<long long> cur(values.begin() + from, values.end());
  int k = 0;
  while (cur.size() >= 2) {
    bool constant = true;
    for (std::size_t i = 1; i < cur.size(); ++i) constant = constant && cur[i] == cur[0];
    if (constant) return cur[0] == 0 ? (k == 0 ? -1 : k - 1) : k;
    std::vector<long long> next;
    for (std::size_t i = 1; i < cur.size(); ++i) next.push_back(cur[i] - cur[i - 1]);
    cur = std::move(next);
    ++k;
  }
  return -1;
}

namespace {

template <class F>
class ReesComponents {
 public:
  explicit ReesComponents(const ParameterModule<F>& e) : e_(e), nx_(e.ring->num_vars()) {
    std::vector<std::string> names;
    for (int i = 0; i < e.r; ++i) names.push_back("_T" + std::to_string(i));
    big_ = std::make_shared<const PolyRing<F>>(e.ring->extended(names));
    s_ = std::make_unique<FreeModule<F>>(FreeModule<F>::ring_module(big_));
    for (const auto& j : e.ring_relations) relations_.push_back(lift(j, {}));
    for (int col = 0; col < e.m; ++col) {
      std::vector<Term<F>> raw;
      for (const auto& t : e.phi.column(col)) {
        raw.push_back(Term<F>{t.mono * Monomial::variable(nx_ + t.comp), 0, t.coeff});
      }
      g_.push_back(s_->normalize(std::move(raw)));
    }
  }

  /// lambda([S[T] / (J + I)]_n) for I generated by ideal_gens.
  long long component_length(const SubmoduleGB<F>& gb, int n) const {
    std::vector<std::pair<Monomial, Monomial>> leads;  // (x-part, T-part)
    for (const auto& b : gb.basis()) {
      const auto& m = b.lead().mono;
      std::vector<int> xs(static_cast<std::size_t>(nx_)), ts(static_cast<std::size_t>(e_.r));
      for (int v = 0; v < nx_; ++v) xs[static_cast<std::size_t>(v)] = m[v];
      for (int v = 0; v < e_.r; ++v) ts[static_cast<std::size_t>(v)] = m[nx_ + v];
      auto tm = Monomial::from_exponents(ts);
      if (tm.degree() <= n) leads.emplace_back(Monomial::from_exponents(xs), tm);
    }
    long long total = 0;
    std::vector<int> b(static_cast<std::size_t>(e_.r), 0);
    std::function<void(int, int)> walk = [&](int pos, int left) {
      if (pos == e_.r - 1) {
        b[static_cast<std::size_t>(pos)] = left;
        const auto tb = Monomial::from_exponents(b);
        std::vector<Monomial> ideal;
        for (const auto& [xm, tm] : leads) {
          if (tm.divides(tb)) ideal.push_back(xm);
        }
        auto len = HilbertSeries(monomial_ideal_numerator(ideal), nx_).length();
        if (!len) throw NotParameterIdeal("F^n/E^n has infinite length at n = " + std::to_string(n), 0, 0);
        total += *len;
        return;
      }
      for (int k = 0; k <= left; ++k) {
        b[static_cast<std::size_t>(pos)] = k;
        walk(pos + 1, left - k);
      }
    };
    walk(0, n);
    return total;
  }

  std::vector<long long> rees_table(int n_max) const {
    std::vector<long long> out{0};
    std::vector<Poly<F>> power;  // generators of (g)^n of T-degree n
    for (int n = 1; n <= n_max; ++n) {
      std::vector<Poly<F>> next;
      if (n == 1) {
        next = g_;
      } else {
        for (const auto& p : power) {
          for (const auto& g : g_) next.push_back(s_->mul(p, g));
        }
      }
      auto gens = relations_;
      gens.insert(gens.end(), next.begin(), next.end());
      auto gb = groebner(*s_, gens);
      // Keep the T-degree-n part of the basis as the generators of the next power.
      power.clear();
      for (const auto& b : gb.basis()) {
        if (t_degree(b.lead().mono) == n) power.push_back(b);
      }
      out.push_back(component_length(gb, n));
    }
    return out;
  }

  std::vector<long long> cokernel_table(int n_max) const {
    auto gens = relations_;
    gens.insert(gens.end(), g_.begin(), g_.end());
    auto gb = groebner(*s_, gens);
    std::vector<long long> out{0};
    for (int n = 1; n <= n_max; ++n) out.push_back(component_length(gb, n));
    return out;
  }

 private:
  int t_degree(const Monomial& m) const {
    int d = 0;
    for (int v = 0; v < e_.r; ++v) d += m[nx_ + v];
    return d;
  }

  Poly<F> lift(const Poly<F>& f, const Monomial& t) const {
    std::vector<Term<F>> raw;
    for (const auto& term : f) raw.push_back(Term<F>{term.mono * t, 0, term.coeff});
    return s_->normalize(std::move(raw));
  }

  const ParameterModule<F>& e_;
  int nx_;
  RingPtr<F> big_;
  std::unique_ptr<FreeModule<F>> s_;
  std::vector<Poly<F>> relations_;
  std::vector<Poly<F>> g_;
};

}  // namespace

template <class F>
ParameterModule<F> make_parameter_module(RingPtr<F> ring, std::vector<Poly<F>> ring_relations,
                                         const std::vector<std::vector<Poly<F>>>& matrix) {
  if (matrix.empty()) throw std::invalid_argument("the matrix of a parameter module needs at least one row");
  const int r = static_cast<int>(matrix.size());
  const int m = static_cast<int>(matrix.front().size());
  if (ring->num_vars() + r > kMaxVars) {
    throw std::invalid_argument("variables plus rank exceed the supported " + std::to_string(kMaxVars));
  }
  FreeModule<F> target(ring, std::vector<int>(static_cast<std::size_t>(r), 0));
  std::vector<Poly<F>> cols;
  for (int j = 0; j < m; ++j) {
    std::vector<Poly<F>> entries;
    for (const auto& row : matrix) {
      if (static_cast<int>(row.size()) != m) throw std::invalid_argument("matrix rows have different lengths");
      const auto& p = row[static_cast<std::size_t>(j)];
      if (!p.is_zero() && p.lead().mono.degree() == 0) {
        throw std::invalid_argument("matrix entries must lie in the irrelevant ideal");
      }
      entries.push_back(p);
    }
    cols.push_back(target.from_entries(entries));
  }
  auto phi = ModuleMap<F>::from_columns(target, cols);
  for (int j = 0; j < m; ++j) {
    if (phi.column(j).is_zero()) throw std::invalid_argument("matrix has a zero column");
  }
  ParameterModule<F> e{ring, std::move(ring_relations), std::move(phi)};
  e.r = r;
  e.m = m;
  auto rmod = GradedModule<F>::quotient_ring(ring, e.ring_relations);
  e.d = dim_module(rmod);
  if (e.d == kDimensionOfZero) throw std::invalid_argument("the ring is zero");
  std::vector<Poly<F>> rels = e.phi.columns();
  for (const auto& j : e.ring_relations) {
    for (int i = 0; i < r; ++i) rels.push_back(target.embed(j, i));
  }
  auto c = GradedModule<F>::cokernel(target, rels);
  if (auto w = c.gb().infinite_direction()) {
    throw NotParameterIdeal("F/E has infinite length: no power of " +
                                ring->var_names()[static_cast<std::size_t>(w->second)] +
                                " among the leading terms of component " + std::to_string(w->first),
                            w->first, w->second);
  }
  e.colength = *colength(c.gb());
  return e;
}

template <class F>
std::vector<long long> br_table(const ParameterModule<F>& e, int n_max) {
  return ReesComponents<F>(e).rees_table(n_max);
}

template <class F>
std::vector<long long> symmetric_cokernel_table(const ParameterModule<F>& e, int n_max) {
  return ReesComponents<F>(e).cokernel_table(n_max);
}

template <class F>
BRReport br_coefficients(const ParameterModule<F>& e, int n_max) {
  BRReport rep;
  const int big_d = e.d + e.r - 1;
  rep.expected_degree = big_d;
  const int limit = n_max < 0 ? big_d + 12 : n_max;
  ReesComponents<F> rees(e);
  std::vector<long long> table = rees.rees_table(std::min(limit, big_d + 4));
  bool done = false;
  for (int n0 = 1; !done; ++n0) {
    while (static_cast<int>(table.size()) <= n0 + big_d + 2) {
      if (static_cast<int>(table.size()) > limit) {
        throw StabilizationError("Buchsbaum-Rim polynomial did not stabilize by n = " + std::to_string(limit));
      }
      table = rees.rees_table(static_cast<int>(table.size()));
    }
    auto a = fit_shifted_basis(table, n0, big_d, -1);
    auto b = fit_shifted_basis(table, n0 + 1, big_d, -1);
    if (!a || !b || *a != *b) continue;
    long long predicted = 0;
    const int n = n0 + big_d + 2;
    for (int i = 0; i <= big_d; ++i) {
      predicted += (i % 2 == 0 ? 1 : -1) * (*a)[static_cast<std::size_t>(i)] * binomial(n - 1 + big_d - i, big_d - i);
    }
    if (predicted != table[static_cast<std::size_t>(n)]) continue;
    rep.coefficients = *a;
    rep.stabilized_at = n0;
    done = true;
  }
  rep.table = table;
  rep.br = rep.coefficients[0];
  rep.br1 = big_d >= 1 ? rep.coefficients[1] : 0;
  rep.degree = sequence_degree(table, rep.stabilized_at);
  rep.lower_bound = true;
  bool all_equal = true;
  for (int n = 0; n < static_cast<int>(table.size()); ++n) {
    const long long bound = rep.br * binomial(n + big_d - 1, big_d);
    const long long v = table[static_cast<std::size_t>(n)];
    rep.lower_bound = rep.lower_bound && v >= bound;
    if (n >= 1 && v == bound) rep.equality_case = true;
    all_equal = all_equal && v == bound;
  }
  rep.equality_everywhere = rep.equality_case && all_equal;
  return rep;
}

template <class F>
ConjectureProbe probe_conjecture_9_5(const ParameterModule<F>& e) {
  ConjectureProbe p;
  auto rmod = GradedModule<F>::quotient_ring(e.ring, e.ring_relations);
  p.cohen_macaulay = local_cohomology_lengths(rmod).cohen_macaulay();
  p.unmixed = is_unmixed(rmod);
  p.br1 = br_coefficients(e).br1;
  p.alert = p.unmixed && p.br1 == 0 && !p.cohen_macaulay;
  return p;
}

#define CHERN_INSTANTIATE(F)                                                                            \
  template ParameterModule<F> make_parameter_module(RingPtr<F>, std::vector<Poly<F>>,                   \
                                                    const std::vector<std::vector<Poly<F>>>&);          \
  template std::vector<long long> br_table(const ParameterModule<F>&, int);                             \
  template std::vector<long long> symmetric_cokernel_table(const ParameterModule<F>&, int);             \
  template BRReport br_coefficients(const ParameterModule<F>&, int);                                    \
  template ConjectureProbe probe_conjecture_9_5(const ParameterModule<F>&);
CHERN_INSTANTIATE(PrimeField)
CHERN_INSTANTIATE(RationalField)
#undef CHERN_INSTANTIATE

}  // namespace chern
