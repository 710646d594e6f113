#include "chern/groebner.hpp"

#include <algorithm>
#include <string>

namespace chern {

template <class F>
SubmoduleGB<F>::SubmoduleGB(FreeModule<F> ambient, std::vector<Poly<F>> generators,
                            std::vector<Poly<F>> basis, std::optional<int> truncated_at,
                            GbStats stats)
    : ambient_(std::move(ambient)),
      generators_(std::move(generators)),
      basis_(std::move(basis)),
      truncated_at_(truncated_at),
      stats_(stats) {}

template <class F>
Poly<F> SubmoduleGB<F>::normal_form(const Poly<F>& v) const {
  std::vector<const Poly<F>*> divisors;
  divisors.reserve(basis_.size());
  for (const auto& b : basis_) divisors.push_back(&b);
  return reduce(ambient_, v, divisors);
}

template <class F>
Poly<F> SubmoduleGB<F>::normal_form(const FreeModule<F>& v_ambient, const Poly<F>& v) const {
  if (!(v_ambient == ambient_)) {
    throw AmbientMismatch("vector lives in a different free module than the Groebner basis");
  }
  return normal_form(v);
}

template <class F>
bool SubmoduleGB<F>::contains(const SubmoduleGB& other) const {
  for (const auto& b : other.basis()) {
    if (!contains(b)) return false;
  }
  return true;
}

template <class F>
std::vector<std::vector<Monomial>> SubmoduleGB<F>::leading_monomials() const {
  std::vector<std::vector<Monomial>> out(static_cast<std::size_t>(ambient_.rank()));
  for (const auto& b : basis_) out[static_cast<std::size_t>(b.lead().comp)].push_back(b.lead().mono);
  return out;
}

template <class F>
std::optional<std::pair<int, int>> SubmoduleGB<F>::infinite_direction() const {
  const auto leads = leading_monomials();
  const int n = ambient_.ring().num_vars();
  for (int c = 0; c < ambient_.rank(); ++c) {
    for (int v = 0; v < n; ++v) {
      const auto& lc = leads[static_cast<std::size_t>(c)];
      const bool has_power = std::any_of(lc.begin(), lc.end(), [&](const Monomial& m) {
        return m.degree() == m[v];
      });
      if (!has_power) return std::make_pair(c, v);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

/// a[from..] - c * q * b[1..], where the leading terms are known to cancel.
template <class F>
std::vector<Term<F>> cancel_lead(const F& k, const MonomialOrder& ord, const std::vector<Term<F>>& a,
                                 std::size_t from, const typename F::Element& c, const Monomial& q,
                                 const Poly<F>& b) {
  std::vector<Term<F>> out;
  out.reserve(a.size() - from + b.size());
  std::size_t i = from + 1;
  std::size_t j = 1;
  const auto& bt = b.terms();
  while (i < a.size() && j < bt.size()) {
    const Monomial m = bt[j].mono * q;
    const int cmp = ord.compare(a[i].mono, a[i].comp, m, bt[j].comp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(Term<F>{m, bt[j].comp, k.neg(k.mul(c, bt[j].coeff))});
      ++j;
    } else {
      auto s = k.sub(a[i].coeff, k.mul(c, bt[j].coeff));
      if (!k.is_zero(s)) out.push_back(Term<F>{m, a[i].comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < bt.size(); ++j) {
    out.push_back(Term<F>{bt[j].mono * q, bt[j].comp, k.neg(k.mul(c, bt[j].coeff))});
  }
  return out;
}

template <class F>
Poly<F> make_monic(const F& k, Poly<F> p) {
  if (p.is_zero() || k.is_one(p.lead().coeff)) return p;
  return arith::scale(k, p, k.inv(p.lead().coeff));
}

}  // namespace

template <class F>
Poly<F> reduce(const FreeModule<F>& ambient, const Poly<F>& v,
               const std::vector<const Poly<F>*>& divisors) {
  const auto ord = ambient.order();
  const F& k = ambient.field();
  std::vector<Term<F>> result;
  std::vector<Term<F>> cur = v.terms();
  std::size_t start = 0;
  while (start < cur.size()) {
    const Term<F>& t = cur[start];
    const Poly<F>* divisor = nullptr;
    for (const Poly<F>* d : divisors) {
      const auto& lt = d->lead();
      if (lt.comp == t.comp && lt.mono.divides(t.mono)) {
        divisor = d;
        break;
      }
    }
    if (divisor == nullptr) {
      result.push_back(t);
      ++start;
      continue;
    }
    const Monomial q = t.mono / divisor->lead().mono;
    const auto c = k.div(t.coeff, divisor->lead().coeff);
    cur = cancel_lead(k, ord, cur, start, c, q, *divisor);
    start = 0;
  }
  return Poly<F>(std::move(result));
}

template <class F>
Poly<F> s_vector(const FreeModule<F>& ambient, const Poly<F>& a, const Poly<F>& b) {
  const F& k = ambient.field();
  const Monomial l = lcm(a.lead().mono, b.lead().mono);
  auto pa = arith::mul_term(k, a, l / a.lead().mono, k.inv(a.lead().coeff));
  auto pb = arith::mul_term(k, b, l / b.lead().mono, k.inv(b.lead().coeff));
  return ambient.sub(pa, pb);
}

namespace {

template <class F>
class Buchberger {
 public:
  Buchberger(const FreeModule<F>& ambient, const GbOptions& options)
      : ambient_(ambient), options_(options), ideal_case_(ambient.rank() == 1) {}

  SubmoduleGB<F> run(std::vector<Poly<F>> gens) {
    const F& k = ambient_.field();
    std::vector<std::pair<int, Poly<F>>> pending;
    std::vector<Poly<F>> kept_gens;
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      for (const auto& t : g) {
        if (t.comp < 0 || t.comp >= ambient_.rank()) {
          throw AmbientMismatch("generator has a component outside the ambient module");
        }
      }
      auto canon = ambient_.normalize(g.terms());
      if (!ambient_.is_homogeneous(canon)) {
        throw InhomogeneousInput("Groebner basis input must be homogeneous");
      }
      if (canon.is_zero()) continue;
      const int d = *ambient_.degree_of(canon);
      kept_gens.push_back(canon);
      pending.emplace_back(d, std::move(canon));
    }
    std::stable_sort(pending.begin(), pending.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    std::optional<int> truncated;
    std::size_t next_gen = 0;
    while (true) {
      std::optional<int> d;
      if (next_gen < pending.size()) d = pending[next_gen].first;
      for (const auto& p : pairs_) {
        if (!d || p.degree < *d) d = p.degree;
      }
      if (!d) break;
      if (options_.max_degree && *d > *options_.max_degree) {
        truncated = options_.max_degree;
        break;
      }
      std::vector<Pair> now;
      std::vector<Pair> later;
      for (auto& p : pairs_) (p.degree == *d ? now : later).push_back(p);
      pairs_ = std::move(later);
      std::sort(now.begin(), now.end(), [](const Pair& a, const Pair& b) {
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      for (const auto& p : now) {
        ++stats_.pairs_reduced;
        auto s = s_vector(ambient_, polys_[static_cast<std::size_t>(p.i)],
                          polys_[static_cast<std::size_t>(p.j)]);
        auto h = reduce(ambient_, s, active_list());
        if (h.is_zero()) {
          ++stats_.zero_reductions;
        } else {
          insert(make_monic(k, std::move(h)));
        }
      }
      while (next_gen < pending.size() && pending[next_gen].first == *d) {
        auto h = reduce(ambient_, pending[next_gen].second, active_list());
        ++next_gen;
        if (!h.is_zero()) insert(make_monic(k, std::move(h)));
      }
    }
    if (!truncated && options_.max_degree && next_gen < pending.size()) truncated = options_.max_degree;
    return SubmoduleGB<F>(ambient_, std::move(kept_gens), interreduce(), truncated, stats_);
  }

 private:
  struct Pair {
    int i;
    int j;
    int degree;
    Monomial lcm;
  };

  const Term<F>& lead(int i) const { return polys_[static_cast<std::size_t>(i)].lead(); }

  std::vector<const Poly<F>*> active_list() const {
    std::vector<const Poly<F>*> out;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) out.push_back(&polys_[i]);
    }
    return out;
  }

  // Gebauer-Moeller update for a new element h.
  void insert(Poly<F> h_poly) {
    const int h = static_cast<int>(polys_.size());
    polys_.push_back(std::move(h_poly));
    active_.push_back(false);
    const Term<F>& lh = lead(h);

    struct Candidate {
      int g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> c;
    for (int g = 0; g < h; ++g) {
      if (!active_[static_cast<std::size_t>(g)] || lead(g).comp != lh.comp) continue;
      c.push_back({g, lcm(lh.mono, lead(g).mono), ideal_case_ && lh.mono.coprime(lead(g).mono)});
    }
    stats_.pairs_considered += static_cast<long>(c.size());
    std::vector<Candidate> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b) {
          if (c[b].lcm.divides(c[a].lcm)) keep = false;
        }
        for (std::size_t b = 0; b < d.size() && keep; ++b) {
          if (d[b].lcm.divides(c[a].lcm)) keep = false;
        }
      }
      if (keep) d.push_back(c[a]);
    }

    std::erase_if(pairs_, [&](const Pair& p) {
      if (lead(p.i).comp != lh.comp) return false;
      if (!lh.mono.divides(p.lcm)) return false;
      return !(lcm(lead(p.i).mono, lh.mono) == p.lcm) && !(lcm(lead(p.j).mono, lh.mono) == p.lcm);
    });
    for (const auto& cand : d) {
      if (cand.coprime) continue;
      pairs_.push_back(Pair{cand.g, h, cand.lcm.degree() + ambient_.degree(lh.comp), cand.lcm});
    }

    for (int g = 0; g < h; ++g) {
      if (active_[static_cast<std::size_t>(g)] && lead(g).comp == lh.comp && lh.mono.divides(lead(g).mono)) {
        active_[static_cast<std::size_t>(g)] = false;
      }
    }
    active_[static_cast<std::size_t>(h)] = true;
  }

  std::vector<Poly<F>> interreduce() const {
    const F& k = ambient_.field();
    std::vector<Poly<F>> out;
    const auto all = active_list();
    for (const Poly<F>* p : all) {
      std::vector<const Poly<F>*> others;
      for (const Poly<F>* q : all) {
        if (q != p) others.push_back(q);
      }
      // The leading term is irreducible by the others, so reducing the tail
      // alone is enough.
      std::vector<Term<F>> tail(p->begin() + 1, p->end());
      auto reduced_tail = reduce(ambient_, Poly<F>(std::move(tail)), others);
      std::vector<Term<F>> terms;
      terms.reserve(reduced_tail.size() + 1);
      terms.push_back(p->lead());
      terms.insert(terms.end(), reduced_tail.begin(), reduced_tail.end());
      out.push_back(make_monic(k, Poly<F>(std::move(terms))));
    }
    const auto ord = ambient_.order();
    std::sort(out.begin(), out.end(), [&](const Poly<F>& a, const Poly<F>& b) {
      return ord.compare(a.lead().mono, a.lead().comp, b.lead().mono, b.lead().comp) > 0;
    });
    return out;
  }

  const FreeModule<F>& ambient_;
  GbOptions options_;
  bool ideal_case_;
  std::vector<Poly<F>> polys_;
  std::vector<char> active_;
  std::vector<Pair> pairs_;
  GbStats stats_;
};

}  // namespace

template <class F>
SubmoduleGB<F> groebner(const FreeModule<F>& ambient, std::vector<Poly<F>> gens, const GbOptions& options) {
  return Buchberger<F>(ambient, options).run(std::move(gens));
}

template class SubmoduleGB<PrimeField>;
template class SubmoduleGB<RationalField>;

#define CHERN_INSTANTIATE(F)                                                                       \
  template SubmoduleGB<F> groebner(const FreeModule<F>&, std::vector<Poly<F>>, const GbOptions&); \
  template Poly<F> reduce(const FreeModule<F>&, const Poly<F>&, const std::vector<const Poly<F>*>&); \
  template Poly<F> s_vector(const FreeModule<F>&, const Poly<F>&, const Poly<F>&);
CHERN_INSTANTIATE(PrimeField)
CHERN_INSTANTIATE(RationalField)
#undef CHERN_INSTANTIATE

}  // namespace chern
