#include "chern/koszul.hpp"

#include <bit>
#include <stdexcept>

namespace chern {

namespace {

// Subsets of {0..r-1} of each size, each in increasing bitmask order.
std::vector<std::vector<unsigned>> subsets_by_size(int r) {
  std::vector<std::vector<unsigned>> out(static_cast<std::size_t>(r + 1));
  for (unsigned mask = 0; mask < (1u << r); ++mask) out[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  return out;
}

template <class F>
class KoszulComplex {
 public:
  KoszulComplex(const GradedModule<F>& m, const std::vector<Poly<F>>& x)
      : m_(m), x_(x), r_(static_cast<int>(x.size())), subsets_(subsets_by_size(r_)) {
    const auto& amb = m.ambient();
    for (int i = 0; i <= r_; ++i) {
      std::vector<int> degrees;
      for (unsigned mask : subsets_[static_cast<std::size_t>(i)]) {
        int shift = 0;
        for (int j = 0; j < r_; ++j) {
          if (mask & (1u << j)) shift += x_[static_cast<std::size_t>(j)].lead().mono.degree();
        }
        for (int c = 0; c < amb.rank(); ++c) degrees.push_back(amb.degree(c) + shift);
      }
      modules_.emplace_back(amb.ring_ptr(), std::move(degrees));
    }
    for (int i = 1; i <= r_; ++i) maps_.push_back(differential(i));
    for (int i = 1; i < r_; ++i) {
      if (!maps_[static_cast<std::size_t>(i - 1)].compose(maps_[static_cast<std::size_t>(i)]).is_zero()) {
        throw std::logic_error("Koszul differentials do not square to zero");
      }
    }
  }

  /// Image of the relations of M in K_i.
  std::vector<Poly<F>> relations(int i) const {
    const int t = m_.ambient().rank();
    std::vector<Poly<F>> out;
    const auto& subs = subsets_[static_cast<std::size_t>(i)];
    for (std::size_t s = 0; s < subs.size(); ++s) {
      for (const auto& n : m_.gb().basis()) {
        out.push_back(modules_[static_cast<std::size_t>(i)].normalize(
            FreeModule<F>::shift_components(n, static_cast<int>(s) * t).terms()));
      }
    }
    return out;
  }

  long long homology_length(int i) const {
    const auto& ki = modules_[static_cast<std::size_t>(i)];
    auto b_gens = relations(i);
    if (i < r_) {
      for (const auto& c : maps_[static_cast<std::size_t>(i)].columns()) {
        if (!c.is_zero()) b_gens.push_back(c);
      }
    }
    const auto hb = hilbert_series(groebner(ki, std::move(b_gens)));
    HilbertSeries hz({}, ki.ring().num_vars());
    if (i > 0) hz = hilbert_series(preimage(maps_[static_cast<std::size_t>(i - 1)], relations(i - 1)));
    auto len = (hb - hz).length();
    if (!len) throw std::runtime_error("Koszul homology has infinite length");
    return *len;
  }

  int r() const { return r_; }

 private:
  ModuleMap<F> differential(int i) const {
    const auto& src = modules_[static_cast<std::size_t>(i)];
    const auto& tgt = modules_[static_cast<std::size_t>(i - 1)];
    const int t = m_.ambient().rank();
    const auto& lower = subsets_[static_cast<std::size_t>(i - 1)];
    const F& k = src.field();
    std::vector<Poly<F>> cols;
    for (unsigned mask : subsets_[static_cast<std::size_t>(i)]) {
      for (int c = 0; c < t; ++c) {
        std::vector<Term<F>> raw;
        int pos = 0;
        for (int j = 0; j < r_; ++j) {
          if (!(mask & (1u << j))) continue;
          const unsigned rest = mask & ~(1u << j);
          const int idx = static_cast<int>(std::lower_bound(lower.begin(), lower.end(), rest) - lower.begin());
          const bool negative = pos % 2 == 1;
          for (const auto& term : x_[static_cast<std::size_t>(j)]) {
            raw.push_back(Term<F>{term.mono, idx * t + c, negative ? k.neg(term.coeff) : term.coeff});
          }
          ++pos;
        }
        cols.push_back(tgt.normalize(std::move(raw)));
      }
    }
    return ModuleMap<F>(src, tgt, std::move(cols));
  }

  const GradedModule<F>& m_;
  std::vector<Poly<F>> x_;
  int r_;
  std::vector<std::vector<unsigned>> subsets_;
  std::vector<FreeModule<F>> modules_;
  std::vector<ModuleMap<F>> maps_;  // maps_[i-1] : K_i -> K_{i-1}
};

}  // namespace

template <class F>
KoszulHomologyReport koszul_homology(const GradedModule<F>& m, const std::vector<Poly<F>>& x) {
  for (const auto& g : x) {
    if (g.is_zero() || !PolyRing<F>::is_homogeneous(g)) {
      throw InhomogeneousInput("Koszul sequence elements must be nonzero and homogeneous");
    }
  }
  finite_colength(m, x);
  KoszulComplex<F> complex(m, x);
  KoszulHomologyReport rep;
  const int r = complex.r();
  for (int i = 0; i <= r; ++i) rep.lengths.push_back(complex.homology_length(i));
  for (int k = 0; k <= r; ++k) {
    long long c = 0;
    for (int i = k; i <= r; ++i) c += ((i - k) % 2 == 0 ? 1 : -1) * rep.lengths[static_cast<std::size_t>(i)];
    rep.partial.push_back(c);
  }
  rep.chi = rep.partial[0];
  rep.chi1 = r >= 1 ? rep.partial[1] : 0;
  return rep;
}

template <class F>
long long chi1_serre(const GradedModule<F>& m, const ParameterIdeal<F>& q, const SamuelOptions& options) {
  return q.colength - hilbert_coefficients(m, q, options).e_at(0);
}

template <class F>
Chi1RecursionReport chi1_recursion_check(const GradedModule<F>& m, const std::vector<Poly<F>>& x) {
  if (x.size() < 2) throw std::invalid_argument("the chi_1 recursion needs at least two elements");
  Chi1RecursionReport rep;
  rep.chi1 = koszul_homology(m, x).chi1;
  const std::vector<Poly<F>> rest(x.begin() + 1, x.end());
  rep.chi1_quotient = koszul_homology(quotient_by_ideal(m, {x[0]}), rest).chi1;
  auto torsion = colon_module(m, x[0]);
  rep.chi1_torsion = is_zero_module(torsion) ? 0 : koszul_homology(torsion, rest).chi1;
  rep.pass = rep.chi1 == rep.chi1_quotient + rep.chi1_torsion;
  return rep;
}

#define CHERN_INSTANTIATE(F)                                                                            \
  template KoszulHomologyReport koszul_homology(const GradedModule<F>&, const std::vector<Poly<F>>&);   \
  template long long chi1_serre(const GradedModule<F>&, const ParameterIdeal<F>&, const SamuelOptions&); \
  template Chi1RecursionReport chi1_recursion_check(const GradedModule<F>&, const std::vector<Poly<F>>&);
CHERN_INSTANTIATE(PrimeField)
CHERN_INSTANTIATE(RationalField)
#undef CHERN_INSTANTIATE

}  // namespace chern
