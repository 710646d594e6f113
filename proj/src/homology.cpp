#include "chern/homology.hpp"

#include <stdexcept>

namespace chern {

namespace {

template <class F>
GradedModule<F> zero_module(const RingPtr<F>& ring) {
  return GradedModule<F>::cokernel(FreeModule<F>(ring, {}), {});
}

}  // namespace

template <class F>
GradedModule<F> ext_module(const FreeResolution<F>& res, int k) {
  const auto& ring = res.modules.front().ring_ptr();
  const int p = res.length();
  if (k < 0 || k > p) return zero_module(ring);
  const auto& fk = res.modules[static_cast<std::size_t>(k)];
  std::vector<int> dual_deg;
  for (int d : fk.degrees()) dual_deg.push_back(-d);
  FreeModule<F> dual(ring, std::move(dual_deg));

  std::vector<Poly<F>> cycles;
  if (k < static_cast<int>(res.maps.size())) {
    cycles = kernel(res.maps[static_cast<std::size_t>(k)].dual()).basis();
  } else {
    for (int i = 0; i < dual.rank(); ++i) cycles.push_back(dual.basis(i));
  }
  std::vector<Poly<F>> boundaries;
  if (k >= 1) {
    const auto incoming = res.maps[static_cast<std::size_t>(k - 1)].dual();
    for (const auto& c : incoming.columns()) {
      if (!c.is_zero()) boundaries.push_back(c);
    }
  }
  return subquotient(dual, cycles, boundaries);
}

template <class F>
GradedModule<F> ext_dual(const GradedModule<F>& m, int j) {
  const int d = m.ring().num_vars();
  if (j < 0 || j > d) throw std::out_of_range("dual index must lie in 0..number of variables");
  return ext_module(minimal_free_resolution(m), d - j);
}

template <class F>
CohomologyProfile<F> local_cohomology_lengths(const GradedModule<F>& m) {
  CohomologyProfile<F> prof;
  prof.dim = dim_module(m);
  if (prof.dim == kDimensionOfZero) return prof;
  const int d = m.ring().num_vars();
  const auto res = minimal_free_resolution(m);
  prof.projective_dimension = res.length();
  for (int j = 0; j <= prof.dim; ++j) {
    auto mj = ext_module(res, d - j);
    const auto hs = hilbert_series(mj);
    const int dj = hs.dimension();
    if (dj != kDimensionOfZero && prof.depth == kDepthOfZero) prof.depth = j;
    if (j < prof.dim) {
      if (dj <= 0) {
        prof.h.push_back(hs.length());
      } else {
        prof.h.push_back(std::nullopt);
      }
    }
    prof.dual_dims.push_back(dj);
    prof.duals.push_back(std::move(mj));
  }
  if (prof.depth != d - prof.projective_dimension) {
    throw std::logic_error("depth from Ext duals disagrees with the Auslander-Buchsbaum formula");
  }
  return prof;
}

template <class F>
UnmixedDecomposition<F> unmixed_component(const GradedModule<F>& m) {
  const auto prof = local_cohomology_lengths(m);
  UnmixedDecomposition<F> out{zero_module(m.ring_ptr()), m};
  if (prof.dim == kDimensionOfZero || prof.dim == 0) return out;
  const auto s = FreeModule<F>::ring_module(m.ring_ptr());
  std::vector<Poly<F>> k{s.basis(0)};
  for (int j = 0; j < prof.dim; ++j) {
    if (prof.dual_dims[static_cast<std::size_t>(j)] == kDimensionOfZero) continue;
    auto ann = annihilator(prof.duals[static_cast<std::size_t>(j)]);
    std::vector<Poly<F>> prod;
    for (const auto& a : k) {
      for (const auto& b : ann.basis()) prod.push_back(s.mul(a, b));
    }
    k = groebner(s, std::move(prod)).basis();
  }
  std::vector<Poly<F>> ideal;
  for (const auto& g : k) ideal.push_back(s.entry(g, 0));
  auto sat = saturate(m.gb(), ideal);
  out.u = subquotient(m.ambient(), sat.basis(), m.gb().basis());
  out.n = GradedModule<F>::cokernel(m.ambient(), sat.basis());
  const auto hs = hilbert_series(out.u);
  out.u_dim = hs.dimension();
  out.u_length = hs.length().value_or(-1);
  return out;
}

#define CHERN_INSTANTIATE(F)                                                      \
  template GradedModule<F> ext_module(const FreeResolution<F>&, int);             \
  template GradedModule<F> ext_dual(const GradedModule<F>&, int);                 \
  template CohomologyProfile<F> local_cohomology_lengths(const GradedModule<F>&); \
  template UnmixedDecomposition<F> unmixed_component(const GradedModule<F>&);
CHERN_INSTANTIATE(PrimeField)
CHERN_INSTANTIATE(RationalField)
#undef CHERN_INSTANTIATE

}  // namespace chern
