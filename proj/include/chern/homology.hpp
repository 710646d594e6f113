#pragma once

#include <optional>
#include <vector>

#include "chern/hilbert.hpp"
#include "chern/resolution.hpp"

namespace chern {

/// Ext^k(M, S) from a free resolution of M, pruned.
template <class F>
GradedModule<F> ext_module(const FreeResolution<F>& res, int k);

/// M_j = Ext^{d-j}(M, S), the graded dual of H^j_m(M) up to twist.
template <class F>
GradedModule<F> ext_dual(const GradedModule<F>& m, int j);

template <class F>
struct CohomologyProfile {
  int dim = kDimensionOfZero;
  int depth = kDepthOfZero;
  int projective_dimension = -1;
  std::vector<GradedModule<F>> duals;   // M_j, j = 0..dim
  std::vector<int> dual_dims;           // dim M_j
  std::vector<std::optional<long long>> h;  // lambda(H^j_m(M)), j = 0..dim-1; nullopt if infinite

  bool generalized_cm() const {
    for (const auto& v : h) {
      if (!v) return false;
    }
    return true;
  }
  bool cohen_macaulay() const { return dim == kDimensionOfZero || depth == dim; }
  long long h_at(int j) const { return h[static_cast<std::size_t>(j)].value_or(-1); }
};

template <class F>
CohomologyProfile<F> local_cohomology_lengths(const GradedModule<F>& m);

template <class F>
struct UnmixedDecomposition {
  GradedModule<F> u;  // largest submodule of dimension < dim M
  GradedModule<F> n;  // M / U
  long long u_length = -1;  // -1 when U has positive dimension
  int u_dim = kDimensionOfZero;
};

/// U_M(0) as 0 :_M K^infinity with K the product of the annihilators of
/// the lower duals M_j, j < dim M.
template <class F>
UnmixedDecomposition<F> unmixed_component(const GradedModule<F>& m);

template <class F>
bool is_unmixed(const GradedModule<F>& m) {
  return is_zero_module(unmixed_component(m).u);
}

template <class F>
bool is_generalized_cm(const GradedModule<F>& m) {
  return local_cohomology_lengths(m).generalized_cm();
}

template <class F>
int depth(const GradedModule<F>& m) {
  return local_cohomology_lengths(m).depth;
}

template <class F>
int projective_dimension(const GradedModule<F>& m) {
  return minimal_free_resolution(m).length();
}

}  // namespace chern
