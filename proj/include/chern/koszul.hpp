#pragma once

#include <vector>

#include "chern/hilbert.hpp"

namespace chern {

struct KoszulHomologyReport {
  std::vector<long long> lengths;  // lambda(H_i(x; M)), i = 0..r
  long long chi = 0;
  long long chi1 = 0;
  /// chi_k = sum_{i >= k} (-1)^{i-k} lambda(H_i), k = 0..r.
  std::vector<long long> partial;
};

/// Homology lengths of the Koszul complex K(x; M). The sequence must have
/// finite colength on M.
template <class F>
KoszulHomologyReport koszul_homology(const GradedModule<F>& m, const std::vector<Poly<F>>& x);

template <class F>
KoszulHomologyReport koszul_homology(const GradedModule<F>& m, const ParameterIdeal<F>& q) {
  return koszul_homology(m, q.gens);
}

/// lambda(M/QM) - e_0(Q, M).
template <class F>
long long chi1_serre(const GradedModule<F>& m, const ParameterIdeal<F>& q, const SamuelOptions& options = {});

struct Chi1RecursionReport {
  bool pass = false;
  long long chi1 = 0;
  long long chi1_quotient = 0;  // chi_1(x'; M / x_1 M)
  long long chi1_torsion = 0;   // chi_1(x'; 0 :_M x_1)
};

/// chi_1(x; M) = chi_1(x'; M/x_1 M) + chi_1(x'; 0 :_M x_1).
template <class F>
Chi1RecursionReport chi1_recursion_check(const GradedModule<F>& m, const std::vector<Poly<F>>& x);

}  // namespace chern
