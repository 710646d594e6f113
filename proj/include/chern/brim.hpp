#pragma once

#include <optional>
#include <vector>

#include "chern/homology.hpp"

namespace chern {

/// A submodule E of F = R^r given as the image of phi : R^m -> R^r, where
/// R = S / J. The target has zero twists and every column is homogeneous.
template <class F>
struct ParameterModule {
  RingPtr<F> ring;
  std::vector<Poly<F>> ring_relations;  // J
  ModuleMap<F> phi;
  int d = 0;  // dim R
  int r = 0;  // rank of F
  int m = 0;  // number of generators of E
  long long colength = 0;  // lambda(F / E)

  /// m = d + r - 1.
  bool is_parameter() const { return m == d + r - 1; }
};

/// Validates entries in the irrelevant ideal, zero target twists and finite
/// colength; the colength error names a witness direction.
template <class F>
ParameterModule<F> make_parameter_module(RingPtr<F> ring, std::vector<Poly<F>> ring_relations,
                                         const std::vector<std::vector<Poly<F>>>& matrix);

/// lambda(F^n / E^n) for n = 0..n_max, E^n the degree-n component of the
/// Rees algebra inside Sym(F).
template <class F>
std::vector<long long> br_table(const ParameterModule<F>& e, int n_max);

/// lambda(F^n / E F^{n-1}) for n = 0..n_max (components of the cokernel of
/// the symmetric algebra map), kept for comparison with the Rees powers.
template <class F>
std::vector<long long> symmetric_cokernel_table(const ParameterModule<F>& e, int n_max);

struct BRReport {
  std::vector<long long> table;
  int degree = -1;           // degree of the fitted polynomial
  int expected_degree = 0;   // d + r - 1
  long long br = 0;
  long long br1 = 0;
  std::vector<long long> coefficients;
  int stabilized_at = 0;
  bool equality_case = false;        // lambda = br binom(n+d+r-2, d+r-1) for some n >= 1
  bool equality_everywhere = false;  // and then for every computed n
  bool lower_bound = false;          // lambda >= br binom(...) at every n
};

template <class F>
BRReport br_coefficients(const ParameterModule<F>& e, int n_max = -1);

struct ConjectureProbe {
  bool cohen_macaulay = false;
  bool unmixed = false;
  long long br1 = 0;
  bool alert = false;  // unmixed, br1 = 0 and not Cohen-Macaulay
};

template <class F>
ConjectureProbe probe_conjecture_9_5(const ParameterModule<F>& e);

/// Number of differencing steps after which the sequence is constant and
/// nonzero; -1 for the zero sequence or too few points.
int sequence_degree(const std::vector<long long>& values, int from);

}  // namespace chern
