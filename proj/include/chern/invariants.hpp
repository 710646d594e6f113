#pragma once

#include <map>
#include <string>
#include <vector>

#include "chern/homology.hpp"
#include "chern/koszul.hpp"

namespace chern {

struct HdegReport {
  int r = 0;
  long long hdeg = 0;
  long long deg = 0;                 // e_0(Q, M)
  std::vector<long long> torsions;   // T^(i), i = 1..r-1
  std::vector<long long> dual_hdeg;  // hdeg(M_j), j = 0..r-1

  long long torsion(int i) const;
  /// hdeg >= deg, hdeg > T^(1) >= T^(2) >= ...
  bool chain_holds() const;
};

/// Homological degree relative to an ideal Q of finite colength: Samuel
/// multiplicities e_0(Q, -) in the recursion over the duals. Values of
/// submodules met along the way are cached by presentation.
template <class F>
class HdegCalculator {
 public:
  explicit HdegCalculator(std::vector<Poly<F>> q, SamuelOptions options = {})
      : q_(std::move(q)), options_(options) {}

  long long operator()(const GradedModule<F>& m);
  HdegReport report(const GradedModule<F>& m);

 private:
  std::vector<Poly<F>> q_;
  SamuelOptions options_;
  std::map<std::string, long long> memo_;
};

template <class F>
HdegReport hdeg(const GradedModule<F>& m, const ParameterIdeal<F>& q, const SamuelOptions& options = {}) {
  return HdegCalculator<F>(q.gens, options).report(m);
}

/// T^(i)_Q(M) for 1 <= i <= r - 1.
template <class F>
long long torsion(const GradedModule<F>& m, const ParameterIdeal<F>& q, int i);

struct BoundCheck {
  bool pass = false;
  long long lhs = 0;
  long long rhs = 0;
  long long slack = 0;  // rhs - lhs
};

inline BoundCheck make_bound(long long lhs, long long rhs) { return BoundCheck{lhs <= rhs, lhs, rhs, rhs - lhs}; }

/// -e_1(Q, M) <= T^(1)_Q(M); needs dim M >= 2.
template <class F>
BoundCheck check_e1_torsion_bound(const GradedModule<F>& m, const ParameterIdeal<F>& q);

/// chi_1(Q; M) <= hdeg_Q(M) - deg_Q(M); needs dim M >= 1.
template <class F>
BoundCheck check_chi1_hdeg_bound(const GradedModule<F>& m, const ParameterIdeal<F>& q);

/// ((x_1..x_i)M : x_{i+1} x_k) = ((x_1..x_i)M : x_k) for all 0 <= i < k <= r.
template <class F>
bool is_d_sequence(const GradedModule<F>& m, const std::vector<Poly<F>>& x);

/// h(x; M) = sum (-1)^i e_i(x, M).
template <class F>
long long hilbert_characteristic(const GradedModule<F>& m, const ParameterIdeal<F>& q,
                                 const SamuelOptions& options = {});

struct BettiBoundReport {
  bool pass = false;
  long long colength = 0;
  std::vector<int> betti_module;
  std::vector<int> betti_residue_field;
};

/// beta_i(M) <= lambda(M/(x)M) beta_i(k) over the polynomial ring.
template <class F>
BettiBoundReport betti_bound_check(const GradedModule<F>& m, const ParameterIdeal<F>& q);

struct BuchsbaumData {
  bool generalized_cm = false;
  long long i_m = 0;      // sum binom(r-1, i) h^i
  long long bound_s = 0;  // sum binom(r-2, i-1) h^i for r >= 2; h^0 for r = 1
};

template <class F>
BuchsbaumData buchsbaum_data(const CohomologyProfile<F>& prof);

struct HdegAxiomReport {
  bool pass = false;
  bool torsion_part = false;   // (a) hdeg(M) = hdeg(M/H^0) + lambda(H^0)
  bool hyperplane_applies = false;
  bool hyperplane = false;     // (b) hdeg(M/hM) <= hdeg(M), T^(i)(M/hM) <= T^(i)(M)
  bool calibration_applies = false;
  bool calibration = false;    // (c) hdeg = e_0 on Cohen-Macaulay modules
  long long hdeg = 0;
  long long hdeg_quotient_h0 = 0;
  long long h0 = 0;
  long long hdeg_section = 0;
};

/// The degree axioms on one module; h is a hyperplane section drawn from Q.
template <class F>
HdegAxiomReport hdeg_axioms(const GradedModule<F>& m, const ParameterIdeal<F>& q, const Poly<F>& h);

struct ErConventionReport {
  int r = 0;
  long long e_r = 0;
  long long lambda_m0 = 0;
  bool matches_unsigned = false;  // e_r = lambda(H^0)
  bool matches_signed = false;    // e_r = (-1)^r lambda(H^0)
};

template <class F>
ErConventionReport er_convention(const GradedModule<F>& m, const ParameterIdeal<F>& q);

struct QuasiDegreeReport {
  bool pass = false;
  long long h = 0;
  bool section_applies = false;  // depth >= 1
  bool section = false;          // h(x; M) = h(x'; M/x_1 M)
  long long h_section = 0;
  bool torsion_part = false;     // h(x; M) = h(x; M/H^0) + lambda(H^0)
  long long h_quotient = 0;
  long long lambda_h0 = 0;
};

template <class F>
QuasiDegreeReport quasi_degree_check(const GradedModule<F>& m, const ParameterIdeal<F>& q);

extern template class HdegCalculator<PrimeField>;
extern template class HdegCalculator<RationalField>;

}  // namespace chern
