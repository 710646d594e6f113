#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chern/hilbert_series.hpp"
#include "chern/module_ops.hpp"

namespace chern {

/// Raised when an ideal does not have finite colength on a module; names a
/// (component, variable) direction in which the quotient is infinite.
class NotParameterIdeal : public std::invalid_argument {
 public:
  NotParameterIdeal(const std::string& what, int component, int variable)
      : std::invalid_argument(what), component_(component), variable_(variable) {}
  int component() const { return component_; }
  int variable() const { return variable_; }

 private:
  int component_;
  int variable_;
};

class StabilizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class F>
struct ParameterIdeal {
  std::vector<Poly<F>> gens;
  std::vector<int> degrees;
  /// lambda(M / QM).
  long long colength = 0;
};

/// Validates that gens (homogeneous, of positive degree, dim M of them)
/// form a parameter ideal for m.
template <class F>
ParameterIdeal<F> make_parameter_ideal(const GradedModule<F>& m, std::vector<Poly<F>> gens);

/// lambda(M / I M) with a witness-carrying error when infinite.
template <class F>
long long finite_colength(const GradedModule<F>& m, const std::vector<Poly<F>>& ideal);

struct SamuelOptions {
  int n_max = 40;
};

struct HilbertSamuelTable {
  std::vector<long long> values;  // lambda(M / I^{n+1} M), n = 0..N
  bool stabilized = false;
  int stabilized_at = -1;
};

struct HilbertCoefficients {
  std::vector<long long> e;  // e_0 .. e_s
  int r = 0;
  int stabilized_at = 0;
  HilbertSamuelTable table;

  long long e_at(int i) const { return i < static_cast<int>(e.size()) ? e[static_cast<std::size_t>(i)] : 0; }
  /// Value of sum (-1)^i e_i binom(n + r - i, r - i).
  long long polynomial_at(int n) const;
};

/// The Hilbert-Samuel function of an ideal of finite colength on m,
/// computed incrementally; values are cached.
template <class F>
class SamuelFunction {
 public:
  SamuelFunction(GradedModule<F> m, std::vector<Poly<F>> ideal);
  long long operator()(int n);
  const GradedModule<F>& module() const { return m_; }

 private:
  GradedModule<F> m_;
  std::vector<Poly<F>> ideal_;
  std::vector<SubmoduleGB<F>> powers_;  // powers_[k] = I^{k+1}
  std::vector<long long> values_;
};

/// lambda(M / Q^{n+1} M) for n = 0..n.
template <class F>
HilbertSamuelTable hilbert_samuel(const GradedModule<F>& m, const ParameterIdeal<F>& q, int n);

/// Coefficients of the Hilbert-Samuel polynomial of an ideal of finite
/// colength, in the basis binom(n + s - i, s - i) with s = dim M.
template <class F>
HilbertCoefficients samuel_coefficients(const GradedModule<F>& m, const std::vector<Poly<F>>& ideal,
                                        const SamuelOptions& options = {});

template <class F>
HilbertCoefficients hilbert_coefficients(const GradedModule<F>& m, const ParameterIdeal<F>& q,
                                         const SamuelOptions& options = {}) {
  return samuel_coefficients(m, q.gens, options);
}

/// Fits sum (-1)^i e_i binom(n + s - i, s - i) through s + 1 consecutive
/// values starting at n0; nullopt when the solution is not integral.
std::optional<std::vector<long long>> fit_binomial_basis(const std::vector<long long>& values, int n0, int s);

/// Coefficients c_i of sum (-1)^i c_i binom(n + shift + s - i, s - i)
/// through s + 1 values.
std::optional<std::vector<long long>> fit_shifted_basis(const std::vector<long long>& values, int n0, int s,
                                                        int shift);

/// H^0_m(M) as a module.
template <class F>
GradedModule<F> zeroth_local_cohomology(const GradedModule<F>& m);

struct SuperficialReport {
  bool pass = false;
  bool colon_finite = false;
  bool dimension_drops = false;
  bool lower_identities = false;
  bool top_identity = false;
  bool lemma_bound = false;  // lambda(0 :_M h) <= lambda(H^0_m(M/hM))
  long long colon_length = 0;
  long long h0_quotient = 0;
  std::vector<long long> e_module;
  std::vector<long long> e_quotient;
};

/// Compares e_i(Q, M) with e_i(Q, M/hM) as in the superficial element
/// rules, computing both sides independently.
template <class F>
SuperficialReport superficial_check(const GradedModule<F>& m, const ParameterIdeal<F>& q, const Poly<F>& h,
                                    const SamuelOptions& options = {});

long long binomial(long long n, long long k);

}  // namespace chern
