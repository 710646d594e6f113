#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "chern/groebner.hpp"

namespace chern {

inline constexpr int kDimensionOfZero = INT_MIN;
inline constexpr int kDepthOfZero = INT_MAX;

/// Laurent polynomial with integer coefficients: sum coeffs[i] t^(low + i).
struct LaurentPoly {
  int low = 0;
  std::vector<long long> coeffs;

  bool is_zero() const;
  long long at_one() const;
  long long operator[](int exponent) const;
  LaurentPoly& trim();

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  static LaurentPoly monomial(int exponent, long long c = 1);
  /// Exact division by (1 - t); throws if it does not divide.
  LaurentPoly divided_by_one_minus_t() const;
  std::string to_string() const;
};

/// numerator / (1 - t)^denominator_power.
class HilbertSeries {
 public:
  HilbertSeries(LaurentPoly numerator, int denominator_power);

  const LaurentPoly& numerator() const { return num_; }
  int denominator_power() const { return power_; }
  /// Same series with all (1 - t) factors cancelled: h(t) / (1 - t)^dim.
  HilbertSeries reduced() const;

  /// Krull dimension; kDimensionOfZero for the zero series.
  int dimension() const;
  /// h(1) of the reduced form; 0 for the zero series.
  long long multiplicity() const;
  /// Total length when finite.
  std::optional<long long> length() const;
  /// dim_k of the degree-i component.
  long long value(int degree) const;

  friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
  friend HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b);

 private:
  LaurentPoly num_;
  int power_;
};

/// K(t) with H(S/I) = K(t) / (1 - t)^n for a monomial ideal I.
LaurentPoly monomial_ideal_numerator(std::vector<Monomial> gens);

/// Hilbert series of ambient / span of the given basis' leading terms.
template <class F>
HilbertSeries hilbert_series(const SubmoduleGB<F>& gb);

template <class F>
HilbertSeries hilbert_series(const GradedModule<F>& m) {
  return hilbert_series(m.gb());
}

template <class F>
int dim_module(const GradedModule<F>& m) {
  return hilbert_series(m).dimension();
}

/// Length of a module; nullopt when infinite.
template <class F>
std::optional<long long> length(const GradedModule<F>& m) {
  return hilbert_series(m).length();
}

/// Length of ambient / submodule; nullopt when infinite.
template <class F>
std::optional<long long> colength(const SubmoduleGB<F>& gb) {
  return hilbert_series(gb).length();
}

}  // namespace chern
