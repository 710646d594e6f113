#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string_view>
#include <vector>

#include "chern/brim.hpp"
#include "chern/koszul.hpp"

namespace chern {

struct SampleConfig {
  std::uint64_t seed = 0;
  int count = 25;
  /// Generator degrees are drawn uniformly from this list.
  std::vector<int> degree_bounds{1};
  int retry_limit = 50;
};

class RetryExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 64-bit FNV-1a, used to derive per-instance seeds from names.
std::uint64_t fnv1a(std::string_view text);

/// Independent stream for sample i of a run seeded by seed.
std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index);

template <class F>
typename F::Element random_coefficient(const F& field, std::mt19937_64& rng);

/// Form of degree deg with independent uniform coefficients on every monomial.
template <class F>
Poly<F> random_form(const PolyRing<F>& ring, int deg, std::mt19937_64& rng);

template <class F>
ParameterIdeal<F> random_parameter_ideal(const GradedModule<F>& m, const std::vector<int>& degrees,
                                         std::mt19937_64& rng, int retry_limit = 50);

/// Random r x (d + r - 1) matrix over R = S / J, column j of degree degrees[j].
template <class F>
ParameterModule<F> random_parameter_module(RingPtr<F> ring, const std::vector<Poly<F>>& ring_relations, int r,
                                           const std::vector<int>& degrees, std::mt19937_64& rng,
                                           int retry_limit = 50);

template <class F>
struct SampleRecord {
  ParameterIdeal<F> q;
  std::vector<long long> e;
  long long chi1 = 0;  // lambda(M/QM) - e_0
};

struct LambdaEstimate {
  std::vector<long long> values;
  std::set<long long> distinct;
  long long min = 0;
  long long max = 0;
};

LambdaEstimate summarize(std::vector<long long> values);

/// Draws cfg.count parameter ideals and evaluates their Hilbert coefficients,
/// using up to jobs threads; the result does not depend on jobs.
template <class F>
std::vector<SampleRecord<F>> sample_parameter_ideals(const GradedModule<F>& m, const SampleConfig& cfg,
                                                     int jobs = 1);

template <class F>
LambdaEstimate estimate_lambda(const GradedModule<F>& m, const SampleConfig& cfg, int jobs = 1);

template <class F>
LambdaEstimate estimate_xi(const GradedModule<F>& m, const SampleConfig& cfg, int jobs = 1);

/// Runs fn(i) for i in [0, n) on at most jobs threads.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace chern
