#include "chern/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace chern {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over (seed, index)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return std::mt19937_64(z ^ (z >> 31));
}

template <>
PrimeField::Element random_coefficient(const PrimeField& field, std::mt19937_64& rng) {
  return field.from_integer(static_cast<long long>(rng() % field.characteristic()));
}

template <>
RationalField::Element random_coefficient(const RationalField& field, std::mt19937_64& rng) {
  return field.from_integer(static_cast<long long>(rng() % 201) - 100);
}

namespace {

void monomials_of_degree(int nvars, int deg, std::vector<int>& cur, int pos, std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur[static_cast<std::size_t>(pos)] = deg;
    out.push_back(Monomial::from_exponents(cur));
    return;
  }
  for (int k = deg; k >= 0; --k) {
    cur[static_cast<std::size_t>(pos)] = k;
    monomials_of_degree(nvars, deg - k, cur, pos + 1, out);
  }
}

}  // namespace

template <class F>
Poly<F> random_form(const PolyRing<F>& ring, int deg, std::mt19937_64& rng) {
  if (deg < 0) throw std::invalid_argument("negative degree");
  std::vector<Monomial> monos;
  std::vector<int> cur(static_cast<std::size_t>(ring.num_vars()), 0);
  monomials_of_degree(ring.num_vars(), deg, cur, 0, monos);
  Poly<F> out;
  for (const auto& mono : monos) {
    out = ring.add(out, ring.monomial(mono, random_coefficient(ring.field(), rng)));
  }
  return out;
}

template <class F>
ParameterIdeal<F> random_parameter_ideal(const GradedModule<F>& m, const std::vector<int>& degrees,
                                         std::mt19937_64& rng, int retry_limit) {
  const int d = dim_module(m);
  if (static_cast<int>(degrees.size()) != std::max(d, 0)) {
    throw std::invalid_argument("module has dimension " + std::to_string(d) + " but " +
                                std::to_string(degrees.size()) + " generator degrees were given");
  }
  for (int attempt = 0; attempt < std::max(retry_limit, 1); ++attempt) {
    std::vector<Poly<F>> gens;
    for (int deg : degrees) gens.push_back(random_form(m.ring(), deg, rng));
    if (std::any_of(gens.begin(), gens.end(), [](const Poly<F>& g) { return g.is_zero(); })) continue;
    try {
      return make_parameter_ideal(m, std::move(gens));
    } catch (const NotParameterIdeal&) {
    }
  }
  throw RetryExhausted("no parameter ideal found after " + std::to_string(retry_limit) +
                       " attempts (degenerate module or field too small)");
}

template <class F>
ParameterModule<F> random_parameter_module(RingPtr<F> ring, const std::vector<Poly<F>>& ring_relations, int r,
                                           const std::vector<int>& degrees, std::mt19937_64& rng,
                                           int retry_limit) {
  for (int attempt = 0; attempt < std::max(retry_limit, 1); ++attempt) {
    std::vector<std::vector<Poly<F>>> matrix(static_cast<std::size_t>(r));
    for (int deg : degrees) {
      for (auto& row : matrix) row.push_back(random_form(*ring, deg, rng));
    }
    bool zero_column = false;
    for (std::size_t j = 0; j < degrees.size(); ++j) {
      zero_column = zero_column || std::all_of(matrix.begin(), matrix.end(),
                                               [j](const auto& row) { return row[j].is_zero(); });
    }
    if (zero_column) continue;
    try {
      auto e = make_parameter_module(ring, ring_relations, matrix);
      if (!e.is_parameter()) {
        throw std::invalid_argument("a parameter module over this ring needs " + std::to_string(e.d + r - 1) +
                                    " columns");
      }
      return e;
    } catch (const NotParameterIdeal&) {
    }
  }
  throw RetryExhausted("no parameter module found after " + std::to_string(retry_limit) + " attempts");
}

LambdaEstimate summarize(std::vector<long long> values) {
  LambdaEstimate est;
  est.distinct = std::set<long long>(values.begin(), values.end());
  if (!values.empty()) {
    est.min = *est.distinct.begin();
    est.max = *est.distinct.rbegin();
  }
  est.values = std::move(values);
  return est;
}

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  const int workers = std::max(1, std::min(jobs, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

template <class F>
std::vector<SampleRecord<F>> sample_parameter_ideals(const GradedModule<F>& m, const SampleConfig& cfg, int jobs) {
  if (cfg.degree_bounds.empty()) throw std::invalid_argument("degree_bounds is empty");
  const int d = std::max(dim_module(m), 0);
  std::vector<std::optional<SampleRecord<F>>> slots(static_cast<std::size_t>(cfg.count));
  parallel_for(cfg.count, jobs, [&](int i) {
    auto rng = sample_stream(cfg.seed, static_cast<std::uint64_t>(i));
    std::vector<int> degrees;
    for (int k = 0; k < d; ++k) degrees.push_back(cfg.degree_bounds[rng() % cfg.degree_bounds.size()]);
    auto q = random_parameter_ideal(m, degrees, rng, cfg.retry_limit);
    auto coeffs = hilbert_coefficients(m, q);
    SampleRecord<F> rec{q, coeffs.e, q.colength - coeffs.e_at(0)};
    slots[static_cast<std::size_t>(i)] = std::move(rec);
  });
  std::vector<SampleRecord<F>> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

template <class F>
LambdaEstimate estimate_lambda(const GradedModule<F>& m, const SampleConfig& cfg, int jobs) {
  std::vector<long long> values;
  for (const auto& rec : sample_parameter_ideals(m, cfg, jobs)) values.push_back(rec.e.size() > 1 ? rec.e[1] : 0);
  return summarize(std::move(values));
}

template <class F>
LambdaEstimate estimate_xi(const GradedModule<F>& m, const SampleConfig& cfg, int jobs) {
  std::vector<long long> values;
  for (const auto& rec : sample_parameter_ideals(m, cfg, jobs)) values.push_back(rec.chi1);
  return summarize(std::move(values));
}

#define CHERN_INSTANTIATE(F)                                                                                 \
  template Poly<F> random_form(const PolyRing<F>&, int, std::mt19937_64&);                                   \
  template ParameterIdeal<F> random_parameter_ideal(const GradedModule<F>&, const std::vector<int>&,         \
                                                    std::mt19937_64&, int);                                  \
  template ParameterModule<F> random_parameter_module(RingPtr<F>, const std::vector<Poly<F>>&, int,          \
                                                      const std::vector<int>&, std::mt19937_64&, int);       \
  template std::vector<SampleRecord<F>> sample_parameter_ideals(const GradedModule<F>&, const SampleConfig&, \
                                                                int);                                        \
  template LambdaEstimate estimate_lambda(const GradedModule<F>&, const SampleConfig&, int);                 \
  template LambdaEstimate estimate_xi(const GradedModule<F>&, const SampleConfig&, int);
CHERN_INSTANTIATE(PrimeField)
CHERN_INSTANTIATE(RationalField)
#undef CHERN_INSTANTIATE

}  // namespace chern
