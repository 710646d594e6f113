#include <gtest/gtest.h>

#include "chern/sampler.hpp"
#include "helpers.hpp"

using namespace chern;
using chern::testing::parse_all;
using chern::testing::zp_ring;
using K = PrimeField;

namespace {

GradedModule<K> quotient(const RingPtr<K>& r, const std::vector<std::string>& gens) {
  return GradedModule<K>::quotient_ring(r, parse_all(*r, gens));
}

}  // namespace

TEST(Sampler, Fnv1aKnownValues) {
  EXPECT_EQ(fnv1a(""), 14695981039346656037ULL);
  EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Sampler, RandomLinearSopOnFreeModule) {
  auto r = zp_ring({"x", "y"});
  auto m = GradedModule<K>::free(FreeModule<K>::ring_module(r));
  auto rng = sample_stream(7, 0);
  auto q = random_parameter_ideal(m, {1, 1}, rng);
  EXPECT_EQ(q.colength, 1);
  EXPECT_EQ(q.degrees, (std::vector<int>{1, 1}));
}

TEST(Sampler, WrongNumberOfDegreesIsRejected) {
  auto r = zp_ring({"x", "y", "z"});
  auto m = GradedModule<K>::free(FreeModule<K>::ring_module(r));
  auto rng = sample_stream(7, 0);
  EXPECT_THROW(random_parameter_ideal(m, {1, 1}, rng), std::invalid_argument);
}

TEST(Sampler, TinyFieldExhaustsRetries) {
  // Over F_3 a random linear form in one variable is zero a third of the time.
  auto r = zp_ring({"x"}, 3);
  auto m = GradedModule<K>::free(FreeModule<K>::ring_module(r));
  int failures = 0;
  for (std::uint64_t s = 0; s < 32; ++s) {
    auto rng = sample_stream(s, 0);
    try {
      random_parameter_ideal(m, {1}, rng, 1);
    } catch (const RetryExhausted&) {
      ++failures;
    }
  }
  EXPECT_GT(failures, 0);
}

TEST(Sampler, FreeModuleEstimatesAreZero) {
  auto r = zp_ring({"x", "y"});
  auto m = GradedModule<K>::free(FreeModule<K>::ring_module(r));
  SampleConfig cfg{.seed = 1, .count = 8, .degree_bounds = {1, 2}};
  EXPECT_EQ(estimate_lambda(m, cfg).distinct, (std::set<long long>{0}));
  EXPECT_EQ(estimate_xi(m, cfg).distinct, (std::set<long long>{0}));
}

TEST(Sampler, TwoPlaneLambdaIsMinusOne) {
  auto r = zp_ring({"x", "y", "z", "w"});
  auto m = quotient(r, {"x*z", "x*w", "y*z", "y*w"});
  SampleConfig cfg{.seed = 3, .count = 6};
  auto est = estimate_lambda(m, cfg, 3);
  EXPECT_EQ(est.distinct, (std::set<long long>{-1}));
  EXPECT_EQ(est.values.size(), 6u);
}

TEST(Sampler, MixedLambdaIsMinusOne) {
  auto r = zp_ring({"x", "y"});
  auto m = quotient(r, {"x^2", "x*y"});
  SampleConfig cfg{.seed = 11, .count = 10, .degree_bounds = {1, 2, 3}};
  auto est = estimate_lambda(m, cfg);
  EXPECT_EQ(est.distinct, (std::set<long long>{-1}));
  EXPECT_LE(est.max, 0);
}

TEST(Sampler, ReplayIsIndependentOfWorkerCount) {
  auto r = zp_ring({"x", "y", "z"});
  auto m = quotient(r, {"x*y", "x*z"});
  SampleConfig cfg{.seed = 99, .count = 8, .degree_bounds = {1, 2}};
  auto a = sample_parameter_ideals(m, cfg, 1);
  auto b = sample_parameter_ideals(m, cfg, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].q.gens, b[i].q.gens);
    EXPECT_EQ(a[i].e, b[i].e);
  }
}

TEST(Sampler, RandomParameterModulesHaveNonpositiveBr1) {
  auto r = zp_ring({"x", "y"});
  for (std::uint64_t s = 0; s < 3; ++s) {
    auto rng = sample_stream(s, 0);
    auto e = random_parameter_module(r, {}, 2, {1, 1, 1}, rng);
    auto rep = br_coefficients(e);
    EXPECT_LE(rep.br1, 0);
    EXPECT_EQ(rep.degree, 3);
    EXPECT_TRUE(rep.lower_bound);
  }
}
