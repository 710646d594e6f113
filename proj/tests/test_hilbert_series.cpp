#include <gtest/gtest.h>

#include "chern/hilbert_series.hpp"
#include "chern/module_ops.hpp"
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

TEST(LaurentPoly, DivisionByOneMinusT) {
  LaurentPoly p{0, {1, 0, -1}};  // 1 - t^2
  auto q = p.divided_by_one_minus_t();
  EXPECT_EQ(q, (LaurentPoly{0, {1, 1}}));
  EXPECT_THROW((LaurentPoly{0, {1, 1}}).divided_by_one_minus_t(), std::domain_error);
}

TEST(HilbertSeries, Dimension) {
  auto r2 = zp_ring({"x", "y"});
  auto r4 = zp_ring({"x", "y", "z", "w"});
  EXPECT_EQ(dim_module(GradedModule<K>::free(FreeModule<K>::ring_module(r2))), 2);
  EXPECT_EQ(dim_module(quotient(r2, {"x^2", "x*y"})), 1);
  EXPECT_EQ(dim_module(quotient(r4, {"x*z", "x*w", "y*z", "y*w"})), 2);
  EXPECT_EQ(dim_module(quotient(r2, {"1"})), kDimensionOfZero);
}

TEST(HilbertSeries, Length) {
  auto r = zp_ring({"x", "y"});
  EXPECT_EQ(length(quotient(r, {"x^2", "x*y", "y^2"})), 3);
  EXPECT_EQ(length(quotient(r, {"x^2", "y^3"})), 6);
  EXPECT_FALSE(length(GradedModule<K>::free(FreeModule<K>::ring_module(r))).has_value());
  EXPECT_EQ(length(quotient(r, {"1"})), 0);
}

TEST(HilbertSeries, ValuesAndMultiplicity) {
  auto r = zp_ring({"x", "y", "z"});
  auto m = quotient(r, {"x^2 - y*z"});
  auto hs = hilbert_series(m);
  EXPECT_EQ(hs.dimension(), 2);
  EXPECT_EQ(hs.multiplicity(), 2);
  for (int d = 0; d < 6; ++d) EXPECT_EQ(hs.value(d), 2 * d + 1);
}

TEST(HilbertSeries, TwistedFreeModule) {
  auto r = zp_ring({"x", "y"});
  FreeModule<K> f(r, {-1, 2});
  auto hs = hilbert_series(GradedModule<K>::free(f));
  EXPECT_EQ(hs.value(-1), 1);
  EXPECT_EQ(hs.value(0), 2);
  EXPECT_EQ(hs.value(2), 4 + 1);
  EXPECT_EQ(hs.multiplicity(), 2);
}

// Pivot recursion agrees with brute-force counting of standard monomials.
TEST(HilbertSeriesProperty, MonomialCountsMatch) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Monomial> gens;
    const int n = 3;
    for (int g = 0; g < 4; ++g) {
      int e[3] = {static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)};
      if (e[0] + e[1] + e[2] == 0) e[0] = 1;
      gens.push_back(Monomial::from_exponents(e));
    }
    HilbertSeries hs(monomial_ideal_numerator(gens), n);
    for (int d = 0; d <= 7; ++d) {
      long long count = 0;
      for (int a = 0; a <= d; ++a) {
        for (int b = 0; a + b <= d; ++b) {
          int e[3] = {a, b, d - a - b};
          auto m = Monomial::from_exponents(e);
          bool in = false;
          for (const auto& g : gens) in = in || g.divides(m);
          if (!in) ++count;
        }
      }
      EXPECT_EQ(hs.value(d), count);
    }
  }
}
