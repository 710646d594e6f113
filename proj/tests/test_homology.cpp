#include <gtest/gtest.h>

#include "chern/homology.hpp"
#include "helpers.hpp"

using namespace chern;
using chern::testing::parse_all;
using chern::testing::zp_ring;
using K = PrimeField;

namespace {

GradedModule<K> quotient(const RingPtr<K>& r, const std::vector<std::string>& gens) {
  return GradedModule<K>::quotient_ring(r, parse_all(*r, gens));
}

GradedModule<K> ring_module(const RingPtr<K>& r) { return GradedModule<K>::free(FreeModule<K>::ring_module(r)); }

}  // namespace

TEST(ExtDual, FreeModule) {
  auto r = zp_ring({"x", "y"});
  auto s = ring_module(r);
  EXPECT_TRUE(is_zero_module(ext_dual(s, 0)));
  EXPECT_TRUE(is_zero_module(ext_dual(s, 1)));
  EXPECT_EQ(dim_module(ext_dual(s, 2)), 2);
}

TEST(ExtDual, MixedModule) {
  auto r = zp_ring({"x", "y"});
  auto m = quotient(r, {"x^2", "x*y"});
  EXPECT_EQ(length(ext_dual(m, 0)), 1);
}

TEST(ExtDual, TwoPlanes) {
  auto r = zp_ring({"x", "y", "z", "w"});
  auto m = quotient(r, {"x*z", "x*w", "y*z", "y*w"});
  EXPECT_TRUE(is_zero_module(ext_dual(m, 0)));
  EXPECT_EQ(length(ext_dual(m, 1)), 1);
}

TEST(LocalCohomology, Profiles) {
  auto r = zp_ring({"x", "y"});
  auto free = local_cohomology_lengths(ring_module(r));
  EXPECT_EQ(free.depth, 2);
  EXPECT_EQ(free.h_at(0), 0);
  EXPECT_EQ(free.h_at(1), 0);
  EXPECT_TRUE(free.cohen_macaulay());

  auto mixed = local_cohomology_lengths(quotient(r, {"x^2", "x*y"}));
  EXPECT_EQ(mixed.depth, 0);
  EXPECT_EQ(mixed.h_at(0), 1);
  EXPECT_TRUE(mixed.generalized_cm());

  auto r4 = zp_ring({"x", "y", "z", "w"});
  auto two = local_cohomology_lengths(quotient(r4, {"x*z", "x*w", "y*z", "y*w"}));
  EXPECT_EQ(two.depth, 1);
  EXPECT_EQ(two.h_at(0), 0);
  EXPECT_EQ(two.h_at(1), 1);
  EXPECT_TRUE(two.generalized_cm());
  EXPECT_FALSE(two.cohen_macaulay());
}

TEST(LocalCohomology, ZeroModuleSentinels) {
  auto r = zp_ring({"x", "y"});
  auto z = local_cohomology_lengths(quotient(r, {"1"}));
  EXPECT_EQ(z.dim, kDimensionOfZero);
  EXPECT_EQ(z.depth, kDepthOfZero);
  EXPECT_TRUE(z.h.empty());
}

TEST(Unmixed, Examples) {
  auto r = zp_ring({"x", "y"});
  EXPECT_TRUE(is_unmixed(ring_module(r)));
  auto r4 = zp_ring({"x", "y", "z", "w"});
  EXPECT_TRUE(is_unmixed(quotient(r4, {"x*z", "x*w", "y*z", "y*w"})));

  auto mixed = unmixed_component(quotient(r, {"x^2", "x*y"}));
  EXPECT_EQ(mixed.u_length, 1);
  EXPECT_EQ(dim_module(mixed.n), 1);
  EXPECT_TRUE(is_zero_module(unmixed_component(mixed.n).u));

  auto sum = direct_sum(quotient(r, {"x"}), quotient(r, {"x", "y"}));
  auto d = unmixed_component(sum);
  EXPECT_EQ(d.u_length, 1);
  EXPECT_EQ(hilbert_series(d.n).numerator(), hilbert_series(quotient(r, {"x"})).numerator());
}

TEST(Unmixed, LineOnPlane) {
  auto r = zp_ring({"x", "y"});
  auto sum = direct_sum(quotient(r, {"x"}), ring_module(r));
  EXPECT_FALSE(is_unmixed(sum));
  auto prof = local_cohomology_lengths(sum);
  EXPECT_FALSE(prof.generalized_cm());
  auto d = unmixed_component(sum);
  EXPECT_EQ(d.u_dim, 1);
}

// dim M_j <= j and depth <= dim on a batch of modules.
TEST(HomologyProperty, DualDimensions) {
  auto r = zp_ring({"x", "y", "z"});
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"x^2", "x*y"}, {"x*y*z"}, {"x*y", "x*z"}, {"x^2", "y^2", "x*z"}, {"x*y", "y*z", "x*z"}}) {
    auto prof = local_cohomology_lengths(quotient(r, gens));
    for (std::size_t j = 0; j < prof.dual_dims.size(); ++j) EXPECT_LE(prof.dual_dims[j], static_cast<int>(j));
    EXPECT_LE(prof.depth, prof.dim);
  }
}
