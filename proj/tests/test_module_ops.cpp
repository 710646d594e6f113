#include <gtest/gtest.h>

#include "chern/hilbert_series.hpp"
#include "chern/resolution.hpp"
#include "helpers.hpp"

using namespace chern;
using chern::testing::parse_all;
using chern::testing::zp_ring;
using K = PrimeField;

namespace {

GradedModule<K> quotient(const RingPtr<K>& r, const std::vector<std::string>& gens) {
  return GradedModule<K>::quotient_ring(r, parse_all(*r, gens));
}

// Image of maps[i] equals the kernel of maps[i-1], and consecutive maps compose to zero.
void expect_exact(const FreeResolution<K>& res) {
  for (std::size_t i = 0; i + 1 < res.maps.size(); ++i) {
    EXPECT_TRUE(res.maps[i].compose(res.maps[i + 1]).is_zero());
    auto ker = kernel(res.maps[i]);
    auto im = image(res.maps[i + 1]);
    EXPECT_TRUE(same_submodule(ker, im)) << "at step " << i;
  }
  if (!res.maps.empty()) EXPECT_TRUE(kernel(res.maps.back()).is_zero());
  for (const auto& m : res.maps) {
    for (const auto& c : m.columns()) {
      for (const auto& t : c) EXPECT_FALSE(t.mono.is_one()) << "unit entry in a minimal resolution";
    }
  }
}

}  // namespace

TEST(Syzygies, KoszulRelation) {
  auto r = zp_ring({"x", "y"});
  auto S = FreeModule<K>::ring_module(r);
  auto syz = syzygies(S, parse_all(*r, {"x", "y"}));
  ASSERT_EQ(syz.source().rank(), 1);
  const auto& z = syz.column(0);
  EXPECT_EQ(syz.target().entry(z, 0), r->parse("y"));
  EXPECT_EQ(syz.target().entry(z, 1), r->parse("-x"));
  EXPECT_EQ(syz.source().degree(0), 2);
}

TEST(Syzygies, RegularElementAndDuplicates) {
  auto r = zp_ring({"x", "y"});
  auto S = FreeModule<K>::ring_module(r);
  EXPECT_EQ(syzygies(S, parse_all(*r, {"x^2"})).source().rank(), 0);
  auto dup = syzygies(S, parse_all(*r, {"x", "x"}));
  ASSERT_EQ(dup.source().rank(), 1);
  const auto& z = dup.column(0);
  EXPECT_EQ(dup.target().add(dup.target().entry(z, 0), dup.target().entry(z, 1)), r->zero());
  EXPECT_FALSE(z.is_zero());
}

TEST(Kernel, IdentityZeroAndMultiplication) {
  auto r = zp_ring({"x", "y"});
  FreeModule<K> F2(r, {0, 0});
  ModuleMap<K> id(F2, F2, {F2.basis(0), F2.basis(1)});
  EXPECT_TRUE(kernel(id).is_zero());
  auto z = ModuleMap<K>::zero(F2, F2);
  EXPECT_TRUE(kernel(z).contains(F2.basis(0)));
  EXPECT_TRUE(kernel(z).contains(F2.basis(1)));

  // Multiplication by x on k[x,y]/(x^2, xy): the class of x is killed.
  auto m = quotient(r, {"x^2", "x*y"});
  auto c = colon(m.gb(), r->parse("x"));
  EXPECT_TRUE(c.contains(r->parse("x")));
  EXPECT_TRUE(c.contains(r->parse("y")));
  EXPECT_FALSE(c.contains(r->parse("1")));
}

TEST(Colon, TorsionOfMixedModule) {
  auto r = zp_ring({"x", "y"});
  auto m = quotient(r, {"x^2", "x*y"});
  auto t = colon_module(m, r->parse("y"));
  EXPECT_EQ(length(t), 1);
  auto free = GradedModule<K>::free(FreeModule<K>::ring_module(r));
  EXPECT_TRUE(is_zero_module(colon_module(free, r->parse("x*y + y^2"))));
  EXPECT_THROW(colon(m.gb(), r->zero()), std::invalid_argument);
}

TEST(Colon, FiniteLengthStabilizesToEverything) {
  auto r = zp_ring({"x", "y"});
  auto m = quotient(r, {"x^2", "y^3"});
  auto sat = saturate(m.gb(), parse_all(*r, {"x", "y"}));
  EXPECT_TRUE(sat.contains(r->parse("1")));
}

TEST(Intersect, Ideals) {
  auto r = zp_ring({"x", "y"});
  auto S = FreeModule<K>::ring_module(r);
  auto a = groebner(S, parse_all(*r, {"x"}));
  auto b = groebner(S, parse_all(*r, {"y"}));
  auto i = intersect(a, b);
  ASSERT_EQ(i.basis().size(), 1u);
  EXPECT_EQ(i.basis()[0], r->parse("x*y"));
}

TEST(Annihilator, SumOfCyclics) {
  auto r = zp_ring({"x", "y"});
  auto m = direct_sum(quotient(r, {"x"}), quotient(r, {"x", "y"}));
  auto ann = annihilator(m);
  ASSERT_EQ(ann.basis().size(), 1u);
  EXPECT_EQ(ann.basis()[0], r->parse("x"));
}

TEST(Prune, RemovesUnitRelations) {
  auto r = zp_ring({"x", "y"});
  FreeModule<K> F2(r, {0, 1});
  // e1 = x e0 makes the module cyclic: S / (y x).
  auto m = GradedModule<K>::cokernel(F2, {F2.from_entries({r->parse("x"), r->parse("-1")}),
                                          F2.from_entries({r->parse("0"), r->parse("y")})});
  auto p = prune(m);
  EXPECT_EQ(p.ambient().rank(), 1);
  ASSERT_EQ(p.relations().size(), 1u);
  EXPECT_EQ(r->to_string(p.ambient().entry(p.relations()[0], 0)), "x*y");
  EXPECT_EQ(hilbert_series(m).numerator(), hilbert_series(p).numerator());
}

TEST(Resolution, ResidueField) {
  auto r = zp_ring({"x", "y"});
  auto res = minimal_free_resolution(quotient(r, {"x", "y"}));
  EXPECT_EQ(res.betti(), (std::vector<int>{1, 2, 1}));
  expect_exact(res);
}

TEST(Resolution, FreeModule) {
  auto r = zp_ring({"x", "y"});
  auto res = minimal_free_resolution(GradedModule<K>::free(FreeModule<K>::ring_module(r)));
  EXPECT_EQ(res.length(), 0);
  EXPECT_EQ(res.betti(), (std::vector<int>{1}));
}

TEST(Resolution, MixedModule) {
  auto r = zp_ring({"x", "y"});
  auto res = minimal_free_resolution(quotient(r, {"x^2", "x*y"}));
  EXPECT_EQ(res.betti(), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(res.length(), 2);
  auto gb = res.graded_betti();
  EXPECT_EQ(gb[1].at(2), 2);
  EXPECT_EQ(gb[2].at(3), 1);
  expect_exact(res);
}

TEST(Resolution, NonMinimalPresentation) {
  auto r = zp_ring({"x", "y", "z"});
  auto res = minimal_free_resolution(quotient(r, {"x*y", "x*z", "y*z", "x*y + x*z", "x^2*y"}));
  EXPECT_EQ(res.betti(), (std::vector<int>{1, 3, 2}));
  expect_exact(res);
}

TEST(Resolution, TwoPlanesAndTwistedCubic) {
  auto r = zp_ring({"x", "y", "z", "w"});
  auto two = minimal_free_resolution(quotient(r, {"x*z", "x*w", "y*z", "y*w"}));
  EXPECT_EQ(two.betti(), (std::vector<int>{1, 4, 4, 1}));
  expect_exact(two);
  auto cubic = minimal_free_resolution(quotient(r, {"x*z - y^2", "y*w - z^2", "x*w - y*z"}));
  EXPECT_EQ(cubic.betti(), (std::vector<int>{1, 3, 2}));
  expect_exact(cubic);
}

// Auslander-Buchsbaum at the graded level: n - pd <= dim.
TEST(ResolutionProperty, DepthAtMostDimension) {
  auto r = zp_ring({"x", "y", "z"});
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"x^2", "x*y"}, {"x*y*z"}, {"x", "y", "z"}, {"x^2", "y^2", "x*z"}, {"x*y", "y*z"}}) {
    auto m = quotient(r, gens);
    auto res = minimal_free_resolution(m);
    EXPECT_LE(3 - res.length(), dim_module(m));
  }
}
