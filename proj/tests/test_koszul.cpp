#include <gtest/gtest.h>

#include "chern/koszul.hpp"
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

TEST(Koszul, RegularSequence) {
  auto r = zp_ring({"x", "y"});
  auto m = ring_module(r);
  auto rep = koszul_homology(m, parse_all(*r, {"x", "y"}));
  EXPECT_EQ(rep.lengths, (std::vector<long long>{1, 0, 0}));
  EXPECT_EQ(rep.chi1, 0);
  auto q = make_parameter_ideal(m, parse_all(*r, {"x^2", "y^3"}));
  EXPECT_EQ(chi1_serre(m, q), 0);
  EXPECT_EQ(koszul_homology(m, q).lengths[0], 6);
}

TEST(Koszul, MixedModule) {
  auto r = zp_ring({"x", "y"});
  auto m = quotient(r, {"x^2", "x*y"});
  auto q = make_parameter_ideal(m, parse_all(*r, {"y"}));
  auto rep = koszul_homology(m, q);
  EXPECT_EQ(rep.lengths, (std::vector<long long>{2, 1}));
  EXPECT_EQ(rep.chi1, 1);
  EXPECT_EQ(chi1_serre(m, q), 1);
}

TEST(Koszul, TwoPlanes) {
  auto r = zp_ring({"x", "y", "z", "w"});
  auto m = quotient(r, {"x*z", "x*w", "y*z", "y*w"});
  auto q = make_parameter_ideal(m, parse_all(*r, {"x + z", "y + w"}));
  auto rep = koszul_homology(m, q);
  EXPECT_EQ(rep.lengths[0], 3);
  EXPECT_EQ(rep.chi1, 1);
  EXPECT_EQ(chi1_serre(m, q), 1);
  auto rec = chi1_recursion_check(m, q.gens);
  EXPECT_TRUE(rec.pass);
  EXPECT_EQ(rec.chi1, 1);
}

TEST(Koszul, RecursionOnFreeAndMixed) {
  auto r = zp_ring({"x", "y"});
  auto rec = chi1_recursion_check(ring_module(r), parse_all(*r, {"x", "y"}));
  EXPECT_TRUE(rec.pass);
  EXPECT_EQ(rec.chi1, 0);
  auto r3 = zp_ring({"x", "y", "z"});
  // (x) intersect (y, z): a plane with an embedded-dimension line.
  auto m = quotient(r3, {"x*y", "x*z"});
  auto rec3 = chi1_recursion_check(m, parse_all(*r3, {"y + x", "z - x"}));
  EXPECT_TRUE(rec3.pass);
  EXPECT_GE(rec3.chi1, 0);
}

TEST(Koszul, InfiniteColengthRejected) {
  auto r = zp_ring({"x", "y"});
  EXPECT_THROW(koszul_homology(ring_module(r), parse_all(*r, {"x"})), NotParameterIdeal);
}

// Serre: the Koszul side and the multiplicity side agree.
TEST(KoszulProperty, SerreIdentityOnRandomLinearSops) {
  auto r = zp_ring({"x", "y", "z"});
  std::mt19937_64 rng(5);
  const std::vector<std::vector<std::string>> mods = {{"x^2", "x*y"}, {"x*y*z"}, {"x*y", "x*z"}, {"x^2 - y*z"}};
  for (const auto& gens : mods) {
    auto m = quotient(r, gens);
    const int d = dim_module(m);
    std::vector<Poly<K>> sop;
    for (int i = 0; i < d; ++i) {
      std::vector<Term<K>> raw;
      for (int v = 0; v < 3; ++v) raw.push_back({Monomial::variable(v), 0, r->field().random(rng)});
      sop.push_back(arith::canonicalize(r->field(), r->order(), raw));
    }
    auto q = make_parameter_ideal(m, sop);
    auto rep = koszul_homology(m, q);
    EXPECT_EQ(rep.chi1, chi1_serre(m, q));
    EXPECT_GE(rep.chi1, 0);
    EXPECT_EQ(rep.lengths[0], q.colength);
  }
}
