#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace chern;
using chern::testing::parse_all;
using chern::testing::qq_ring;
using chern::testing::zp_ring;

namespace {

template <class F>
std::vector<std::string> basis_strings(const PolyRing<F>& r, const SubmoduleGB<F>& gb) {
  std::vector<std::string> out;
  for (const auto& b : gb.basis()) out.push_back(r.to_string(b));
  return out;
}

}  // namespace

TEST(GbEngine, MonomialIdealUnchanged) {
  auto r = zp_ring({"x", "y"});
  auto S = FreeModule<PrimeField>::ring_module(r);
  auto gb = groebner(S, parse_all(*r, {"x^2", "x*y", "y^2"}));
  EXPECT_EQ(basis_strings(*r, gb), (std::vector<std::string>{"x^2", "x*y", "y^2"}));
}

TEST(GbEngine, LinearFormsGiveMaximalIdeal) {
  auto r = qq_ring({"x", "y"});
  auto S = FreeModule<RationalField>::ring_module(r);
  auto gb = groebner(S, parse_all(*r, {"x + y", "x - y"}));
  EXPECT_EQ(basis_strings(*r, gb), (std::vector<std::string>{"x", "y"}));
  EXPECT_TRUE(gb.quotient_is_artinian());
}

TEST(GbEngine, InhomogeneousInputThrows) {
  auto r = zp_ring({"x", "y"});
  auto S = FreeModule<PrimeField>::ring_module(r);
  EXPECT_THROW(groebner(S, parse_all(*r, {"x^2 + y"})), InhomogeneousInput);
}

TEST(GbEngine, TwistedCubic) {
  auto r = zp_ring({"a", "b", "c", "d"});
  auto S = FreeModule<PrimeField>::ring_module(r);
  auto gb = groebner(S, parse_all(*r, {"a*c - b^2", "b*d - c^2", "a*d - b*c"}));
  EXPECT_EQ(gb.basis().size(), 3u);
  auto gb2 = groebner(S, parse_all(*r, {"a*c - b^2", "b*d - c^2"}));
  EXPECT_EQ(gb2.basis().size(), 2u);
  EXPECT_TRUE(gb.contains(gb2));
  EXPECT_FALSE(gb2.contains(gb));
}

TEST(GbEngine, NormalForm) {
  auto r = zp_ring({"x", "y"});
  auto S = FreeModule<PrimeField>::ring_module(r);
  auto gb = groebner(S, parse_all(*r, {"x^2 - y^2", "x*y"}));
  EXPECT_TRUE(gb.normal_form(r->parse("x^3")).is_zero());
  EXPECT_EQ(r->to_string(gb.normal_form(r->parse("x^2 + x"))), "y^2 + x");
  EXPECT_TRUE(gb.contains(r->parse("y^3")));
  FreeModule<PrimeField> other(r, {1});
  EXPECT_THROW(gb.normal_form(other, r->parse("x")), AmbientMismatch);
}

TEST(GbEngine, InfiniteDirectionWitness) {
  auto r = zp_ring({"x", "y"});
  auto S = FreeModule<PrimeField>::ring_module(r);
  auto gb = groebner(S, parse_all(*r, {"x^2", "x*y"}));
  auto w = gb.infinite_direction();
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->first, 0);
  EXPECT_EQ(w->second, 1);
}

TEST(GbEngine, ModuleBasisBothOrders) {
  auto r = zp_ring({"x", "y"});
  for (auto kind : {OrderKind::kPositionOverTerm, OrderKind::kTermOverPosition}) {
    FreeModule<PrimeField> F2(r, {0, 0}, kind);
    auto v1 = F2.from_entries({r->parse("y"), r->parse("-x")});
    auto v2 = F2.from_entries({r->parse("x^2"), r->parse("0")});
    auto gb = groebner(F2, {v1, v2});
    EXPECT_TRUE(gb.contains(F2.from_entries({r->parse("0"), r->parse("x^3")})));
    EXPECT_FALSE(gb.contains(F2.from_entries({r->parse("x"), r->parse("0")})));
  }
}

TEST(GbEngine, TruncationStopsAtDegree) {
  auto r = zp_ring({"x", "y"});
  auto S = FreeModule<PrimeField>::ring_module(r);
  auto gb = groebner(S, parse_all(*r, {"x^2 - y^2", "x*y", "y^5"}), GbOptions{2});
  EXPECT_EQ(gb.truncated_at(), 2);
  auto full = groebner(S, parse_all(*r, {"x^2 - y^2", "x*y", "y^5"}));
  EXPECT_FALSE(full.truncated_at().has_value());
}

// Every generator reduces to zero, every S-vector reduces to zero, and the
// basis is independent of generator order.
TEST(GbEngineProperty, BuchbergerCriterionAndCanonicity) {
  auto r = zp_ring({"x", "y", "z"}, 101);
  auto S = FreeModule<PrimeField>::ring_module(r);
  std::mt19937_64 rng(11);
  auto random_form = [&](int d) {
    std::vector<Term<PrimeField>> raw;
    for (int t = 0; t < 4; ++t) {
      int a = static_cast<int>(rng() % (d + 1));
      int b = static_cast<int>(rng() % (d - a + 1));
      int e[3] = {a, b, d - a - b};
      raw.push_back({Monomial::from_exponents(e), 0, r->field().random(rng)});
    }
    return arith::canonicalize(r->field(), r->order(), raw);
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly<PrimeField>> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_form(2 + static_cast<int>(rng() % 2)));
    auto gb = groebner(S, gens);
    for (const auto& g : gens) EXPECT_TRUE(gb.contains(g));
    const auto& b = gb.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        EXPECT_TRUE(gb.contains(s_vector(S, b[i], b[j])));
      }
    }
    std::reverse(gens.begin(), gens.end());
    EXPECT_EQ(groebner(S, gens).basis(), gb.basis());
  }
}
