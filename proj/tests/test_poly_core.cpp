#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace chern;
using chern::testing::parse_all;
using chern::testing::qq_ring;
using chern::testing::zp_ring;

TEST(Field, PrimeFieldArithmetic) {
  PrimeField k(7);
  EXPECT_EQ(k.add(5, 4), 2u);
  EXPECT_EQ(k.sub(2, 5), 4u);
  EXPECT_EQ(k.mul(k.inv(3), 3), 1u);
  EXPECT_EQ(k.from_integer(-1), 6u);
  EXPECT_EQ(k.to_signed(6), -1);
  EXPECT_THROW(PrimeField(8), FieldError);
  EXPECT_THROW(k.inv(0), FieldError);
}

TEST(Field, RationalFieldArithmetic) {
  RationalField q;
  auto half = q.div(q.one(), q.from_integer(2));
  EXPECT_EQ(q.add(half, half), q.one());
  EXPECT_EQ(q.to_string(half), "1/2");
}

TEST(Monomial, DivisionAndLcm) {
  const int a[] = {2, 1, 0};
  const int b[] = {1, 3, 1};
  auto ma = Monomial::from_exponents(a);
  auto mb = Monomial::from_exponents(b);
  auto l = lcm(ma, mb);
  EXPECT_EQ(l.degree(), 6);
  EXPECT_TRUE(ma.divides(l));
  EXPECT_TRUE(mb.divides(l));
  EXPECT_EQ((l / ma) * ma, l);
  EXPECT_THROW(ma / mb, std::invalid_argument);
  EXPECT_EQ(gcd(ma, mb).degree(), 2);
}

TEST(Monomial, GrevlexOrder) {
  auto r = zp_ring({"x", "y", "z"});
  // x*z < y^2 in grevlex with x > y > z.
  auto xz = r->parse("x*z").lead().mono;
  auto yy = r->parse("y^2").lead().mono;
  EXPECT_LT(grevlex_compare(xz, yy, 3), 0);
  EXPECT_EQ(r->to_string(r->parse("x*z + y^2 + x^2")), "x^2 + y^2 + x*z");
}

TEST(PolyCore, AdditionCancels) {
  auto r = zp_ring({"x", "y"});
  RingElement<PrimeField> a(r, r->parse("x + y"));
  RingElement<PrimeField> b(r, r->parse("-x"));
  EXPECT_EQ((a + b).to_string(), "y");
  EXPECT_TRUE((a - a).value().is_zero());
}

TEST(PolyCore, ProductOverRationals) {
  auto r = qq_ring({"x", "y"});
  RingElement<RationalField> a(r, r->parse("x + y"));
  RingElement<RationalField> b(r, r->parse("x - y"));
  EXPECT_EQ((a * b).to_string(), "x^2 - y^2");
  EXPECT_EQ(r->to_string(r->parse("(1/2)*x")), "1/2*x");
  EXPECT_EQ(r->parse(r->to_string(r->parse("x/3 - 2/5*y"))), r->parse("x/3 - 2/5*y"));
}

TEST(PolyCore, FrobeniusOverF3) {
  auto r = zp_ring({"x", "y"}, 3);
  auto sq = r->pow(r->parse("x + y"), 3);
  EXPECT_EQ(r->to_string(sq), "x^3 + y^3");
  EXPECT_EQ(r->to_string(r->pow(r->parse("x + y"), 2)), "x^2 - x*y + y^2");
  EXPECT_EQ(r->pow(r->parse("x + y"), 2), r->parse("x^2 + 2*x*y + y^2"));
}

TEST(PolyCore, TotalDegreeAndHomogeneity) {
  auto r = zp_ring({"x", "y", "z"});
  EXPECT_EQ(PolyRing<PrimeField>::total_degree(r->parse("x^3*y + z")), 4);
  EXPECT_FALSE(PolyRing<PrimeField>::total_degree(r->zero()).has_value());
  EXPECT_TRUE(PolyRing<PrimeField>::is_homogeneous(r->parse("x*y - z^2")));
  EXPECT_FALSE(PolyRing<PrimeField>::is_homogeneous(r->parse("x*y - z")));
}

TEST(PolyCore, RingMismatchThrows) {
  auto r1 = zp_ring({"x", "y"});
  auto r2 = zp_ring({"x", "z"});
  RingElement<PrimeField> a(r1, r1->parse("x"));
  RingElement<PrimeField> b(r2, r2->parse("x"));
  EXPECT_THROW(a + b, RingMismatch);
  auto r3 = zp_ring({"x", "y"});
  RingElement<PrimeField> c(r3, r3->parse("y"));
  EXPECT_EQ((a + c).to_string(), "x + y");
}

TEST(PolyCore, ParseErrorsReportPosition) {
  auto r = zp_ring({"x", "y"});
  try {
    r->parse("x + w");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(r->parse("x +"), ParseError);
  EXPECT_THROW(r->parse("x^"), ParseError);
  EXPECT_THROW(r->parse("(x"), ParseError);
  EXPECT_THROW(r->parse("x/0"), ParseError);
  EXPECT_THROW(r->parse("x/y"), ParseError);
}

TEST(PolyCore, InvalidRings) {
  EXPECT_THROW(zp_ring({"x", "x"}), std::invalid_argument);
  EXPECT_THROW(zp_ring({}), std::invalid_argument);
  EXPECT_THROW(zp_ring({"1x"}), std::invalid_argument);
}

TEST(PolyCore, ExponentOverflowThrows) {
  auto r = zp_ring({"x"});
  EXPECT_THROW(r->parse("x^70000"), std::exception);
  auto big = r->parse("x^40000");
  EXPECT_THROW(r->mul(big, big), std::overflow_error);
}

// Ring axioms on random polynomials.
TEST(PolyCoreProperty, RingAxioms) {
  auto r = zp_ring({"x", "y", "z"}, 101);
  std::mt19937_64 rng(7);
  auto random_poly = [&] {
    std::vector<Term<PrimeField>> raw;
    for (int t = 0; t < 5; ++t) {
      int e[3] = {static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
      raw.push_back({Monomial::from_exponents(e), 0, r->field().random(rng)});
    }
    return arith::canonicalize(r->field(), r->order(), raw);
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ(r->add(a, b), r->add(b, a));
    EXPECT_EQ(r->mul(a, b), r->mul(b, a));
    EXPECT_EQ(r->mul(a, r->add(b, c)), r->add(r->mul(a, b), r->mul(a, c)));
    EXPECT_EQ(r->mul(r->mul(a, b), c), r->mul(a, r->mul(b, c)));
    EXPECT_TRUE(r->sub(a, a).is_zero());
    EXPECT_EQ(r->parse(r->to_string(a)), a);
  }
}

TEST(FreeModule, MapsAndDuals) {
  auto r = zp_ring({"x", "y"});
  FreeModule<PrimeField> target(r, {0});
  auto m = ModuleMap<PrimeField>::from_columns(target, {r->parse("x"), r->parse("y^2")});
  EXPECT_EQ(m.source().degrees(), (std::vector<int>{1, 2}));
  auto d = m.dual();
  EXPECT_EQ(d.source().degrees(), (std::vector<int>{0}));
  EXPECT_EQ(d.target().degrees(), (std::vector<int>{-1, -2}));
  EXPECT_EQ(d.entry(1, 0), r->parse("y^2"));
  EXPECT_THROW(ModuleMap<PrimeField>::from_columns(target, {r->parse("x + y^2")}), InhomogeneousInput);
}
