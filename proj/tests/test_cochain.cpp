#include <gtest/gtest.h>

#include <random>

#include "fqcoh/cochain.hpp"

using namespace fqcoh;

namespace {

AlexanderFQuandle example(unsigned q) {
  const auto F = FieldSpec::default_for(q);
  const Code g = F.primitive();
  if (q == 4) return AlexanderFQuandle(F, g, F.mul(g, g));
  if (q == 8) return AlexanderFQuandle(F, g, F.pow(g, 4));
  return AlexanderFQuandle(F, F.neg(1), F.from_int(2));
}

UCochain random_cochain(const FieldSpec& F, unsigned n, std::mt19937_64& rng, unsigned max_terms) {
  MonomialCodec codec(F.q(), n);
  std::uniform_int_distribution<std::uint64_t> key(0, codec.size() - 1);
  std::uniform_int_distribution<unsigned> coeff(1, F.q() - 1), count(0, max_terms);
  std::vector<Term> t;
  for (unsigned k = count(rng); k > 0; --k) t.push_back({key(rng), static_cast<Code>(coeff(rng))});
  return UCochain::from_terms(F, n, std::move(t));
}

}  // namespace

TEST(ReduceExponent, Examples) {
  EXPECT_EQ(reduce_exponent(9, 9), 1u);
  EXPECT_EQ(reduce_exponent(4, 3), 3u);
  EXPECT_EQ(reduce_exponent(4, 6), 3u);
  EXPECT_EQ(reduce_exponent(4, 0), 0u);
  const auto F = FieldSpec::default_for(8);
  for (unsigned e = 0; e < 40; ++e)
    for (unsigned x = 0; x < 8; ++x)
      EXPECT_EQ(F.pow(static_cast<Code>(x), e), F.pow(static_cast<Code>(x), reduce_exponent(8, e)));
}

TEST(Monomial, Examples) {
  const auto F4 = FieldSpec::default_for(4);
  const auto m = monomial(F4, {1, 2});
  EXPECT_EQ(to_text(m), "1*U1^1*U2^2");
  const std::vector<unsigned> ex{1, 1};
  EXPECT_TRUE(monomial(F4, 2, ex, 0).is_zero());
  EXPECT_EQ(to_text(monomial(FieldSpec::default_for(8), {1, 2, 4})), "1*U1^1*U2^2*U3^4");
  EXPECT_THROW(monomial(F4, 3, ex, 1), Error);
}

TEST(Arithmetic, AddScaleMul) {
  const auto F3 = FieldSpec::prime(3);
  const auto u1 = monomial(F3, {1, 0}), u2 = monomial(F3, {0, 1});
  const UCochain zero(F3, 2);
  EXPECT_EQ(u1 + zero, u1);
  EXPECT_TRUE((u1 + F3.neg(1) * u1).is_zero());
  EXPECT_EQ(u1 + (u1 + u2), 2 * u1 + u2);
  EXPECT_EQ(u1 * u2, monomial(F3, {1, 1}));
  EXPECT_EQ(u1 * UCochain::constant(F3, 2, 1), u1);
  const auto F4 = FieldSpec::default_for(4);
  EXPECT_EQ(monomial(F4, {2}) * monomial(F4, {3}), monomial(F4, {2}));
  EXPECT_THROW(u1 + monomial(F3, {1}), Error);
}

TEST(Substitute, Examples) {
  const auto Q = example(4);
  const auto& F = Q.field();
  const auto phi = monomial(F, {1, 1});
  const std::vector<LinearForm> id{{1, 0}, {0, 1}};
  EXPECT_EQ(substitute_linear(phi, id, 2), phi);
  const std::vector<LinearForm> scaled{{Q.omega(), 0}, {0, Q.f_coeff()}};
  EXPECT_EQ(substitute_linear(phi, scaled, 2), F.mul(Q.omega(), Q.f_coeff()) * phi);
  const std::vector<LinearForm> sum{{1, 1}};
  EXPECT_EQ(substitute_linear(monomial(F, {2}), sum, 2), monomial(F, {2, 0}) + monomial(F, {0, 2}));
}

TEST(Substitute, AgreesPointwise) {
  std::mt19937_64 rng(7);
  for (unsigned q : {4u, 9u}) {
    const auto F = FieldSpec::default_for(q);
    std::uniform_int_distribution<unsigned> c(0, q - 1);
    for (int rep = 0; rep < 20; ++rep) {
      const auto phi = random_cochain(F, 2, rng, 6);
      std::vector<LinearForm> forms(2, LinearForm(3));
      for (auto& f : forms)
        for (auto& a : f) a = static_cast<Code>(c(rng));
      const auto s = substitute_linear(phi, forms, 3);
      for (int pt = 0; pt < 30; ++pt) {
        std::vector<Code> v{static_cast<Code>(c(rng)), static_cast<Code>(c(rng)), static_cast<Code>(c(rng))};
        std::vector<Code> img(2, 0);
        for (unsigned i = 0; i < 2; ++i)
          for (unsigned j = 0; j < 3; ++j) img[i] = F.add(img[i], F.mul(forms[i][j], v[j]));
        ASSERT_EQ(eval_u(s, v), eval_u(phi, img));
      }
    }
  }
}

TEST(Eval, Examples) {
  const auto F = FieldSpec::default_for(4);
  const Code w = F.primitive();
  const std::vector<Code> pt{w, w};
  EXPECT_EQ(eval_u(monomial(F, {1, 2}), pt), 1);
  const std::vector<Code> origin{0, 0};
  EXPECT_EQ(eval_u(monomial(F, {1, 2}) + monomial(F, {3, 0}), origin), 0);
  EXPECT_EQ(eval_u(UCochain(F, 2), pt), 0);
  EXPECT_THROW(eval_u(UCochain(F, 3), pt), Error);
}

TEST(Coordinates, RoundTrip) {
  const auto F = FieldSpec::default_for(4);
  const Code w = F.primitive();
  const std::vector<Code> x{w, 1};
  EXPECT_EQ(u_from_x(F, x), (std::vector<Code>{F.add(w, 1), 1}));
  const std::vector<Code> one{w};
  EXPECT_EQ(u_from_x(F, one), one);
  for (unsigned q : {4u, 9u}) {
    const auto G = FieldSpec::default_for(q);
    for (unsigned n = 1; n <= 4; ++n) {
      MonomialCodec codec(q, n);
      for (std::uint64_t k = 0; k < codec.size(); ++k) {
        const auto d = codec.decode(k);
        std::vector<Code> t(d.begin(), d.end());
        ASSERT_EQ(x_from_u(G, u_from_x(G, t)), t);
      }
    }
  }
}

TEST(Interpolate, Examples) {
  const auto F = FieldSpec::default_for(8);
  EXPECT_TRUE(interpolate(F, 2, std::vector<Code>(64, 0)).is_zero());
  std::vector<Code> indicator(8, 0);
  indicator[0] = 1;
  EXPECT_EQ(interpolate(F, 1, indicator), UCochain::constant(F, 1, 1) - monomial(F, {7}));
  EXPECT_THROW(interpolate(F, 2, indicator), Error);
}

TEST(Interpolate, RoundTrips) {
  std::mt19937_64 rng(11);
  for (unsigned q : {4u, 8u, 9u}) {
    const auto F = FieldSpec::default_for(q);
    for (int rep = 0; rep < 100; ++rep) {
      const auto phi = random_cochain(F, 2, rng, 12);
      ASSERT_EQ(interpolate(F, 2, value_table(phi)), phi);
    }
    std::uniform_int_distribution<unsigned> c(0, q - 1);
    std::vector<Code> table(std::size_t{q} * q * q);
    for (auto& v : table) v = static_cast<Code>(c(rng));
    EXPECT_EQ(value_table(interpolate(F, 3, table)), table);
  }
}

TEST(Interpolate, MatricesAreInverse) {
  for (unsigned q : {4u, 5u, 8u, 9u, 16u}) {
    const auto F = FieldSpec::default_for(q);
    const auto V = detail::evaluation_matrix(F), W = detail::interpolation_matrix(F);
    for (unsigned i = 0; i < q; ++i)
      for (unsigned j = 0; j < q; ++j) {
        Code acc = 0;
        for (unsigned k = 0; k < q; ++k) acc = F.add(acc, F.mul(V[i * q + k], W[k * q + j]));
        ASSERT_EQ(acc, i == j ? 1 : 0);
      }
  }
}

TEST(Delta, DegreeOneFormula) {
  const auto Q = example(8);
  const auto& F = Q.field();
  for (unsigned a = 1; a < 8; ++a) {
    const auto phi = monomial(F, {a});
    const std::vector<LinearForm> sum{{1, 1}}, twisted{{Q.omega(), Q.f_coeff()}};
    const auto expected = substitute_linear(phi, sum, 2) - substitute_linear(phi, twisted, 2);
    EXPECT_EQ(delta_pointwise(Q, phi), expected);
    EXPECT_EQ(delta_poly(Q, phi), expected);
  }
}

TEST(Delta, PaperCocycleAndZero) {
  const auto Q = example(4);
  EXPECT_TRUE(delta_pointwise(Q, monomial(Q.field(), {1, 2})).is_zero());
  EXPECT_TRUE(delta_poly(Q, monomial(Q.field(), {1, 2})).is_zero());
  EXPECT_TRUE(delta_poly(Q, UCochain(Q.field(), 3)).is_zero());
}

TEST(Delta, PolyMatchesPointwiseAndSquaresToZero) {
  std::mt19937_64 rng(3);
  for (unsigned q : {4u, 8u, 9u}) {
    const auto Q = example(q);
    for (unsigned n = 1; n <= 3; ++n)
      for (int rep = 0; rep < 15; ++rep) {
        const auto phi = random_cochain(Q.field(), n, rng, 8);
        const auto d = delta_poly(Q, phi);
        ASSERT_EQ(d, delta_pointwise(Q, phi));
        ASSERT_TRUE(delta_poly(Q, d).is_zero());
      }
  }
}

TEST(Delta, Linearity) {
  std::mt19937_64 rng(5);
  const auto Q = example(9);
  const auto& F = Q.field();
  for (int rep = 0; rep < 20; ++rep) {
    const auto a = random_cochain(F, 2, rng, 6), b = random_cochain(F, 2, rng, 6);
    const Code s = static_cast<Code>(1 + rep % 8), t = static_cast<Code>(8 - rep % 8);
    EXPECT_EQ(delta_poly(Q, s * a + t * b), s * delta_poly(Q, a) + t * delta_poly(Q, b));
  }
}

TEST(Delta, FieldMismatch) {
  const auto Q = example(4);
  EXPECT_THROW(delta_poly(Q, monomial(FieldSpec::default_for(8), {1})), Error);
  EXPECT_THROW(delta_pointwise(Q, monomial(FieldSpec::default_for(8), {1})), Error);
}

TEST(QuandleCochain, MonomialCriterion) {
  const auto F = FieldSpec::default_for(8);
  EXPECT_TRUE(is_quandle_cochain(monomial(F, {1, 2, 4})));
  EXPECT_FALSE(is_quandle_cochain(monomial(F, {1, 0, 1})));
  EXPECT_TRUE(is_quandle_cochain(monomial(F, {0, 0})));
}

TEST(QuandleCochain, MatchesVanishingOnDegenerateTuples) {
  std::mt19937_64 rng(9);
  const auto F = FieldSpec::default_for(4);
  for (int rep = 0; rep < 50; ++rep) {
    const auto phi = random_cochain(F, 3, rng, 3);
    const auto values = value_table(phi);
    bool vanishes = true;
    MonomialCodec codec(4, 3);
    for (std::uint64_t k = 0; k < values.size(); ++k)
      if (codec.exponent(k, 1) == 0 && values[k] != 0) vanishes = false;
    ASSERT_EQ(is_quandle_cochain(phi), vanishes) << to_text(phi);
  }
}

TEST(Serialization, TextAndJsonRoundTrip) {
  std::mt19937_64 rng(13);
  for (unsigned q : {4u, 9u, 16u}) {
    const auto F = FieldSpec::default_for(q);
    for (int rep = 0; rep < 20; ++rep) {
      const auto phi = random_cochain(F, 3, rng, 5);
      EXPECT_EQ(parse_cochain(F, 3, to_text(phi)), phi);
      EXPECT_EQ(cochain_from_json(F, 3, to_json(phi)), phi);
    }
  }
  const auto F = FieldSpec::default_for(4);
  EXPECT_THROW(parse_cochain(F, 2, "1*U3^1"), Error);
  EXPECT_THROW(parse_cochain(F, 2, "1*V1^1"), Error);
}
