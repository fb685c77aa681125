#include <gtest/gtest.h>

#include <set>

#include "fqcoh/gfq.hpp"
#include "fqcoh/quandle.hpp"

using namespace fqcoh;

namespace {

FieldSpec f4() { return field_new(2, 2, {1, 1, 1}); }
FieldSpec f8() { return field_new(2, 3, {1, 0, 1, 1}); }  // x^3 + x^2 + 1, c_0 first

}  // namespace

TEST(FieldNew, AcceptsPaperModuli) {
  EXPECT_EQ(f4().q(), 4u);
  EXPECT_EQ(f8().q(), 8u);
  EXPECT_EQ(field_new(2, 4, {1, 1, 0, 0, 1}).q(), 16u);
}

TEST(FieldNew, RejectsBadInput) {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::ParseError;
  };
  EXPECT_EQ(code_of([] { field_new(2, 2, {1, 0, 1}); }), Errc::ReducibleModulus);
  EXPECT_EQ(code_of([] { field_new(4, 1, {1, 1}); }), Errc::NonPrimeP);
  EXPECT_EQ(code_of([] { field_new(2, 3, {1, 1, 1}); }), Errc::DegreeMismatch);
}

TEST(FieldArithmetic, SmallExamples) {
  const auto F = f4();
  const auto w = F.root();
  EXPECT_EQ(w * w, w + F.one());
  EXPECT_EQ(inv(w), w + F.one());

  const auto F3 = FieldSpec::prime(3);
  EXPECT_EQ(F3.element(2) + F3.element(2), F3.one());
  EXPECT_EQ(inv(F3.element(2)), F3.element(2));

  const auto G = f8();
  const auto r = G.root();
  EXPECT_EQ(r * pow(r, 3), pow(r, 2) + r + G.one());
  EXPECT_EQ(r * inv(r), G.one());
}

TEST(FieldArithmetic, AxiomsExhaustive) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
    const auto F = FieldSpec::default_for(q);
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        const Code ca = static_cast<Code>(a), cb = static_cast<Code>(b);
        ASSERT_EQ(F.add(ca, cb), F.add(cb, ca));
        ASSERT_EQ(F.mul(ca, cb), F.mul(cb, ca));
        ASSERT_EQ(F.sub(F.add(ca, cb), cb), ca);
        for (unsigned c = 0; c < q; ++c) {
          const Code cc = static_cast<Code>(c);
          ASSERT_EQ(F.mul(ca, F.add(cb, cc)), F.add(F.mul(ca, cb), F.mul(ca, cc)));
          ASSERT_EQ(F.mul(F.mul(ca, cb), cc), F.mul(ca, F.mul(cb, cc)));
          ASSERT_EQ(F.add(F.add(ca, cb), cc), F.add(ca, F.add(cb, cc)));
        }
      }
  }
}

TEST(FieldArithmetic, DivisionByZero) {
  try {
    inv(f4().zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
}

TEST(FieldArithmetic, FieldMismatch) {
  try {
    (void)(f4().one() + f8().one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FieldMismatch);
  }
}

TEST(Pow, FermatAndOrders) {
  EXPECT_EQ(pow(f4().root(), 3), f4().one());
  EXPECT_EQ(pow(f8().root(), 7), f8().one());
  for (unsigned q : {4u, 8u, 9u, 16u, 25u, 27u}) {
    const auto F = FieldSpec::default_for(q);
    for (const auto& a : enumerate_elements(F)) {
      EXPECT_EQ(pow(a, 0), F.one());
      EXPECT_EQ(pow(a, q), a);
      if (!a.is_zero()) EXPECT_EQ(pow(a, q - 1), F.one());
    }
  }
}

TEST(Frobenius, IsAutomorphism) {
  const auto F4 = f4();
  EXPECT_EQ(frobenius(F4.root(), 1), F4.root() + F4.one());
  for (unsigned q : {4u, 8u, 9u, 16u}) {
    const auto F = FieldSpec::default_for(q);
    for (const auto& a : enumerate_elements(F)) {
      EXPECT_EQ(frobenius(a, 0), a);
      for (const auto& b : enumerate_elements(F)) {
        EXPECT_EQ(frobenius(a + b, 1), frobenius(a, 1) + frobenius(b, 1));
        EXPECT_EQ(frobenius(a * b, 1), frobenius(a, 1) * frobenius(b, 1));
      }
    }
  }
}

TEST(ElementOrder, Examples) {
  EXPECT_EQ(element_order(f4().root()), 3u);
  EXPECT_EQ(element_order(f4().one()), 1u);
  EXPECT_EQ(element_order(field_new(2, 4, {1, 1, 0, 0, 1}).root()), 15u);
  try {
    element_order(f4().zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroElement);
  }
}

TEST(PrimitiveElement, SmallestOfFullOrder) {
  EXPECT_EQ(primitive_element(f4()), f4().root());
  EXPECT_EQ(primitive_element(FieldSpec::prime(2)), FieldSpec::prime(2).one());
  for (unsigned q : {3u, 4u, 8u, 9u, 16u, 25u, 27u, 32u}) {
    const auto F = FieldSpec::default_for(q);
    const auto g = primitive_element(F);
    EXPECT_EQ(element_order(g), q - 1);
    for (const auto& a : enumerate_elements(F)) {
      if (a.code() >= g.code()) break;
      if (!a.is_zero()) EXPECT_LT(element_order(a), q - 1);
    }
  }
}

TEST(Enumerate, DistinctAndClosed) {
  const auto F2 = FieldSpec::prime(2);
  const auto e2 = enumerate_elements(F2);
  ASSERT_EQ(e2.size(), 2u);
  EXPECT_TRUE(e2[0].is_zero());
  EXPECT_EQ(e2[1], F2.one());
  const auto F = f8();
  const auto all = enumerate_elements(F);
  std::set<Code> codes;
  for (const auto& a : all) codes.insert(a.code());
  EXPECT_EQ(codes.size(), 8u);
  for (const auto& a : all)
    for (const auto& b : all) {
      EXPECT_TRUE(codes.count((a + b).code()));
      EXPECT_TRUE(codes.count((a * b).code()));
    }
}

TEST(Parse, FieldAndElementSyntax) {
  const auto F = FieldSpec::parse("2^4/1,0,0,1,1");
  EXPECT_EQ(F.q(), 16u);
  EXPECT_EQ(F.to_string(), "2^4/1,0,0,1,1");
  EXPECT_EQ(element_order(F.root()), 15u);
  EXPECT_EQ(parse_element(F, "g^0"), 1);
  EXPECT_EQ(parse_element(F, "g^1"), F.primitive());
  EXPECT_EQ(parse_element(F, "0,1,0,0"), F.root().code());
  EXPECT_EQ(format_element(F, F.pow(F.primitive(), 7)), "g^7");
  const auto F9 = FieldSpec::parse("9");
  EXPECT_EQ(parse_element(F9, "-1"), F9.neg(1));
  EXPECT_THROW(FieldSpec::parse("2^2/1,0,1"), Error);
  EXPECT_THROW(parse_element(F, "x^2"), Error);
}
