#include <gtest/gtest.h>

#include <random>

#include "fqcoh/cohomology.hpp"

using namespace fqcoh;

namespace {

AlexanderFQuandle make(unsigned q, int beta_log) {
  const auto F = FieldSpec::default_for(q);
  const Code g = F.primitive();
  return AlexanderFQuandle(F, g, F.pow(g, static_cast<std::uint64_t>(beta_log)));
}

AlexanderFQuandle odd9() {
  const auto F = FieldSpec::default_for(9);
  return AlexanderFQuandle(F, F.neg(1), F.from_int(2));
}

}  // namespace

TEST(SpaceBasis, Sizes) {
  const auto F4 = FieldSpec::default_for(4);
  EXPECT_EQ(space_basis(F4, 2).size(), 15u);  // constant excluded
  EXPECT_EQ(space_basis(F4, 3).size(), 48u);
  const auto b1 = space_basis(FieldSpec::prime(2), 1);
  ASSERT_EQ(b1.size(), 1u);
  EXPECT_EQ(to_text(b1.monomial_at(0)), "1*U1^1");
  for (unsigned q : {4u, 9u})
    for (unsigned n = 3; n <= 4; ++n) {
      std::size_t expect = q * q;
      for (unsigned i = 2; i < n; ++i) expect *= q - 1;
      EXPECT_EQ(space_basis(FieldSpec::default_for(q), n).size(), expect);
    }
}

TEST(SpaceBasis, OrderedAndQuandle) {
  const auto B = space_basis(FieldSpec::default_for(8), 3);
  for (std::size_t i = 0; i < B.size(); ++i) {
    if (i) EXPECT_LT(B.key(i - 1), B.key(i));
    EXPECT_TRUE(is_quandle_cochain(B.monomial_at(i)));
    EXPECT_EQ(B.index_of(B.key(i)), i);
  }
}

TEST(DeltaMatrix, PaperColumnIsZero) {
  const auto Q = make(4, 2);
  const auto M = delta_matrix(Q, 2);
  const auto B = space_basis(Q, 2);
  const auto j = B.index_of(monomial(Q.field(), {1, 2}).terms()[0].key);
  ASSERT_TRUE(j.has_value());
  for (std::size_t i = 0; i < M.rows(); ++i) EXPECT_EQ(M.at(i, *j), 0);
}

TEST(DeltaMatrix, ComposesToZero) {
  for (const auto& Q : {make(4, 2), make(8, 4)})
    for (unsigned n = 1; n <= 2; ++n) EXPECT_TRUE((delta_matrix(Q, n + 1) * delta_matrix(Q, n)).is_zero());
}

TEST(DeltaMatrix, Closure) {
  for (const auto& Q : {make(4, 2), make(8, 4), odd9()})
    for (unsigned n = 1; n <= 3; ++n) EXPECT_EQ(closure_violations(Q, n), 0u);
}

TEST(HDim, PaperExamples) {
  const auto Q4 = make(4, 2);
  const auto r = h_dim(Q4, 2);
  EXPECT_EQ(r.dim_h, 1u);
  ASSERT_EQ(r.representatives.size(), 1u);
  EXPECT_EQ(to_text(r.representatives[0].cochain), "1*U1^1*U2^2");
  const auto Q8 = make(8, 4);
  EXPECT_EQ(h_dim(Q8, 2).dim_h, 0u);
  const auto r3 = h_dim(Q8, 3);
  EXPECT_EQ(r3.dim_h, 1u);
  ASSERT_EQ(r3.representatives.size(), 1u);
  EXPECT_EQ(r3.representatives[0].label, "F(1,2,4)");
}

TEST(HDim, RankNullityAndComplex) {
  for (const auto& Q : {make(4, 2), make(8, 4), odd9()})
    for (unsigned n = 1; n <= 3; ++n) {
      const auto M = delta_matrix(Q, n);
      const std::size_t r = rank(M);
      const auto rep = h_dim(Q, n);
      EXPECT_EQ(rep.dim_cocycles, M.cols() - r);
      if (n > 1) EXPECT_EQ(rep.dim_coboundaries, rank(delta_matrix(Q, n - 1)));
      EXPECT_LE(rep.dim_coboundaries, rep.dim_cocycles);
      EXPECT_EQ(rep.dim_h, rep.representatives.size());
    }
}

TEST(HDim, PointwiseDeltaGivesSameDimensions) {
  const auto Q = odd9();
  for (unsigned n = 2; n <= 3; ++n) {
    const auto src = space_basis(Q, n), dst = space_basis(Q, n + 1);
    GFqMatrix M(Q.field(), dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      const UCochain d = delta_pointwise(Q, src.monomial_at(j));
      for (const Term& t : d.terms()) M.set(*dst.index_of(t.key), j, t.coeff);
    }
    EXPECT_EQ(rank(M), rank(delta_matrix(Q, n)));
  }
}

TEST(HDim, RepresentativesAreIndependentClasses) {
  for (const auto& Q : {make(4, 2), odd9()})
    for (unsigned n = 2; n <= 3; ++n) {
      const auto rep = h_dim(Q, n);
      const auto B = space_basis(Q, n);
      const auto D = delta_matrix(Q, n - 1);
      RowEchelon span(Q.field(), B.size());
      for (std::size_t j = 0; j < D.cols(); ++j) {
        std::vector<Code> col(D.rows());
        for (std::size_t i = 0; i < D.rows(); ++i) col[i] = D.at(i, j);
        span.insert(col);
      }
      for (const auto& r : rep.representatives) {
        EXPECT_TRUE(is_cocycle(Q, r.cochain));
        EXPECT_FALSE(is_coboundary(Q, r.cochain).has_value());
        std::vector<Code> v(B.size(), 0);
        for (const Term& t : r.cochain.terms()) v[*B.index_of(t.key)] = t.coeff;
        EXPECT_TRUE(span.insert(v)) << r.label;
      }
    }
}

TEST(HDim, ResourceLimitWithoutOptIn) {
  const auto Q = make(32, 3);
  try {
    h_dim(Q, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ResourceLimit);
  }
}

TEST(Cocycle, Examples) {
  const auto Q = make(4, 2);
  const auto& F = Q.field();
  EXPECT_TRUE(is_cocycle(Q, UCochain(F, 2)));
  EXPECT_TRUE(is_cocycle(Q, monomial(F, {1, 2})));
  EXPECT_FALSE(is_cocycle(Q, monomial(F, {1, 1})));
  try {
    is_cocycle(Q, monomial(F, {1, 0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotQuandleCochain);
  }
}

TEST(Coboundary, Examples) {
  const auto Q = make(8, 4);
  const auto& F = Q.field();
  const auto zero = is_coboundary(Q, UCochain(F, 3));
  ASSERT_TRUE(zero.has_value());
  EXPECT_TRUE(zero->is_zero());
  EXPECT_FALSE(is_coboundary(Q, monomial(F, {1, 2, 4})).has_value());
  std::mt19937_64 rng(1);
  const auto B = space_basis(Q, 2);
  for (int rep = 0; rep < 10; ++rep) {
    UCochain rho(F, 2);
    for (int k = 0; k < 4; ++k) rho = rho + static_cast<Code>(1 + rng() % 7) * B.monomial_at(rng() % B.size());
    const auto phi = delta_poly(Q, rho);
    const auto w = is_coboundary(Q, phi);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(delta_poly(Q, *w), phi);
  }
}

TEST(ClassesEqual, Examples) {
  const auto Q = make(8, 4);
  const auto& F = Q.field();
  const auto f = monomial(F, {1, 2, 4});
  EXPECT_TRUE(classes_equal(Q, f, f));
  EXPECT_FALSE(classes_equal(Q, f, UCochain(F, 3)));
  const auto B = space_basis(Q, 2);
  for (std::size_t j = 0; j < B.size(); j += 7) EXPECT_TRUE(classes_equal(Q, f, f + delta_poly(Q, B.monomial_at(j))));
}
