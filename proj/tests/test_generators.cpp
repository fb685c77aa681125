#include <gtest/gtest.h>

#include <set>

#include "fqcoh/cohomology.hpp"
#include "fqcoh/generators.hpp"

using namespace fqcoh;

namespace {

FieldSpec field(unsigned q) {
  return q == 81 ? FieldSpec::parse("3^4/1,2,0,0,2") : FieldSpec::default_for(q);
}

AlexanderFQuandle make(unsigned q, int beta_log) {
  const auto F = FieldSpec::default_for(q);
  const Code g = F.primitive();
  return AlexanderFQuandle(F, g, F.pow(g, static_cast<std::uint64_t>(beta_log)));
}

AlexanderFQuandle minus_one(unsigned q) {
  const auto F = field(q);
  return AlexanderFQuandle(F, F.neg(1), F.from_int(2));
}

template <class Fn>
void for_each_quandle(const FieldSpec& F, Fn&& fn) {
  for (unsigned w = 2; w < F.q(); ++w)
    for (unsigned b = 1; b < F.q(); ++b) fn(AlexanderFQuandle(F, static_cast<Code>(w), static_cast<Code>(b)));
}

std::uint64_t binom(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(CondUnity, Examples) {
  const auto Q4 = make(4, 2), Q8 = make(8, 4);
  EXPECT_TRUE(cond_unity(Q4, Q4.omega(), 3));
  EXPECT_TRUE(cond_unity(Q8, Q8.omega(), 0));
  EXPECT_FALSE(cond_unity(Q8, Q8.omega(), 3));
  const auto F = FieldSpec::default_for(9);
  const AlexanderFQuandle Z(F, F.primitive(), F.neg(F.primitive()));
  EXPECT_FALSE(cond_unity(Z, Z.f_coeff(), 8));
}

TEST(Mu, Examples) {
  const auto F3 = FieldSpec::prime(3);
  EXPECT_TRUE(mu(F3, 1).is_zero());
  EXPECT_TRUE(mu(F3, 3).is_zero());
  EXPECT_EQ(mu(F3, 2), 2 * monomial(F3, {1, 1}));
  EXPECT_TRUE(mu(FieldSpec::default_for(16), 8).is_zero());
}

TEST(Chi, Examples) {
  EXPECT_EQ(chi(FieldSpec::prime(2)), monomial(FieldSpec::prime(2), {1, 1}));
  const auto F3 = FieldSpec::prime(3);
  EXPECT_EQ(chi(F3), monomial(F3, {2, 1}) + monomial(F3, {1, 2}));
  const auto F = FieldSpec::default_for(9);
  const auto v = value_table(chi(F));
  for (unsigned a = 0; a < 9; ++a) {
    EXPECT_EQ(v[a * 9], 0);
    EXPECT_EQ(v[a], 0);
  }
}

TEST(Chi, IntegerIdentity) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const auto F = FieldSpec::prime(p);
    const auto c = chi(F);
    for (unsigned i = 1; i < p; ++i) {
      const std::array<unsigned, 2> ex{p - i, i};
      const std::uint64_t expected = (binom(p, i) / p) % p;
      EXPECT_EQ(c.coefficient(ex), expected) << "p=" << p << " i=" << i;
    }
    EXPECT_EQ(c.size(), p - 1);
  }
}

TEST(Psi, CocycleUnderConditions) {
  for (unsigned q : {4u, 8u, 9u, 16u, 25u}) {
    const auto F = FieldSpec::default_for(q);
    for_each_quandle(F, [&](const AlexanderFQuandle& Q) {
      for (unsigned a = 1; a < q; ++a)
        for (unsigned s = 0; s < F.m(); ++s) {
          const auto ps = F.p_pow(s);
          if (unity_pair(Q, a + ps)) ASSERT_TRUE(delta_poly(Q, psi(Q, a, ps)).is_zero());
        }
    });
  }
}

TEST(Psi, FrobeniusArgumentGivesZero) {
  const auto Q = make(8, 4);
  EXPECT_TRUE(psi(Q, 4, 2).is_zero());
}

TEST(Psi, PrintedFormIsNotAlwaysClosed) {
  const auto F = FieldSpec::default_for(9);
  std::size_t open = 0;
  for_each_quandle(F, [&](const AlexanderFQuandle& Q) {
    for (unsigned a = 1; a < 9; ++a)
      for (unsigned s = 0; s < 2; ++s)
        if (unity_pair(Q, a + F.p_pow(s)) && !delta_poly(Q, psi_printed(Q, a, F.p_pow(s))).is_zero()) ++open;
  });
  EXPECT_GT(open, 0u);
}

TEST(E0E1, Examples) {
  const auto Q = make(4, 2);
  EXPECT_TRUE(is_cocycle(Q, e0(Q, 2, 1)));
  EXPECT_TRUE(is_cocycle(Q, e1(Q, 1, 2)));
  for (auto fn : {+[](const AlexanderFQuandle& R) { e0(R, 3, 1); }, +[](const AlexanderFQuandle& R) { e1(R, 1, 3); }}) {
    try {
      fn(Q);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::NotDivisibleByP);
    }
  }
}

TEST(E1, BoundaryExponentIsReducedAndFlagged) {
  const auto Q = make(4, 2);
  bool flagged = false;
  for (const auto& c : h3_candidates(Q))
    if (c.family == "E1" && c.reduced) flagged = true;
  EXPECT_TRUE(flagged);
}

TEST(FMonomial, Examples) {
  const auto Q = make(8, 4);
  EXPECT_TRUE(is_cocycle(Q, f_monomial(Q.field(), 1, 2, 4)));
  EXPECT_EQ(f_monomial(Q.field(), 1, 2, 0), monomial(Q.field(), {1, 2, 0}));
  EXPECT_EQ(f4_monomial(Q.field(), 1, 2, 4, 0), monomial(Q.field(), {1, 2, 4, 0}));
}

TEST(QSet, OddMinusOneIsAllCaseI) {
  for (unsigned q : {9u, 25u, 27u, 81u}) {
    const auto Q = minus_one(q);
    const unsigned m = Q.field().m();
    std::size_t shared = 0;
    for (unsigned v = 0; v < m; ++v)
      for (unsigned u = 0; u < m; ++u)
        for (unsigned t = 0; t < m; ++t)
          for (unsigned s = 0; s < m; ++s)
            if (v < t && u < s && u <= t) ++shared;
    const auto qs = q_set(Q);
    EXPECT_EQ(qs.size(), shared);
    for (const auto& x : qs) EXPECT_EQ(x.tag, GammaCase::I);
  }
}

TEST(QSet, TagsAreUniqueAndEmptyForF8Example) {
  const auto F4 = FieldSpec::default_for(4);
  for_each_quandle(F4, [&](const AlexanderFQuandle& Q) {
    std::set<std::tuple<unsigned, unsigned, unsigned, unsigned>> seen;
    for (const auto& x : q_set(Q)) EXPECT_TRUE(seen.insert({x.v, x.u, x.t, x.s}).second);
  });
  EXPECT_TRUE(q_set(make(8, 4)).empty());
}

TEST(Gamma, EveryTupleIsACocycle) {
  std::set<std::string> cases;
  for (unsigned q : {4u, 8u, 9u, 16u, 25u, 81u}) {
    const auto F = field(q);
    for_each_quandle(F, [&](const AlexanderFQuandle& Q) {
      for (const auto& x : q_set(Q)) {
        const auto g = gamma(Q, x);
        ASSERT_TRUE(is_quandle_cochain(g));
        ASSERT_TRUE(delta_poly(Q, g).is_zero()) << q << " " << gamma_case_name(x.tag);
        cases.insert(gamma_case_name(x.tag));
      }
    });
  }
  EXPECT_EQ(cases, (std::set<std::string>{"I", "II", "III", "IV", "V"}));
}

TEST(Gamma, CaseIExampleShape) {
  const auto Q = minus_one(9);
  const QTuple x{0, 0, 1, 1, GammaCase::I};
  EXPECT_EQ(gamma(Q, x), monomial(Q.field(), {1, 4, 3}));
}

TEST(Gamma, SingularCaseIICoefficient) {
  const auto F = FieldSpec::default_for(16);
  bool hit = false;
  for_each_quandle(F, [&](const AlexanderFQuandle& Q) {
    for (unsigned u = 0; u < 4 && !hit; ++u)
      for (unsigned s = 0; s < 4 && !hit; ++s)
        if (F.mul(F.pow(Q.omega(), F.p_pow(u)), F.pow(Q.f_coeff(), F.p_pow(s))) == 1) {
          try {
            gamma(Q, {0, u, 3, s, GammaCase::II});
          } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::CaseIICoefficientSingular);
            hit = true;
          }
        }
  });
  EXPECT_TRUE(hit);
}

TEST(Candidates, PaperExamples) {
  const auto h2 = h2_candidates(make(4, 2));
  ASSERT_EQ(h2.size(), 1u);
  EXPECT_EQ(h2[0].cochain, monomial(FieldSpec::default_for(4), {1, 2}));
  const auto h3 = h3_candidates(make(8, 4));
  ASSERT_EQ(h3.size(), 1u);
  EXPECT_EQ(h3[0].label, "F(1,2,4)");
  const auto h4 = h4_candidates(make(16, 4));
  ASSERT_EQ(h4.size(), 1u);
  EXPECT_EQ(h4[0].family, "A");
  EXPECT_EQ(h4[0].cochain, monomial(FieldSpec::default_for(16), {1, 2, 4, 8}));
}

TEST(Candidates, AreQuandleCocyclesWithDistinctLabels) {
  for (unsigned q : {4u, 8u, 9u}) {
    const auto F = FieldSpec::default_for(q);
    for_each_quandle(F, [&](const AlexanderFQuandle& Q) {
      for (unsigned n = 2; n <= 4; ++n) {
        std::set<std::string> labels;
        for (const auto& c : candidates_for(Q, n)) {
          ASSERT_TRUE(is_quandle_cochain(c.cochain)) << c.label;
          ASSERT_TRUE(delta_poly(Q, c.cochain).is_zero()) << c.label;
          std::string key = c.family;
          for (unsigned i : c.indices) key += "," + std::to_string(i);
          EXPECT_TRUE(labels.insert(key).second) << key;
        }
      }
    });
  }
}

TEST(Families, CatalogMembersHoldOverSmallFields) {
  for (unsigned q : {4u, 8u, 9u}) {
    const auto F = FieldSpec::default_for(q);
    for_each_quandle(F, [&](const AlexanderFQuandle& Q) {
      for (const auto& def : family_catalog())
        for_each_index(def, F, [&](std::span<const unsigned> idx) {
          if (!def.condition(Q, idx)) return;
          const auto c = def.build(Q, idx);
          ASSERT_EQ(c.arity(), def.arity);
          ASSERT_TRUE(is_quandle_cochain(c)) << def.id;
          ASSERT_TRUE(delta_poly(Q, c).is_zero()) << def.id;
        });
    });
  }
}

TEST(Families, ExtrasCheckConditions) {
  const auto Q = make(8, 4);
  const std::array<unsigned, 5> idx{0, 0, 1, 2, 0};
  try {
    prop5_extras(Q, "P5M1", idx);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ConditionViolation);
  }
  EXPECT_FALSE(prop5_extras_unchecked(Q, "P5M1", idx).is_zero());
  EXPECT_THROW(prop5_extras(Q, "F", idx), Error);
  try {
    find_family("NOPE");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownProposition);
  }
}

TEST(Families, UncheckedViolationsProduceNonzeroDelta) {
  for (const auto& def : family_catalog()) {
    bool nonzero = false;
    for (unsigned q : {4u, 8u, 9u}) {
      const auto F = FieldSpec::default_for(q);
      for_each_quandle(F, [&](const AlexanderFQuandle& Q) {
        if (nonzero) return;
        for_each_index(def, F, [&](std::span<const unsigned> idx) {
          if (nonzero || def.condition(Q, idx)) return;
          try {
            if (!delta_poly(Q, def.build(Q, idx)).is_zero()) nonzero = true;
          } catch (const Error&) {
          }
        });
      });
    }
    RecordProperty(def.id, nonzero ? "violations-nonzero" : "no-nonzero-violation");
  }
}
