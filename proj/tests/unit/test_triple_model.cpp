#include <gtest/gtest.h>

#include "oracles.hpp"
#include "triples/errors.hpp"
#include "triples/triple_model.hpp"

using triples::DomainError;
using triples::Rational;
using triples::SubtripleType;
using triples::TripleType;

TEST(Genus, RequiresAtLeastTwo) {
  EXPECT_THROW(triples::Genus(1), DomainError);
  EXPECT_THROW(triples::Genus(-3), DomainError);
  EXPECT_EQ(triples::Genus(3).two_g_minus_two(), 4);
}

TEST(TripleType, Invariants) {
  EXPECT_THROW(TripleType(0, 0, 0, 0), DomainError);
  EXPECT_THROW(TripleType(-1, 1, 0, 0), DomainError);
  EXPECT_THROW(TripleType(1, 0, 2, 1), DomainError);
  EXPECT_THROW(TripleType(0, 1, 1, 0), DomainError);
  EXPECT_NO_THROW(TripleType(1, 0, 2, 0));
  EXPECT_TRUE(TripleType(2, 1, 3, 0).is_ambient());
  EXPECT_FALSE(TripleType(1, 0, 2, 0).is_ambient());
  EXPECT_THROW(triples::require_ambient(TripleType(1, 0, 2, 0), "test"), DomainError);
}

TEST(TripleType, Slopes) {
  const TripleType t(2, 1, 3, 0);
  EXPECT_EQ(t.mu1(), Rational(3, 2));
  EXPECT_EQ(t.mu2(), Rational(0));
  EXPECT_EQ(t.total_slope(), Rational(1));
  EXPECT_EQ(t.str(), "(2,1,3,0)");
  EXPECT_THROW(TripleType(0, 1, 0, 0).mu1(), DomainError);
  EXPECT_EQ(triples::alpha_slope(t, Rational(3)), Rational(2));
}

TEST(TripleType, AlphaSlopeMatchesDefinitionOverSweep) {
  oracle::sweep(5, 4, [](const TripleType& t) {
    for (const Rational a : {Rational(0), Rational(1, 3), Rational(5, 2), Rational(-7, 4)}) {
      EXPECT_EQ(triples::alpha_slope(t, a), oracle::mu_alpha(t, a)) << t;
    }
  });
}

TEST(TripleType, ComponentwiseArithmetic) {
  const TripleType t(2, 1, 3, 0);
  const TripleType sub(1, 0, 2, 0);
  EXPECT_EQ(t - sub, TripleType(1, 1, 1, 0));
  EXPECT_EQ(sub + (t - sub), t);
  EXPECT_THROW(sub - t, DomainError);
}

TEST(TripleType, DualizeIsAnInvolution) {
  EXPECT_EQ(triples::dualize(TripleType(2, 1, 3, 0)), TripleType(1, 2, 0, -3));
  oracle::sweep(5, 3, [](const TripleType& t) {
    EXPECT_EQ(triples::dualize(triples::dualize(t)), t);
    EXPECT_EQ(oracle::am(triples::dualize(t)), oracle::am(t));
  });
}

TEST(SubtripleType, Invariants) {
  const TripleType t(2, 1, 3, 0);
  EXPECT_THROW(SubtripleType(3, 0, 0, 0, t), DomainError);
  EXPECT_THROW(SubtripleType(0, 0, 0, 0, t), DomainError);
  EXPECT_THROW(SubtripleType(0, 1, 1, 0, t), DomainError);
  EXPECT_THROW(SubtripleType(1, 0, 0, 0, TripleType(1, 0, 2, 0)), DomainError);
  EXPECT_NO_THROW(SubtripleType(2, 1, 3, 0, t));
}

TEST(SubtripleType, DeltaAffineFormVanishesAtTheWall) {
  const SubtripleType sub(1, 0, 2, 0, TripleType(2, 1, 3, 0));
  const auto form = triples::delta_alpha_form(sub);
  EXPECT_EQ(form.slope, Rational(-1, 3));
  EXPECT_EQ(form.constant, Rational(1));
  EXPECT_EQ(form(Rational(3)), Rational(0));
  EXPECT_EQ(triples::delta_alpha(sub, Rational(3)), Rational(0));
  for (const Rational a : {Rational(0), Rational(7, 5), Rational(11)}) {
    EXPECT_EQ(form(a), triples::delta_alpha(sub, a));
  }
}
