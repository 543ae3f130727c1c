#include <gtest/gtest.h>

#include "triples/critical_values.hpp"
#include "triples/errors.hpp"
#include "triples/higgs_bridge.hpp"
#include "triples/report.hpp"

using namespace triples;

TEST(MilnorWood, HandEvaluated) {
  const auto a = milnor_wood_ok({1, 1, 0, 0, Genus(2)});
  EXPECT_TRUE(a.ok);
  EXPECT_EQ(a.margin, Rational(1));
  const auto b = milnor_wood_ok({2, 1, 3, 0, Genus(2)});
  EXPECT_TRUE(b.ok);
  EXPECT_EQ(b.margin, Rational(0));
  const auto c = milnor_wood_ok({1, 1, 5, 0, Genus(2)});
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.margin, Rational(-3, 2));
  EXPECT_THROW(milnor_wood_ok({0, 1, 0, 0, Genus(2)}), DomainError);
}

TEST(HiggsToTriple, GammaZero) {
  const auto a = higgs_to_triple({2, 1, -1, 0, Genus(2)}, Vanishing::GammaZero);
  EXPECT_EQ(a.type, TripleType(2, 1, 3, 0));
  EXPECT_EQ(a.alpha, Rational(2));
  EXPECT_TRUE(a.note.empty());
  const auto b = higgs_to_triple({1, 1, 0, 0, Genus(2)}, Vanishing::GammaZero);
  EXPECT_EQ(b.type, TripleType(1, 1, 2, 0));
  EXPECT_EQ(higgs_to_triple({3, 2, 1, -4, Genus(4)}, Vanishing::GammaZero).alpha, Rational(6));
}

TEST(HiggsToTriple, BetaZeroMirrorIsFlagged) {
  const auto a = higgs_to_triple({2, 1, -1, 0, Genus(2)}, Vanishing::BetaZero);
  EXPECT_EQ(a.type, TripleType(1, 2, 2, -1));
  EXPECT_EQ(a.alpha, Rational(2));
  EXPECT_NE(a.note.find("mirror"), std::string::npos);
  EXPECT_EQ(vanishing_from_string(to_string(Vanishing::BetaZero)), Vanishing::BetaZero);
  EXPECT_THROW(vanishing_from_string("delta"), DomainError);
}

TEST(HiggsToTriple, CompositeReportIsTotalUnderMilnorWood) {
  for (int g = 2; g <= 3; ++g) {
    for (std::int64_t p = 1; p <= 3; ++p) {
      for (std::int64_t q = 1; q <= 3; ++q) {
        for (std::int64_t a = -6; a <= 6; ++a) {
          for (std::int64_t b = -6; b <= 6; ++b) {
            const HiggsInvariants h{p, q, a, b, Genus(g)};
            if (!milnor_wood_ok(h).ok) continue;
            for (auto v : {Vanishing::GammaZero, Vanishing::BetaZero}) {
              const auto image = higgs_to_triple(h, v);
              EXPECT_EQ(image.alpha, Rational(2 * g - 2));
              EXPECT_GE(image.type.mu1(), image.type.mu2());
              EXPECT_NO_THROW(build_report(image.type, Genus(g)));
            }
          }
        }
      }
    }
  }
}
