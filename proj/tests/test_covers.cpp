#include <gtest/gtest.h>

#include "picardlab/constructions.hpp"
#include "picardlab/covers.hpp"
#include "picardlab/errors.hpp"

using namespace picardlab;

namespace {

DivisorClass cls(int e, long a, long b) { return DivisorClass::hirzebruch(BaseSurface::hirzebruch(e), a, b); }

DoubleCoverData double_data(const DivisorClass& L, const DivisorClass& B) { return {L.surface(), L, B}; }

BidoubleCoverData plane_bidouble(std::array<long, 3> L, std::array<long, 3> B) {
  BidoubleCoverData d;
  for (int i = 0; i < 3; ++i) {
    d.L[i] = DivisorClass::plane(L[i]);
    d.B[i] = DivisorClass::plane(B[i]);
  }
  return d;
}

void expect_consistent(const SurfaceInvariants& s) {
  EXPECT_EQ(s.chi, 1 + s.p_g - s.q);
  EXPECT_EQ(s.h11, 10 * s.chi - s.K2 - 2 * s.q);
}

}  // namespace

TEST(DoubleCover, Validation) {
  EXPECT_TRUE(validate_double(double_data(cls(2, 4, 9), cls(2, 8, 18))).valid());
  const auto odd = validate_double(double_data(DivisorClass::plane(1), DivisorClass::plane(3)));
  ASSERT_EQ(odd.violations.size(), 1u);
  EXPECT_NE(odd.violations[0].find("B = 2L"), std::string::npos);
  EXPECT_FALSE(validate_double(double_data(DivisorClass::plane(0), DivisorClass::plane(0))).valid());
}

TEST(DoubleCover, Invariants) {
  const SurfaceInvariants t3 = double_invariants(double_data(cls(2, 4, 9), cls(2, 8, 18)));
  EXPECT_EQ(t3, (SurfaceInvariants{24, 13, 12, 0, 106}));
  const SurfaceInvariants k3 = double_invariants(double_data(DivisorClass::plane(3), DivisorClass::plane(6)));
  EXPECT_EQ(k3, (SurfaceInvariants{0, 2, 1, 0, 20}));
  const SurfaceInvariants conic = double_invariants(double_data(DivisorClass::plane(1), DivisorClass::plane(2)));
  EXPECT_EQ(conic.K2, 8);
  EXPECT_EQ(conic.chi, 1);
  EXPECT_EQ(conic.p_g, 0);
  expect_consistent(t3);
  expect_consistent(k3);
  expect_consistent(conic);
  EXPECT_THROW(double_invariants(double_data(DivisorClass::plane(1), DivisorClass::plane(3))), std::invalid_argument);
}

TEST(BidoubleCover, Validation) {
  EXPECT_TRUE(validate_bidouble(plane_bidouble({4, 4, 1}, {1, 1, 7})).valid());
  EXPECT_FALSE(validate_bidouble(plane_bidouble({0, 0, 0}, {0, 0, 0})).valid());
  EXPECT_FALSE(validate_bidouble(plane_bidouble({4, 4, 1}, {1, 1, 5})).valid());
}

TEST(BidoubleCover, Invariants) {
  const SurfaceInvariants t1 = bidouble_invariants(plane_bidouble({3, 3, 1}, {1, 1, 5}));
  EXPECT_EQ(t1, (SurfaceInvariants{1, 3, 2, 0, 29}));
  const SurfaceInvariants t2 = bidouble_invariants(theorem2_building_data(3, 2));
  EXPECT_EQ(t2, (SurfaceInvariants{16, 11, 10, 0, 94}));
  expect_consistent(t1);
  expect_consistent(t2);
}

TEST(BidoubleCover, DegenerateSymmetricData) {
  const BidoubleCoverData d = plane_bidouble({2, 2, 2}, {2, 2, 2});
  EXPECT_TRUE(validate_bidouble(d).valid());
  // chi = 4 + (1/2)·3·2·(2-3) = 1, 2K + ΣB = 0.
  const SurfaceInvariants s = bidouble_invariants(d);
  EXPECT_EQ(s.chi, 1);
  EXPECT_EQ(s.K2, 0);
  EXPECT_EQ(s.p_g, 0);
  expect_consistent(s);
}

TEST(DoubleCover, NegativeIrregularityIsAnError) {
  // L = -H: chi = 2 + (-1)(-4)/2 = 4, p_g = h0(-4H) = 0, so q = -3.
  EXPECT_THROW(double_invariants(double_data(DivisorClass::plane(-1), DivisorClass::plane(-2))), InvariantError);
}

TEST(CyclicPullback, Classes) {
  for (int m = 2; m <= 6; ++m) {
    EXPECT_EQ(cyclic_pullback_class(cls(1, 4, 4), m), cls(m, 4, 4 * m));
    EXPECT_EQ(cyclic_pullback_class(cls(1, 1, 1), m), cls(m, 1, m));
  }
  EXPECT_EQ(cyclic_pullback_class(cls(2, 0, 1), 3), cls(6, 0, 3));
  EXPECT_THROW(cyclic_pullback_class(cls(1, 1, 1), 0), ParameterError);
  EXPECT_THROW(cyclic_pullback_class(DivisorClass::plane(1), 2), IncompatibleClasses);
}

TEST(CyclicPullback, IntersectionScalesByDegree) {
  for (int e = 0; e <= 3; ++e) {
    for (int d = 1; d <= 5; ++d) {
      for (int a1 = -6; a1 <= 6; ++a1) {
        for (int b1 = -6; b1 <= 6; b1 += 3) {
          for (int a2 = -6; a2 <= 6; a2 += 2) {
            for (int b2 = -6; b2 <= 6; ++b2) {
              const DivisorClass x = cls(e, a1, b1), y = cls(e, a2, b2);
              EXPECT_EQ(intersect(cyclic_pullback_class(x, d), cyclic_pullback_class(y, d)), d * intersect(x, y));
            }
          }
        }
      }
    }
  }
}

TEST(CyclicPullback, RamificationFormula) {
  for (int e = 0; e <= 3; ++e) {
    for (int d = 1; d <= 5; ++d) {
      const BaseSurface up = BaseSurface::hirzebruch(d * e);
      const DivisorClass ramification = Integer(2 * (d - 1)) * DivisorClass::fiber(up);
      EXPECT_EQ(canonical_class(up),
                cyclic_pullback_class(canonical_class(BaseSurface::hirzebruch(e)), d) + ramification);
    }
  }
}

TEST(CanonicalAmpleness, Examples) {
  EXPECT_TRUE(canonical_ample_check(plane_bidouble({3, 3, 1}, {1, 1, 5})));
  EXPECT_EQ(canonical_pullback_class(theorem2_building_data(3, 2)), cls(3, 2, 7));
  EXPECT_TRUE(canonical_ample_check(theorem2_building_data(3, 2)));
  // Theorem 3 data at n = 2 is excluded: K + L = F is not ample.
  const DoubleCoverData n2 = double_data(cls(2, 2, 5), cls(2, 4, 10));
  EXPECT_EQ(canonical_pullback_class(n2), cls(2, 0, 1));
  EXPECT_FALSE(canonical_ample_check(n2));
}
