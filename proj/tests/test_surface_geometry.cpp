#include <gtest/gtest.h>

#include <random>

#include "picardlab/errors.hpp"
#include "picardlab/surface_geometry.hpp"

using namespace picardlab;

namespace {

DivisorClass cls(int e, long a, long b) { return DivisorClass::hirzebruch(BaseSurface::hirzebruch(e), a, b); }

// Sections of aΔ0 + bF on F_e as monomials: points (i, j) of the toric polygon
// 0 <= j <= a, 0 <= i <= b - e·j.
long lattice_points(int e, long a, long b) {
  long count = 0;
  for (long j = 0; j <= a; ++j) {
    for (long i = 0; i <= b - e * j; ++i) ++count;
  }
  return count;
}

}  // namespace

TEST(Intersection, BasisValues) {
  EXPECT_EQ(intersect(DivisorClass::plane(2), DivisorClass::plane(3)), 6);
  EXPECT_EQ(intersect(cls(2, 1, 2), cls(2, 1, 0)), 0);
  // (2Δ0 + 5F)^2 on F_2; twice it is K^2 of the Theorem 3 surface at m=2, n=4.
  EXPECT_EQ(intersect(cls(2, 2, 5), cls(2, 2, 5)), 12);
}

TEST(Intersection, MixedSurfacesAreRejected) {
  EXPECT_THROW(intersect(DivisorClass::plane(1), cls(1, 1, 0)), IncompatibleClasses);
  EXPECT_THROW(cls(1, 1, 0) + cls(2, 1, 0), IncompatibleClasses);
  EXPECT_THROW(DivisorClass::plane(1).section_coeff(), IncompatibleClasses);
  EXPECT_THROW(BaseSurface::hirzebruch(-1), ParameterError);
}

TEST(Intersection, BilinearAndSymmetric) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int e = 0; e <= 5; ++e) {
    for (int trial = 0; trial < 40; ++trial) {
      const DivisorClass x = cls(e, coeff(rng), coeff(rng));
      const DivisorClass y = cls(e, coeff(rng), coeff(rng));
      const DivisorClass z = cls(e, coeff(rng), coeff(rng));
      const Integer s = coeff(rng), t = coeff(rng);
      EXPECT_EQ(intersect(x, y), intersect(y, x));
      EXPECT_EQ(intersect(s * x + t * y, z), s * intersect(x, z) + t * intersect(y, z));
    }
  }
}

TEST(CanonicalClass, StandardValuesAndFiberAdjunction) {
  EXPECT_EQ(canonical_class(BaseSurface::projective_plane()), DivisorClass::plane(-3));
  EXPECT_EQ(canonical_class(BaseSurface::hirzebruch(1)), cls(1, -2, -3));
  for (int e = 0; e <= 5; ++e) {
    const BaseSurface s = BaseSurface::hirzebruch(e);
    const DivisorClass f = DivisorClass::fiber(s);
    EXPECT_EQ(intersect(canonical_class(s), f), -2);
    EXPECT_EQ(intersect(f, f), 0);
    // K^2 = 8 on every Hirzebruch surface.
    EXPECT_EQ(intersect(canonical_class(s), canonical_class(s)), 8);
  }
}

TEST(H0, Examples) {
  EXPECT_EQ(h0(DivisorClass::plane(2)), 6);
  EXPECT_EQ(h0(DivisorClass::plane(-1)), 0);
  EXPECT_EQ(h0(cls(2, 1, 1)), 2);
  EXPECT_EQ(h0(cls(2, 2, 5)), 12);
  EXPECT_EQ(h0(cls(2, -1, 5)), 0);
}

TEST(H0, MatchesLatticePointOracle) {
  for (int e = 0; e <= 5; ++e) {
    for (int a = 0; a <= 12; ++a) {
      for (int b = -12; b <= 12; ++b) {
        EXPECT_EQ(h0(cls(e, a, b)), lattice_points(e, a, b)) << "e=" << e << " a=" << a << " b=" << b;
      }
    }
  }
}

TEST(H0, RiemannRochOnNefClasses) {
  for (int e = 0; e <= 5; ++e) {
    const DivisorClass k = canonical_class(BaseSurface::hirzebruch(e));
    for (int a = 0; a <= 12; ++a) {
      for (int b = a * e; b <= 12 + a * e; ++b) {
        const DivisorClass d = cls(e, a, b);
        EXPECT_EQ(h0(d), intersect(d, d - k) / 2 + 1) << d.to_string();
      }
    }
  }
}

TEST(Ampleness, Examples) {
  EXPECT_TRUE(is_ample(DivisorClass::plane(1)));
  EXPECT_FALSE(is_ample(DivisorClass::plane(0)));
  EXPECT_TRUE(is_ample(cls(3, 2, 7)));
  EXPECT_FALSE(is_ample(cls(2, 1, 2)));
  EXPECT_TRUE(is_ample(cls(0, 1, 1)));
}

TEST(Ampleness, NakaiSanity) {
  for (int e = 0; e <= 5; ++e) {
    const BaseSurface s = BaseSurface::hirzebruch(e);
    for (int a = 0; a <= 12; ++a) {
      for (int b = -12; b <= 12; ++b) {
        const DivisorClass d = cls(e, a, b);
        if (!is_ample(d)) continue;
        EXPECT_GT(intersect(d, d), 0);
        EXPECT_GT(intersect(d, DivisorClass::fiber(s)), 0);
        EXPECT_GT(intersect(d, DivisorClass::negative_section(s)), 0);
      }
    }
  }
}

TEST(DivisorClass, Rendering) {
  EXPECT_EQ(DivisorClass::plane(3).to_string(), "3H");
  EXPECT_EQ(cls(2, 2, 5).to_string(), "2D0+5F");
  EXPECT_EQ(cls(2, -2, -4).to_string(), "-2D0-4F");
}
