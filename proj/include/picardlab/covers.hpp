#pragma once

#include <array>
#include <string>
#include <vector>

#include "picardlab/arith.hpp"
#include "picardlab/surface_geometry.hpp"

namespace picardlab {

struct SurfaceInvariants {
  Integer K2;
  Integer chi;
  Integer p_g;
  Integer q;
  Integer h11;

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

// Double cover building data: branch divisor B and line bundle L with B = 2L.
struct DoubleCoverData {
  BaseSurface base = BaseSurface::projective_plane();
  DivisorClass L;
  DivisorClass B;
  friend bool operator==(const DoubleCoverData&, const DoubleCoverData&) = default;
};

// Bidouble cover building data. Index 0..2 stands for L1..L3 and B1..B3.
struct BidoubleCoverData {
  BaseSurface base = BaseSurface::projective_plane();
  std::array<DivisorClass, 3> L;
  std::array<DivisorClass, 3> B;
  friend bool operator==(const BidoubleCoverData&, const BidoubleCoverData&) = default;
};

// Violated cover conditions; empty means the data is valid.
struct ValidationReport {
  std::vector<std::string> violations;

  bool valid() const { return violations.empty(); }
};

ValidationReport validate_double(const DoubleCoverData& data);
ValidationReport validate_bidouble(const BidoubleCoverData& data);

// K^2 = 2(K_Y + L)^2, chi = 2 chi(O_Y) + L(L + K_Y)/2, p_g = p_g(Y) + h0(K_Y + L),
// q derived as 1 + p_g - chi.
SurfaceInvariants double_invariants(const DoubleCoverData& data);

// K^2 = (2K_Y + B1 + B2 + B3)^2, chi = 4 chi(O_Y) + (1/2) Σ L_i(L_i + K_Y),
// p_g = p_g(Y) + Σ h0(K_Y + L_i), q derived.
SurfaceInvariants bidouble_invariants(const BidoubleCoverData& data);

// Pullback along the Z_d cover F_{de} -> F_e branched over two fibers:
// aΔ0 + bF  |->  aΔ0 + dbF. The class must not contain the branch fibers as
// components; that is the caller's responsibility.
DivisorClass cyclic_pullback_class(const DivisorClass& d, int degree);

// The divisor whose pullback is K_X (double) or 2K_X (bidouble).
DivisorClass canonical_pullback_class(const DoubleCoverData& data);
DivisorClass canonical_pullback_class(const BidoubleCoverData& data);

bool canonical_ample_check(const DoubleCoverData& data);
bool canonical_ample_check(const BidoubleCoverData& data);

}  // namespace picardlab
