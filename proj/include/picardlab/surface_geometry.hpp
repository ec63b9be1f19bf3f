#pragma once

#include <string>

#include "picardlab/arith.hpp"

namespace picardlab {

enum class SurfaceKind { ProjectivePlane, Hirzebruch };

// Either the projective plane or the Hirzebruch surface F_e = P(O + O(-e)).
// Both are rational: chi(O) = 1, q = 0, p_g = 0.
class BaseSurface {
 public:
  static BaseSurface projective_plane() { return BaseSurface(SurfaceKind::ProjectivePlane, 0); }
  static BaseSurface hirzebruch(int e);

  SurfaceKind kind() const { return kind_; }
  bool is_plane() const { return kind_ == SurfaceKind::ProjectivePlane; }
  // Self-intersection of the negative section is -e. Zero for the plane.
  int e() const { return e_; }

  static int holomorphic_euler_characteristic() { return 1; }
  static int irregularity() { return 0; }
  static int geometric_genus() { return 0; }

  std::string name() const;

  friend bool operator==(const BaseSurface&, const BaseSurface&) = default;

 private:
  BaseSurface(SurfaceKind kind, int e) : kind_(kind), e_(e) {}

  SurfaceKind kind_ = SurfaceKind::ProjectivePlane;
  int e_ = 0;
};

// A class in Pic(P^2) = Z·H or Pic(F_e) = Z·Δ0 ⊕ Z·F.
class DivisorClass {
 public:
  // Zero class on the plane.
  DivisorClass() : surface_(BaseSurface::projective_plane()) {}

  static DivisorClass plane(Integer d);
  static DivisorClass hirzebruch(const BaseSurface& surface, Integer a, Integer b);
  static DivisorClass zero(const BaseSurface& surface);
  static DivisorClass line() { return plane(1); }
  static DivisorClass negative_section(const BaseSurface& surface);
  static DivisorClass fiber(const BaseSurface& surface);

  const BaseSurface& surface() const { return surface_; }

  // Plane only: the multiple of the line class.
  const Integer& degree() const;
  // Hirzebruch only: coefficients on Δ0 and F.
  const Integer& section_coeff() const;
  const Integer& fiber_coeff() const;

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_effective() const { return a_ >= 0 && b_ >= 0; }

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;
  DivisorClass& operator+=(const DivisorClass& other) { return *this = *this + other; }
  friend DivisorClass operator*(const Integer& k, const DivisorClass& d);

  friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
    return x.surface_ == y.surface_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  // "3H" on the plane, "2D0+5F" on F_e.
  std::string to_string() const;

 private:
  DivisorClass(const BaseSurface& s, Integer a, Integer b)
      : surface_(s), a_(std::move(a)), b_(std::move(b)) {}

  void require_same_surface(const DivisorClass& other) const;

  BaseSurface surface_;
  Integer a_ = 0;  // d on the plane
  Integer b_ = 0;  // always 0 on the plane
};

// Symmetric bilinear pairing: H^2 = 1; Δ0^2 = -e, Δ0·F = 1, F^2 = 0.
Integer intersect(const DivisorClass& d1, const DivisorClass& d2);

// K = -3H on the plane, K = -2Δ0 - (e+2)F on F_e.
DivisorClass canonical_class(const BaseSurface& surface);

// Dimension of the space of global sections, via the pushforward
// O(b) ⊕ O(b-e) ⊕ ... ⊕ O(b-ae) to P^1 on F_e.
Integer h0(const DivisorClass& d);

// Plane: d > 0. F_e: a > 0 and b > a·e.
bool is_ample(const DivisorClass& d);

}  // namespace picardlab
