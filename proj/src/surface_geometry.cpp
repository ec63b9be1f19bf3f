#include "picardlab/surface_geometry.hpp"

#include "picardlab/errors.hpp"

namespace picardlab {

BaseSurface BaseSurface::hirzebruch(int e) {
  if (e < 0) throw ParameterError("Hirzebruch surface parameter e must be >= 0, got " + std::to_string(e));
  return BaseSurface(SurfaceKind::Hirzebruch, e);
}

std::string BaseSurface::name() const {
  return is_plane() ? "P2" : "F_" + std::to_string(e_);
}

DivisorClass DivisorClass::plane(Integer d) {
  return DivisorClass(BaseSurface::projective_plane(), std::move(d), 0);
}

DivisorClass DivisorClass::hirzebruch(const BaseSurface& surface, Integer a, Integer b) {
  if (surface.is_plane()) throw IncompatibleClasses("(a, b) coefficients require a Hirzebruch surface");
  return DivisorClass(surface, std::move(a), std::move(b));
}

DivisorClass DivisorClass::zero(const BaseSurface& surface) { return DivisorClass(surface, 0, 0); }

DivisorClass DivisorClass::negative_section(const BaseSurface& surface) { return hirzebruch(surface, 1, 0); }

DivisorClass DivisorClass::fiber(const BaseSurface& surface) { return hirzebruch(surface, 0, 1); }

const Integer& DivisorClass::degree() const {
  if (!surface_.is_plane()) throw IncompatibleClasses("degree() is only defined on P2, class lives on " + surface_.name());
  return a_;
}

const Integer& DivisorClass::section_coeff() const {
  if (surface_.is_plane()) throw IncompatibleClasses("section coefficient is undefined on P2");
  return a_;
}

const Integer& DivisorClass::fiber_coeff() const {
  if (surface_.is_plane()) throw IncompatibleClasses("fiber coefficient is undefined on P2");
  return b_;
}

void DivisorClass::require_same_surface(const DivisorClass& other) const {
  if (!(surface_ == other.surface_)) {
    throw IncompatibleClasses("incompatible divisor classes: " + surface_.name() + " vs " + other.surface_.name());
  }
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  require_same_surface(other);
  return DivisorClass(surface_, a_ + other.a_, b_ + other.b_);
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
  require_same_surface(other);
  return DivisorClass(surface_, a_ - other.a_, b_ - other.b_);
}

DivisorClass DivisorClass::operator-() const { return DivisorClass(surface_, -a_, -b_); }

DivisorClass operator*(const Integer& k, const DivisorClass& d) {
  return DivisorClass(d.surface_, k * d.a_, k * d.b_);
}

namespace {

std::string term(const Integer& c, const std::string& symbol, bool first) {
  std::string out;
  if (c < 0) out = "-";
  else if (!first) out = "+";
  Integer mag = abs_value(c);
  if (mag != 1) out += mag.get_str();
  return out + symbol;
}

}  // namespace

std::string DivisorClass::to_string() const {
  if (surface_.is_plane()) return is_zero() ? "0" : term(a_, "H", true);
  if (is_zero()) return "0";
  std::string out;
  if (a_ != 0) out += term(a_, "D0", true);
  if (b_ != 0) out += term(b_, "F", out.empty());
  return out;
}

Integer intersect(const DivisorClass& d1, const DivisorClass& d2) {
  if (!(d1.surface() == d2.surface())) {
    throw IncompatibleClasses("incompatible divisor classes: " + d1.surface().name() + " vs " + d2.surface().name());
  }
  if (d1.surface().is_plane()) return Integer(d1.degree() * d2.degree());
  const Integer& a1 = d1.section_coeff();
  const Integer& b1 = d1.fiber_coeff();
  const Integer& a2 = d2.section_coeff();
  const Integer& b2 = d2.fiber_coeff();
  return Integer(-d1.surface().e() * a1 * a2 + a1 * b2 + a2 * b1);
}

DivisorClass canonical_class(const BaseSurface& surface) {
  if (surface.is_plane()) return DivisorClass::plane(-3);
  return DivisorClass::hirzebruch(surface, -2, -(surface.e() + 2));
}

Integer h0(const DivisorClass& d) {
  if (d.surface().is_plane()) {
    const Integer& deg = d.degree();
    if (deg < 0) return 0;
    return Integer((deg + 1) * (deg + 2) / 2);
  }
  const Integer& a = d.section_coeff();
  const Integer& b = d.fiber_coeff();
  if (a < 0) return 0;
  const int e = d.surface().e();
  Integer total = 0;
  // Summands with b - j·e + 1 <= 0 contribute nothing; for e > 0 they form a tail.
  for (Integer j = 0; j <= a; ++j) {
    Integer s = b - j * e + 1;
    if (s <= 0) {
      if (e > 0) break;
      continue;
    }
    total += s;
  }
  return total;
}

bool is_ample(const DivisorClass& d) {
  if (d.surface().is_plane()) return d.degree() > 0;
  const Integer& a = d.section_coeff();
  return a > 0 && d.fiber_coeff() > a * d.surface().e();
}

}  // namespace picardlab
