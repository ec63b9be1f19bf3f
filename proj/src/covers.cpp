#include "picardlab/covers.hpp"

#include "picardlab/errors.hpp"

namespace picardlab {

namespace {

bool on_base(const DivisorClass& d, const BaseSurface& base) { return d.surface() == base; }

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
  return out;
}

// Shared tail of both invariant calculations.
SurfaceInvariants finish(Integer K2, Integer chi, Integer p_g) {
  Integer q = 1 + p_g - chi;
  if (q < 0) {
    throw InvariantError("derived irregularity q = 1 + p_g - chi = " + q.get_str() +
                         " is negative; building data is inconsistent");
  }
  Integer h11 = 10 * chi - K2 - 2 * q;
  return SurfaceInvariants{std::move(K2), std::move(chi), std::move(p_g), std::move(q), std::move(h11)};
}

Integer halve_exact(const Integer& twice, const char* what) {
  if (twice % 2 != 0) {
    throw InvariantError(std::string(what) + " = " + twice.get_str() + " is odd; chi would not be integral");
  }
  return Integer(twice / 2);
}

}  // namespace

ValidationReport validate_double(const DoubleCoverData& data) {
  ValidationReport report;
  if (!on_base(data.L, data.base) || !on_base(data.B, data.base)) {
    report.violations.push_back("L and B must be classes on " + data.base.name());
    return report;
  }
  if (!(data.B == Integer(2) * data.L)) {
    report.violations.push_back("B = 2L fails: B = " + data.B.to_string() + ", 2L = " + (Integer(2) * data.L).to_string());
  }
  if (data.L.is_zero()) report.violations.push_back("L must be non-trivial");
  return report;
}

ValidationReport validate_bidouble(const BidoubleCoverData& data) {
  ValidationReport report;
  for (int i = 0; i < 3; ++i) {
    if (!on_base(data.L[i], data.base) || !on_base(data.B[i], data.base)) {
      report.violations.push_back("L_i and B_i must be classes on " + data.base.name());
      return report;
    }
  }
  const auto& L = data.L;
  const auto& B = data.B;
  const Integer two = 2;
  if (!(two * L[0] == B[1] + B[2])) {
    report.violations.push_back("2L1 = B2 + B3 fails: 2L1 = " + (two * L[0]).to_string() +
                                ", B2 + B3 = " + (B[1] + B[2]).to_string());
  }
  if (!(two * L[1] == B[0] + B[2])) {
    report.violations.push_back("2L2 = B1 + B3 fails: 2L2 = " + (two * L[1]).to_string() +
                                ", B1 + B3 = " + (B[0] + B[2]).to_string());
  }
  if (!(L[2] == L[0] + L[1] - B[2])) {
    report.violations.push_back("L3 = L1 + L2 - B3 fails: L3 = " + L[2].to_string() +
                                ", L1 + L2 - B3 = " + (L[0] + L[1] - B[2]).to_string());
  }
  for (int i = 0; i < 3; ++i) {
    if (L[i].is_zero()) report.violations.push_back("L" + std::to_string(i + 1) + " must be non-trivial");
  }
  return report;
}

SurfaceInvariants double_invariants(const DoubleCoverData& data) {
  if (auto r = validate_double(data); !r.valid()) {
    throw std::invalid_argument("invalid double cover data: " + join(r.violations));
  }
  const DivisorClass K = canonical_class(data.base);
  const DivisorClass KL = K + data.L;
  Integer K2 = 2 * intersect(KL, KL);
  Integer chi = 2 * BaseSurface::holomorphic_euler_characteristic() +
                halve_exact(intersect(data.L, data.L + K), "L(L + K_Y)");
  Integer p_g = BaseSurface::geometric_genus() + h0(KL);
  return finish(std::move(K2), std::move(chi), std::move(p_g));
}

SurfaceInvariants bidouble_invariants(const BidoubleCoverData& data) {
  if (auto r = validate_bidouble(data); !r.valid()) {
    throw std::invalid_argument("invalid bidouble cover data: " + join(r.violations));
  }
  const DivisorClass K = canonical_class(data.base);
  const DivisorClass D = canonical_pullback_class(data);
  Integer K2 = intersect(D, D);
  Integer twice_sum = 0;
  Integer p_g = BaseSurface::geometric_genus();
  for (const auto& Li : data.L) {
    twice_sum += intersect(Li, Li + K);
    p_g += h0(K + Li);
  }
  Integer chi = 4 * BaseSurface::holomorphic_euler_characteristic() + halve_exact(twice_sum, "Σ L_i(L_i + K_Y)");
  return finish(std::move(K2), std::move(chi), std::move(p_g));
}

DivisorClass cyclic_pullback_class(const DivisorClass& d, int degree) {
  if (degree <= 0) throw ParameterError("cyclic cover degree must be positive, got " + std::to_string(degree));
  if (d.surface().is_plane()) throw IncompatibleClasses("cyclic pullback is defined for Hirzebruch surfaces only");
  const BaseSurface target = BaseSurface::hirzebruch(degree * d.surface().e());
  return DivisorClass::hirzebruch(target, d.section_coeff(), Integer(degree * d.fiber_coeff()));
}

DivisorClass canonical_pullback_class(const DoubleCoverData& data) {
  return canonical_class(data.base) + data.L;
}

DivisorClass canonical_pullback_class(const BidoubleCoverData& data) {
  return Integer(2) * canonical_class(data.base) + data.B[0] + data.B[1] + data.B[2];
}

bool canonical_ample_check(const DoubleCoverData& data) { return is_ample(canonical_pullback_class(data)); }

bool canonical_ample_check(const BidoubleCoverData& data) { return is_ample(canonical_pullback_class(data)); }

}  // namespace picardlab
