#include "picardlab/constructions.hpp"

#include <sstream>

#include "picardlab/curve_lab.hpp"
#include "picardlab/errors.hpp"

namespace picardlab {

std::string TheoremParams::to_string() const {
  std::string out;
  if (m) out += "m=" + std::to_string(*m) + ",";
  return out + "n=" + std::to_string(n);
}

void check_parameters(const TheoremParams& p) {
  const auto need_m = [&p]() -> int {
    if (!p.m) throw ParameterError("Theorem " + std::to_string(p.theorem) + " needs a value for m");
    return *p.m;
  };
  switch (p.theorem) {
    case 1:
      if (p.m) throw ParameterError("Theorem 1 takes no m parameter");
      if (p.n < 2) throw ParameterError("Theorem 1 requires n >= 2");
      return;
    case 2: {
      const int m = need_m();
      if (m < 3) throw ParameterError("Theorem 2 requires m >= 3");
      if (p.n % 2 != 0) throw ParameterError("Theorem 2 requires n even: n must be even");
      if (p.n < 2) throw ParameterError("Theorem 2 requires n >= 2");
      return;
    }
    case 3: {
      const int m = need_m();
      if (m < 2) throw ParameterError("Theorem 3 requires m >= 2");
      if (p.n % 2 != 0) throw ParameterError("Theorem 3 requires n even: n must be even");
      if (p.n < 4) throw ParameterError("Theorem 3 requires n >= 4");
      return;
    }
    default:
      throw ParameterError("theorem must be 1, 2 or 3, got " + std::to_string(p.theorem));
  }
}

InvariantPair closed_form_invariants(const TheoremParams& p) {
  check_parameters(p);
  const Integer n = p.n;
  if (p.theorem == 1) return {4 * n * n - 12 * n + 9, n * n - n + 1};
  const Integer m = *p.m;
  if (p.theorem == 2) return {4 * m * n * n - 4 * (m + 2) * n + 8, m * n * n - n + 1};
  return {2 * m * n * n - 4 * (m + 1) * n + 8, m * n * (n - 1) / 2 + 1};
}

Integer closed_form_h11(const TheoremParams& p) {
  check_parameters(p);
  const Integer n = p.n;
  if (p.theorem == 1) return Integer(6 * n * n + 2 * n + 1);
  const Integer m = *p.m;
  if (p.theorem == 2) return Integer(6 * m * n * n + (4 * m - 2) * n + 2);
  return Integer(3 * m * n * n + (4 - m) * n + 2);
}

Integer closed_form_pg(const TheoremParams& p) {
  check_parameters(p);
  const Integer n = p.n;
  if (p.theorem == 1) return Integer(n * n - n);
  const Integer m = *p.m;
  if (p.theorem == 2) return Integer(m * n * n - n);
  return Integer(m * n * (n - 1) / 2);
}

namespace {

// Classes on F_1 = Bl_P P^2 transcribed from the plane configuration.
struct BlownUpPlane {
  BaseSurface f1 = BaseSurface::hirzebruch(1);
  DivisorClass curve;      // pullback of C: 2nΔ0 + 2nF
  DivisorClass third_line; // pullback of l3: Δ0 + F
  DivisorClass fiber;      // strict transforms of l1, l2: F

  explicit BlownUpPlane(int n)
      : curve(DivisorClass::hirzebruch(f1, 2 * n, 2 * n)),
        third_line(DivisorClass::hirzebruch(f1, 1, 1)),
        fiber(DivisorClass::fiber(f1)) {}
};

// C's singularities on F_1 as seen by the Z_m cover branched on l1', l2':
// n transversal A_{n-1} on each branch fiber, n more on l3 (off the fibers).
BranchSingScenario curve_scenario_on_f1(int n) {
  return {
      {SingType::A(n - 1), OnBranchFiberTransversal{n}, n, "C ∩ l1'"},
      {SingType::A(n - 1), OnBranchFiberTransversal{n}, n, "C ∩ l2'"},
      {SingType::A(n - 1), OffSpecialLoci{}, n, "C ∩ l3"},
  };
}

bool blowup_center_off_curve(int n) {
  return curve_C(n).evaluate({Rational(0), Rational(0), Rational(1)}) != 0;
}

std::optional<bool> curve_spot_check(int n) {
  if (n > kCurveSpotCheckMaxN) return std::nullopt;
  const SingularPointsReport report = singular_points_report(n);
  if (!report.ok()) return false;
  for (const auto& line : report.lines) {
    if (line.distinct_points != n || !line.transversal || line.type != AkResult{AkResult::Kind::A, n - 1}) return false;
  }
  return report.torus_invariant;
}

void certify(ConstructionReport& r) {
  r.closed_form = closed_form_invariants(r.params);
  r.match = r.computed.K2 == r.closed_form.K2 && r.computed.chi == r.closed_form.chi;
  r.picard_lower = picard_lower_bound(r.cover_inventory, r.n_indep);
  r.h11 = r.computed.h11;
  r.maximal = r.picard_lower == r.h11;
}

void require_valid(const ValidationReport& v) {
  if (v.valid()) return;
  std::string msg = "assembled building data fails validation:";
  for (const auto& s : v.violations) msg += " " + s + ";";
  throw InvariantError(msg);
}

}  // namespace

ConstructionReport build_theorem1(int n) {
  ConstructionReport r;
  r.params = {1, std::nullopt, n};
  check_parameters(r.params);

  const BaseSurface plane = BaseSurface::projective_plane();
  BidoubleCoverData data;
  data.base = plane;
  data.B = {DivisorClass::plane(1), DivisorClass::plane(1), DivisorClass::plane(2 * n + 1)};
  data.L = {DivisorClass::plane(n + 1), DivisorClass::plane(n + 1), DivisorClass::plane(1)};
  require_valid(validate_bidouble(data));

  const SingType c_sing = SingType::A(n - 1);
  r.branch_scenario = {
      {union_type(c_sing, 1), BidoubleSite{3, {}, 1}, n, "C ∩ l3 inside B3"},
      {c_sing, BidoubleSite{3, {1}, 1}, n, "C ∩ l1"},
      {c_sing, BidoubleSite{3, {2}, 1}, n, "C ∩ l2"},
      {std::nullopt, BidoubleSite{1, {2}, 1}, 1, "P = l1 ∩ l2"},
      {std::nullopt, BidoubleSite{1, {3}, 1}, 1, "l1 ∩ l3"},
      {std::nullopt, BidoubleSite{2, {3}, 1}, 1, "l2 ∩ l3"},
  };
  r.base_branch_inventory = branch_locus_inventory(r.branch_scenario);
  r.cover_inventory = transport_bidouble(r.branch_scenario);
  r.computed = bidouble_invariants(data);
  r.ample = canonical_ample_check(data);
  r.building_data = data;
  r.n_indep = 1;
  r.center_off_curve = blowup_center_off_curve(n);
  r.curve_spot_check = curve_spot_check(n);
  certify(r);
  return r;
}

std::array<DivisorClass, 3> theorem2_branch_divisors(int m, int n) {
  check_parameters({2, m, n});
  const BlownUpPlane f1(n);
  const BaseSurface fm = BaseSurface::hirzebruch(m);
  const DivisorClass curve = cyclic_pullback_class(f1.curve, m);
  const DivisorClass third_line = cyclic_pullback_class(f1.third_line, m);
  const DivisorClass section = DivisorClass::negative_section(fm);
  const DivisorClass fiber = DivisorClass::fiber(fm);
  const DivisorClass b3 = section + third_line + curve;
  if (m % 2 == 0) return {DivisorClass::zero(fm), Integer(2) * fiber, b3};
  return {fiber, fiber, b3};
}

std::array<DivisorClass, 3> theorem2_line_bundles(int m, int n, LineBundleReading reading) {
  check_parameters({2, m, n});
  const BaseSurface fm = BaseSurface::hirzebruch(m);
  // The highlighted coefficient: m when corrected, n as printed.
  const int h = reading == LineBundleReading::Corrected ? m : n;
  const Integer a = n + 1;
  const Integer mn = Integer(m) * n;
  const DivisorClass l3 = DivisorClass::fiber(fm);
  if (m % 2 == 0) {
    if (h % 2 != 0) throw ParameterError("non-integral fiber coefficient in L1, L2");
    return {DivisorClass::hirzebruch(fm, a, mn + h / 2 + 1), DivisorClass::hirzebruch(fm, a, mn + h / 2), l3};
  }
  if ((h - 1) % 2 != 0) {
    throw ParameterError("non-integral fiber coefficient mn + (" + std::to_string(h) + " - 1)/2 + 1 in L1, L2");
  }
  const DivisorClass l = DivisorClass::hirzebruch(fm, a, mn + (h - 1) / 2 + 1);
  return {l, l, l3};
}

BidoubleCoverData theorem2_building_data(int m, int n, LineBundleReading reading) {
  BidoubleCoverData data;
  data.base = BaseSurface::hirzebruch(m);
  data.B = theorem2_branch_divisors(m, n);
  data.L = theorem2_line_bundles(m, n, reading);
  return data;
}

ConstructionReport build_theorem2(int m, int n) {
  ConstructionReport r;
  r.params = {2, m, n};
  check_parameters(r.params);

  const BidoubleCoverData data = theorem2_building_data(m, n);
  require_valid(validate_bidouble(data));

  // C on F_1 pulled back to F_m: on-fiber A_{n-1} become A_{mn-1}, the ones on l3 multiply by m.
  const SingInventory pulled = transport_cyclic(curve_scenario_on_f1(n), m);
  const Integer on_fibers = pulled.count(SingType::A(m * n - 1));
  const Integer on_third_line = pulled.count(SingType::A(n - 1));
  if (on_fibers != 2 * n || on_third_line != Integer(m) * n) {
    throw TransportError("unexpected cyclic pullback of C: " + pulled.to_string());
  }

  // Fibers l~1, l~2 sit in B2 (m even) or in B1 and B2 (m odd).
  const int carrier_first = m % 2 == 0 ? 2 : 1;
  const int carrier_second = 2;
  const SingType on_fiber = SingType::A(m * n - 1);
  r.branch_scenario = {
      {union_type(SingType::A(n - 1), 1), BidoubleSite{3, {}, 1}, on_third_line, "C~ ∩ l~3 inside B3"},
      {on_fiber, BidoubleSite{3, {carrier_first}, 1}, n, "C~ ∩ l~1"},
      {on_fiber, BidoubleSite{3, {carrier_second}, 1}, n, "C~ ∩ l~2"},
      {std::nullopt, BidoubleSite{3, {carrier_first}, 1}, 2, "(Δ0 + l~3) ∩ l~1"},
      {std::nullopt, BidoubleSite{3, {carrier_second}, 1}, 2, "(Δ0 + l~3) ∩ l~2"},
  };
  r.base_branch_inventory = branch_locus_inventory(r.branch_scenario);
  r.cover_inventory = transport_bidouble(r.branch_scenario);
  r.computed = bidouble_invariants(data);
  r.ample = canonical_ample_check(data);
  r.building_data = data;
  r.n_indep = 2;
  r.center_off_curve = blowup_center_off_curve(n);
  r.curve_spot_check = curve_spot_check(n);
  certify(r);
  return r;
}

ConstructionReport build_theorem3(int m, int n) {
  ConstructionReport r;
  r.params = {3, m, n};
  check_parameters(r.params);

  const BlownUpPlane f1(n);
  const BaseSurface fm = BaseSurface::hirzebruch(m);
  const DivisorClass curve = cyclic_pullback_class(f1.curve, m);
  const DivisorClass fiber = DivisorClass::fiber(fm);
  DoubleCoverData data;
  data.base = fm;
  data.B = curve + fiber + fiber;
  data.L = DivisorClass::hirzebruch(fm, n, Integer(m) * n + 1);
  require_valid(validate_double(data));

  const SingInventory pulled = transport_cyclic(curve_scenario_on_f1(n), m);
  // Branch divisor B = C~ + l~1 + l~2: on-fiber A_{mn-1} of C~ together with the
  // transversal fiber form D_{mn+2}; the off-fiber A_{n-1} stay as they are.
  const Integer on_fibers = pulled.count(SingType::A(m * n - 1));
  const Integer off_fibers = pulled.count(SingType::A(n - 1));
  r.branch_scenario = {
      {union_type(SingType::A(m * n - 1), 1), OffSpecialLoci{}, on_fibers, "C~ ∩ (l~1 + l~2)"},
      {SingType::A(n - 1), OffSpecialLoci{}, off_fibers, "C~ over C ∩ l3"},
  };
  r.base_branch_inventory = branch_locus_inventory(r.branch_scenario);
  r.cover_inventory = transport_double(r.base_branch_inventory);
  r.computed = double_invariants(data);
  r.ample = canonical_ample_check(data);
  r.building_data = data;
  r.n_indep = 2;
  r.center_off_curve = blowup_center_off_curve(n);
  r.curve_spot_check = curve_spot_check(n);
  certify(r);
  return r;
}

ConstructionReport build(const TheoremParams& params) {
  check_parameters(params);
  switch (params.theorem) {
    case 1: return build_theorem1(params.n);
    case 2: return build_theorem2(*params.m, params.n);
    default: return build_theorem3(*params.m, params.n);
  }
}

std::string format_report(const ConstructionReport& r) {
  std::ostringstream out;
  const auto yes = [](bool b) { return b ? "true" : "false"; };
  out << "Theorem " << r.params.theorem << " (" << r.params.to_string() << ")\n";
  std::visit(
      [&out](const auto& data) {
        using D = std::decay_t<decltype(data)>;
        out << "  base:            " << data.base.name() << "\n";
        if constexpr (std::is_same_v<D, DoubleCoverData>) {
          out << "  building data:   L = " << data.L.to_string() << ", B = " << data.B.to_string() << "\n";
        } else {
          out << "  building data:   L = (" << data.L[0].to_string() << ", " << data.L[1].to_string() << ", "
              << data.L[2].to_string() << "), B = (" << data.B[0].to_string() << ", " << data.B[1].to_string()
              << ", " << data.B[2].to_string() << ")\n";
        }
      },
      r.building_data);
  out << "  branch locus:    " << r.base_branch_inventory.to_string() << "\n";
  out << "  cover:           " << r.cover_inventory.to_string() << "\n";
  out << "  computed:        K2=" << r.computed.K2 << " chi=" << r.computed.chi << " p_g=" << r.computed.p_g
      << " q=" << r.computed.q << " h11=" << r.computed.h11 << "\n";
  out << "  closed form:     K2=" << r.closed_form.K2 << " chi=" << r.closed_form.chi << "\n";
  out << "  picard lower:    " << r.picard_lower << " (n_indep=" << r.n_indep << ")\n";
  out << "  match=" << yes(r.match) << " ample=" << yes(r.ample) << " maximal=" << yes(r.maximal)
      << " center_off_curve=" << yes(r.center_off_curve) << "\n";
  out << "  curve check:     "
      << (r.curve_spot_check ? (*r.curve_spot_check ? "A_{n-1} points confirmed on l1, l2, l3" : "FAILED") : "skipped (n > 6)")
      << "\n";
  return out.str();
}

}  // namespace picardlab
