#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "picardlab/covers.hpp"
#include "picardlab/singularities.hpp"

namespace picardlab {

struct TheoremParams {
  int theorem = 1;
  std::optional<int> m;  // Theorems 2 and 3 only
  int n = 2;

  std::string to_string() const;  // "n=2" or "m=3,n=2"
  friend bool operator==(const TheoremParams&, const TheoremParams&) = default;
};

struct InvariantPair {
  Integer K2;
  Integer chi;
  friend bool operator==(const InvariantPair&, const InvariantPair&) = default;
};

// Throws ParameterError naming the violated constraint:
// Theorem 1: n >= 2; Theorem 2: m >= 3, n even >= 2; Theorem 3: m >= 2, n even >= 4.
void check_parameters(const TheoremParams& params);

// Closed forms: (4n^2-12n+9, n^2-n+1), (4mn^2-4(m+2)n+8, mn^2-n+1),
// (2mn^2-4(m+1)n+8, mn(n-1)/2+1).
InvariantPair closed_form_invariants(const TheoremParams& params);

// Value of h^{1,1} stated for each family: 6n^2+2n+1, 6mn^2+(4m-2)n+2, 3mn^2+(4-m)n+2.
Integer closed_form_h11(const TheoremParams& params);

// Closed form of p_g: n^2-n, mn^2-n, mn(n-1)/2.
Integer closed_form_pg(const TheoremParams& params);

using BuildingData = std::variant<DoubleCoverData, BidoubleCoverData>;

struct ConstructionReport {
  TheoremParams params;
  BuildingData building_data;
  // Where each branch singularity sits; drives the cover transport.
  BranchSingScenario branch_scenario;
  // Singularities of the branch locus on the base.
  SingInventory base_branch_inventory;
  SingInventory cover_inventory;
  SurfaceInvariants computed;
  InvariantPair closed_form;
  int n_indep = 1;
  bool ample = false;
  Integer picard_lower;
  Integer h11;
  bool maximal = false;
  bool match = false;
  // The blown-up point P = l1 ∩ l2 = (0:0:1) is not on C.
  bool center_off_curve = false;
  // Curve laboratory confirmation of the A_{n-1} points and their transversality
  // to the lines; only run for n <= kCurveSpotCheckMaxN.
  std::optional<bool> curve_spot_check;

  // match, maximal, ample all hold.
  bool certified() const { return match && maximal && ample; }

  friend bool operator==(const ConstructionReport&, const ConstructionReport&) = default;
};

inline constexpr int kCurveSpotCheckMaxN = 6;

// How to read the highlighted coefficient in the Theorem 2 line bundles.
enum class LineBundleReading {
  Corrected,  // mn + m/2 (+1); (n+1)Δ0 + (mn + (m-1)/2 + 1)F for odd m
  Printed,    // mn + n/2 (+1); non-integral for odd m
};

// Branch divisors B1, B2, B3 on F_m used by Theorem 2 (parity split on m).
std::array<DivisorClass, 3> theorem2_branch_divisors(int m, int n);
std::array<DivisorClass, 3> theorem2_line_bundles(int m, int n, LineBundleReading reading);
BidoubleCoverData theorem2_building_data(int m, int n, LineBundleReading reading = LineBundleReading::Corrected);

ConstructionReport build_theorem1(int n);
ConstructionReport build_theorem2(int m, int n);
ConstructionReport build_theorem3(int m, int n);
ConstructionReport build(const TheoremParams& params);

// Human-readable multi-line rendering.
std::string format_report(const ConstructionReport& report);

}  // namespace picardlab
