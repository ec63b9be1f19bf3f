#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "picardlab/arith.hpp"
#include "picardlab/polynomial.hpp"

namespace picardlab {

// Homogeneous ternary form in X0, X1, X2.
using HomPoly = Polynomial<3>;
// Germ in local coordinates (x, y) centered at the origin.
using LocalPoly = Polynomial<2>;
// Homogeneous form in two variables (the coordinates left on a coordinate line).
using BinaryForm = Polynomial<2>;

inline const std::array<std::string, 3> kHomogeneousNames{"X0", "X1", "X2"};
inline const std::array<std::string, 2> kLocalNames{"x", "y"};

// (X0^n + X1^n + X2^n)^2 - 4((X0 X1)^n + (X0 X2)^n + (X1 X2)^n), n >= 2.
HomPoly curve_C(int n);

// Restriction to l1 = [X0 = 0], l2 = [X1 = 0] or l3 = [X2 = 0]; the result is a
// form in the two remaining coordinates, in increasing index order.
BinaryForm restrict_to_line(const HomPoly& poly, int line_index);

// Number of distinct points of P^1 where a nonzero binary form vanishes,
// from the square-free part of its dehomogenization (no root isolation).
int distinct_root_count(const BinaryForm& form);

struct ProjectivePoint {
  std::array<Rational, 3> coords;

  std::string to_string() const;
};

// Dehomogenize at X_chart = 1 and translate the point to the origin. The local
// coordinates are the two non-chart variables in increasing index order.
LocalPoly localize(const HomPoly& poly, const ProjectivePoint& point, int chart);

struct AkResult {
  enum class Kind { Smooth, A, CorankAtLeast2 };

  Kind kind = Kind::Smooth;
  int k = 0;  // meaningful for Kind::A

  std::string to_string() const;  // "Smooth", "A3", "CorankAtLeast2"
  friend bool operator==(const AkResult&, const AkResult&) = default;
};

// Recognise Smooth / A_k / corank >= 2 from the jet of f up to total degree
// jet_bound, by diagonalising the quadratic part and completing the square.
// Throws ClassificationError(JetBoundTooSmall) when the jet does not decide.
AkResult classify_Ak(const LocalPoly& f, int jet_bound);

// Starts at 2·expected_k + 4, doubles on an undecided jet up to 64, then
// reports a possibly non-reduced or non-isolated germ.
AkResult classify_Ak_auto(const LocalPoly& f, int expected_k = 2);

inline constexpr int kMaxJetBound = 64;

// Lowest-degree homogeneous part of a germ.
LocalPoly tangent_cone(const LocalPoly& f);

// True when the direction of the line `line` (a linear form through the
// origin) is not a root of the tangent cone of f.
bool transversal_to(const LocalPoly& f, const LocalPoly& line);

struct LineCheck {
  int line_index = 0;
  bool restriction_identity = false;  // restriction == (u^n - v^n)^2
  int distinct_points = 0;
  ProjectivePoint representative;
  int chart = 0;
  bool gradient_vanishes = false;
  std::optional<AkResult> type;
  bool transversal = false;
};

struct SingularPointsReport {
  int n = 0;
  std::array<LineCheck, 3> lines;
  bool torus_invariant = false;
  // Name of the first failing stage, if any.
  std::optional<std::string> failure;

  bool ok() const { return !failure.has_value(); }
  std::string summary() const;
  // The report only inspects the three coordinate lines.
  static const char* limitation();
};

inline constexpr int kDefaultMaxCurveDegreeN = 8;

SingularPointsReport singular_points_report(int n, int max_n = kDefaultMaxCurveDegreeN);

}  // namespace picardlab
