#include "picardlab/curve_lab.hpp"

#include "picardlab/errors.hpp"

namespace picardlab {

HomPoly curve_C(int n) {
  if (n < 2) throw ParameterError("curve C needs n >= 2, got " + std::to_string(n));
  const auto un = static_cast<unsigned>(n);
  const HomPoly x0 = HomPoly::monomial({un, 0, 0}, 1);
  const HomPoly x1 = HomPoly::monomial({0, un, 0}, 1);
  const HomPoly x2 = HomPoly::monomial({0, 0, un}, 1);
  const HomPoly sum = x0 + x1 + x2;
  return sum * sum - Rational(4) * (x0 * x1 + x0 * x2 + x1 * x2);
}

BinaryForm restrict_to_line(const HomPoly& poly, int line_index) {
  if (line_index < 1 || line_index > 3) {
    throw ParameterError("line index must be 1, 2 or 3, got " + std::to_string(line_index));
  }
  std::array<BinaryForm, 3> images;
  int next = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == line_index - 1) continue;
    images[static_cast<std::size_t>(i)] = BinaryForm::variable(static_cast<std::size_t>(next++));
  }
  return poly.compose(images);
}

int distinct_root_count(const BinaryForm& form) {
  if (form.is_zero()) throw std::invalid_argument("the zero form vanishes everywhere");
  if (!form.is_homogeneous()) throw std::invalid_argument("binary form must be homogeneous");
  const int degree = form.total_degree();
  // f(t) = F(t, 1); a missing top coefficient means a root at u/v = infinity.
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  for (const auto& [e, c] : form.terms()) coeffs[e[0]] = c;
  const UnivariatePolynomial f(std::move(coeffs));
  const int at_infinity = f.degree() < degree ? 1 : 0;
  return f.squarefree_part().degree() + at_infinity;
}

std::string ProjectivePoint::to_string() const {
  return "(" + picardlab::to_string(coords[0]) + ":" + picardlab::to_string(coords[1]) + ":" +
         picardlab::to_string(coords[2]) + ")";
}

LocalPoly localize(const HomPoly& poly, const ProjectivePoint& point, int chart) {
  if (chart < 0 || chart > 2) throw ParameterError("chart must be 0, 1 or 2, got " + std::to_string(chart));
  const Rational scale = point.coords[static_cast<std::size_t>(chart)];
  if (scale == 0) {
    throw ParameterError("chart coordinate X" + std::to_string(chart) + " of " + point.to_string() + " is zero");
  }
  std::array<Rational, 3> affine;
  for (std::size_t i = 0; i < 3; ++i) affine[i] = point.coords[i] / scale;
  if (poly.evaluate(affine) != 0) throw PointNotOnCurve("point " + point.to_string() + " is not on the curve");
  std::array<LocalPoly, 3> images;
  std::size_t next = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (static_cast<int>(i) == chart) {
      images[i] = LocalPoly::constant(1);
    } else {
      images[i] = LocalPoly::variable(next++) + LocalPoly::constant(affine[i]);
    }
  }
  return poly.compose(images);
}

std::string AkResult::to_string() const {
  switch (kind) {
    case Kind::Smooth: return "Smooth";
    case Kind::A: return "A" + std::to_string(k);
    case Kind::CorankAtLeast2: return "CorankAtLeast2";
  }
  return "?";
}

namespace {

// Truncated bivariate series: rows_[b][a] is the coefficient of x^a y^b, a + b <= bound.
class Jet {
 public:
  Jet(const LocalPoly& f, int bound) : bound_(bound), rows_(static_cast<std::size_t>(bound) + 1) {
    for (int b = 0; b <= bound; ++b) rows_[static_cast<std::size_t>(b)].resize(static_cast<std::size_t>(bound - b) + 1);
    for (const auto& [e, c] : f.terms()) {
      if (static_cast<int>(e[0] + e[1]) <= bound) rows_[e[1]][e[0]] = c;
    }
  }

  const std::vector<Rational>& row(int b) const { return rows_[static_cast<std::size_t>(b)]; }

  // y -> y + h(x), with h of order >= 1.
  void shift_y(const std::vector<Rational>& h) {
    const auto J = static_cast<std::size_t>(bound_);
    // h^k truncated at degree J.
    std::vector<std::vector<Rational>> hp(J + 1, std::vector<Rational>(J + 1));
    hp[0][0] = 1;
    for (std::size_t k = 1; k <= J; ++k) {
      for (std::size_t i = 0; i <= J; ++i) {
        if (hp[k - 1][i] == 0) continue;
        for (std::size_t j = 0; i + j <= J; ++j) {
          if (h[j] != 0) hp[k][i + j] += hp[k - 1][i] * h[j];
        }
      }
    }
    std::vector<std::vector<Rational>> out(J + 1);
    for (std::size_t i = 0; i <= J; ++i) out[i].resize(J - i + 1);
    for (std::size_t b = 0; b <= J; ++b) {
      Integer binom = 1;  // C(b, i) for i = b downwards
      for (std::size_t i = b + 1; i-- > 0;) {
        if (i < b) binom = binom * (i + 1) / (b - i);
        const auto& src = rows_[b];
        const auto& pw = hp[b - i];
        auto& dst = out[i];
        for (std::size_t a = 0; a < src.size(); ++a) {
          if (src[a] == 0) continue;
          const Rational scaled = src[a] * binom;
          for (std::size_t j = 0; a + j < dst.size(); ++j) {
            if (pw[j] != 0) dst[a + j] += scaled * pw[j];
          }
        }
      }
    }
    rows_ = std::move(out);
  }

 private:
  int bound_;
  std::vector<std::vector<Rational>> rows_;
};

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& c : v) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace

AkResult classify_Ak(const LocalPoly& f, int jet_bound) {
  using Kind = ClassificationError::Kind;
  if (jet_bound < 2) throw ClassificationError(Kind::BadInput, "jet bound must be at least 2");
  if (f.coefficient({0, 0}) != 0) throw ClassificationError(Kind::BadInput, "germ does not pass through the origin");
  if (f.is_zero()) throw ClassificationError(Kind::NonIsolated, "zero germ: possibly non-reduced or non-isolated");
  if (!f.homogeneous_part(1).is_zero()) return {AkResult::Kind::Smooth, 0};

  const Rational a = f.coefficient({2, 0});
  const Rational b = f.coefficient({1, 1});
  const Rational c = f.coefficient({0, 2});
  if (a == 0 && b == 0 && c == 0) return {AkResult::Kind::CorankAtLeast2, 0};
  if (b * b - 4 * a * c != 0) return {AkResult::Kind::A, 1};

  // Rank one: make the quadratic part lambda·y^2.
  std::array<LocalPoly, 2> change;
  Rational lambda;
  const LocalPoly x = LocalPoly::variable(0);
  const LocalPoly y = LocalPoly::variable(1);
  if (c != 0) {
    // Q = c (y + (b / 2c) x)^2; new y' = y + (b / 2c) x.
    lambda = c;
    const Rational alpha = b / (2 * c);
    change = {x, y - alpha * x};
  } else {
    lambda = a;
    change = {y, x};
  }
  const auto J = static_cast<unsigned>(jet_bound);
  Jet jet(f.compose(change, J), jet_bound);

  // Complete the square until no term is linear in y; each pass raises the
  // order of the y-linear coefficient by at least one.
  for (int pass = 0; pass <= jet_bound && !all_zero(jet.row(1)); ++pass) {
    std::vector<Rational> h(J + 1);
    const auto& linear = jet.row(1);
    for (std::size_t i = 0; i < linear.size(); ++i) h[i] = -linear[i] / (2 * lambda);
    jet.shift_y(h);
  }
  if (!all_zero(jet.row(1))) {
    throw ClassificationError(Kind::JetBoundTooSmall, "square completion did not terminate within the jet bound");
  }

  const auto& g = jet.row(0);
  for (std::size_t ord = 0; ord < g.size(); ++ord) {
    if (g[ord] == 0) continue;
    if (static_cast<int>(ord) > jet_bound - 1) break;
    return {AkResult::Kind::A, static_cast<int>(ord) - 1};
  }
  throw ClassificationError(Kind::JetBoundTooSmall,
                            "jet bound " + std::to_string(jet_bound) + " too small to determine the A_k type");
}

AkResult classify_Ak_auto(const LocalPoly& f, int expected_k) {
  int bound = std::min(std::max(2 * expected_k + 4, 4), kMaxJetBound);
  while (true) {
    try {
      return classify_Ak(f, bound);
    } catch (const ClassificationError& e) {
      if (e.kind() != ClassificationError::Kind::JetBoundTooSmall) throw;
      if (bound >= kMaxJetBound) {
        throw ClassificationError(ClassificationError::Kind::NonIsolated,
                                  "undetermined up to jet order " + std::to_string(kMaxJetBound) +
                                      ": possibly non-reduced or non-isolated");
      }
      bound = std::min(2 * bound, kMaxJetBound);
    }
  }
}

LocalPoly tangent_cone(const LocalPoly& f) {
  if (f.is_zero()) return f;
  return f.homogeneous_part(static_cast<unsigned>(f.order()));
}

bool transversal_to(const LocalPoly& f, const LocalPoly& line) {
  if (line.total_degree() != 1 || !line.is_homogeneous()) {
    throw std::invalid_argument("line must be a nonzero linear form through the origin");
  }
  // Direction of alpha·x + beta·y = 0 is (beta, -alpha).
  const Rational alpha = line.coefficient({1, 0});
  const Rational beta = line.coefficient({0, 1});
  return tangent_cone(f).evaluate({beta, -alpha}) != 0;
}

const char* SingularPointsReport::limitation() {
  return "only the coordinate lines l1, l2, l3 are inspected; singularities of C off these lines are not searched for";
}

std::string SingularPointsReport::summary() const {
  if (!ok()) return "failed at stage: " + *failure;
  const auto yes = [](bool b) { return b ? "yes" : "no"; };
  bool transversal = true;
  for (const auto& l : lines) transversal = transversal && l.transversal;
  return "3 lines × " + std::to_string(lines[0].distinct_points) + " points, representative " +
         lines[0].type->to_string() + ", transversal: " + yes(transversal) +
         ", torus-invariant: " + yes(torus_invariant);
}

SingularPointsReport singular_points_report(int n, int max_n) {
  if (n < 2 || n > max_n) {
    throw ParameterError("singular point report needs 2 <= n <= " + std::to_string(max_n) + ", got " +
                         std::to_string(n));
  }
  SingularPointsReport report;
  report.n = n;
  const HomPoly C = curve_C(n);
  const auto un = static_cast<unsigned>(n);
  const BinaryForm u_n = BinaryForm::monomial({un, 0}, 1);
  const BinaryForm v_n = BinaryForm::monomial({0, un}, 1);
  const BinaryForm expected = (u_n - v_n) * (u_n - v_n);

  const auto fail = [&report](const std::string& stage) {
    if (!report.failure) report.failure = stage;
  };

  for (int line = 1; line <= 3; ++line) {
    LineCheck& check = report.lines[static_cast<std::size_t>(line - 1)];
    const std::string tag = "(l" + std::to_string(line) + ")";
    check.line_index = line;
    const BinaryForm restriction = restrict_to_line(C, line);
    check.restriction_identity = restriction == expected;
    if (!check.restriction_identity) fail("restriction identity " + tag);
    check.distinct_points = distinct_root_count(restriction);
    if (check.distinct_points != n) fail("distinct point count " + tag);

    const int zero_var = line - 1;
    for (int i = 0; i < 3; ++i) check.representative.coords[static_cast<std::size_t>(i)] = i == zero_var ? 0 : 1;
    check.chart = zero_var == 0 ? 1 : 0;
    LocalPoly local;
    try {
      local = localize(C, check.representative, check.chart);
    } catch (const PointNotOnCurve&) {
      fail("localization " + tag);
      continue;
    }
    check.gradient_vanishes = local.homogeneous_part(1).is_zero();
    if (!check.gradient_vanishes) fail("vanishing gradient " + tag);

    try {
      check.type = classify_Ak_auto(local, n - 1);
    } catch (const ClassificationError&) {
      fail("classification " + tag);
      continue;
    }
    if (!(*check.type == AkResult{AkResult::Kind::A, n - 1})) fail("classification " + tag);

    // The line X_{zero_var} = 0 is a local coordinate axis: the local variable
    // of index (zero_var < chart ? zero_var : zero_var - 1).
    const std::size_t local_index = static_cast<std::size_t>(zero_var < check.chart ? zero_var : zero_var - 1);
    check.transversal = transversal_to(local, LocalPoly::variable(local_index));
    if (!check.transversal) fail("transversality " + tag);
  }

  report.torus_invariant = C.exponents_divisible(0, un) && C.exponents_divisible(1, un) &&
                           C.exponents_divisible(2, un);
  if (!report.torus_invariant) fail("torus invariance");
  return report;
}

}  // namespace picardlab
