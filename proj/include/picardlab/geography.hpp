#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "picardlab/arith.hpp"
#include "picardlab/constructions.hpp"

namespace picardlab {

enum class SetId { A1, A2, A3, B, T };

inline constexpr SetId kAllSets[] = {SetId::A1, SetId::A2, SetId::A3, SetId::B, SetId::T};

std::string set_name(SetId id);
SetId parse_set(const std::string& name);  // throws ParameterError

struct GeoPair {
  Integer K2;
  Integer chi;
  SetId set = SetId::A1;
  std::vector<int> params;  // (n), (m, n), (t)

  std::string provenance() const;  // "A2(3,2)"
  friend bool operator==(const GeoPair&, const GeoPair&) = default;
};

// Pair formulas without domain checks.
InvariantPair pair_A1(const Integer& n);
InvariantPair pair_A2(const Integer& m, const Integer& n);
InvariantPair pair_A3(const Integer& m, const Integer& n);
InvariantPair pair_B(const Integer& n);
InvariantPair pair_T(const Integer& t);

// Domains: A1 n >= 2; A2 m >= 3, n even >= 2; A3 m >= 2, n even >= 4;
// B n >= 4; T t even >= 6. Sorted by (chi, K2, params). chi_max >= 3.
std::vector<GeoPair> enumerate_set(SetId which, const Integer& chi_max);
std::vector<GeoPair> enumerate_sets(const std::vector<SetId>& which, const Integer& chi_max);

// K2 >= 1, chi >= 1, Noether K2 >= 2chi - 6, BMY K2 <= 9chi.
bool admissible(const Integer& K2, const Integer& chi);

Rational slope(const GeoPair& p);
Rational slope(const Integer& K2, const Integer& chi);

// 4 + 4(1 - n - mn)/(1 - n + mn^2).
Rational eq1_slope(const Integer& m, const Integer& n);

// Pairs (m, n), 1 <= m <= m_max, even 2 <= n <= n_max, where the slope of
// pair_A2(m, n) differs from eq1_slope(m, n). Empty means the identity holds.
std::vector<std::pair<int, int>> eq1_identity_failures(int m_max, int n_max);

struct SlopeRow {
  int m = 0;
  int n = 0;
  Integer K2;
  Integer chi;
  Rational mu;
  Rational eq1;
  bool identity = false;
  Rational distance;  // |mu - limit|
};

struct SlopeLimitReport {
  enum class Case { FixedN, FixedM };
  Case which = Case::FixedN;
  int fixed = 2;
  int sweep_bound = 0;
  std::vector<SlopeRow> rows;
  Rational limit;
  Rational threshold;
  Rational final_distance;
  bool below_threshold = false;
  bool monotone = false;  // distances strictly decreasing along the sweep
  bool identities_hold = false;

  bool ok() const { return identities_hold && below_threshold; }
};

// Fixed even n >= 2: m = 3..bound, limit 4 - 4/n. Fixed m >= 3: even n = 2..bound, limit 4.
SlopeLimitReport slope_limit_fixed_n(int n, int m_max, const Rational& threshold = Rational(1, 100));
SlopeLimitReport slope_limit_fixed_m(int m, int n_max, const Rational& threshold = Rational(1, 50));

enum class ClaimStatus { Verified, RefutedWithinBound, VerifiedUnderRelaxedAssumption };
std::string status_name(ClaimStatus status);

struct ClaimResult {
  std::string claim_id;
  std::string statement;
  ClaimStatus status = ClaimStatus::Verified;
  std::vector<std::string> witnesses;
  Integer bound;
  std::vector<std::string> notes;
};

struct WindowCount {
  Integer low;
  Integer high;
  std::size_t count = 0;
};

struct TAuditRow {
  int t = 0;
  InvariantPair pair;
  bool in_A3 = false;          // value of A3 at (t-3, t), inside A3's domain
  bool a2_formula_match = false;  // value of A2 at (t/2-1, t-1)
  bool in_A2_strict = false;   // element of the enumerated A2
  std::vector<std::string> a2_violations;  // printed constraints broken by (t/2-1, t-1)
};

struct SetRelationsReport {
  Integer chi_max;
  std::vector<ClaimResult> claims;
  std::vector<ClaimResult> ingredients;
  std::vector<TAuditRow> t_audit;
  bool t_in_A3_symbolic = false;
  bool t_in_A2_symbolic = false;
  std::vector<InvariantPair> a2_noether;
  std::vector<InvariantPair> a2_noether_expected;  // (8m-8, 4m-1)
  std::vector<InvariantPair> a3_noether;
  std::size_t strict_a2_a3 = 0;
  std::size_t relaxed_a2_a3 = 0;

  // Every claim verified, possibly under the relaxed assumption.
  bool claims_ok() const;
  bool ingredient_holds(const std::string& id) const;
};

SetRelationsReport set_relations_report(const Integer& chi_max);

struct LineRow {
  int m = 0;
  InvariantPair pair;
  Integer lhs;
  Integer rhs;
  bool holds = false;
};

struct LinesReport {
  int theorem = 2;
  int n = 2;
  std::vector<LineRow> rows;
  Rational line_slope;
  bool below_severi = false;
  bool all_hold() const;
};

// Theorem 2: n K2 = 4(n-1) chi - 4(n+1)(n-1); Theorem 3: (n-1) K2 = 4(n-2) chi - 4n(n-2).
LinesReport lines_report(int theorem, int n, int m_min, int m_max);

nlohmann::ordered_json to_json(const SetRelationsReport& report);
nlohmann::ordered_json to_json(const SlopeLimitReport& report);
std::string format_report(const SetRelationsReport& report);
std::string format_report(const SlopeLimitReport& report);

}  // namespace picardlab
