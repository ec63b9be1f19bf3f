#include "picardlab/geography.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "picardlab/errors.hpp"
#include "picardlab/polynomial.hpp"

namespace picardlab {

namespace {

using TPoly = Polynomial<1>;

template <class R>
R k(long v);
template <>
Integer k<Integer>(long v) {
  return Integer(v);
}
template <>
TPoly k<TPoly>(long v) {
  return TPoly::constant(Rational(v));
}

Integer half(const Integer& v) {
  if (mpz_even_p(v.get_mpz_t()) == 0) throw std::logic_error("odd value where an even one is required");
  return Integer(v / 2);
}
TPoly half(const TPoly& p) { return Rational(1, 2) * p; }

template <class R>
std::pair<R, R> f_A1(const R& n) {
  return {R(k<R>(4) * n * n - k<R>(12) * n + k<R>(9)), R(n * n - n + k<R>(1))};
}

template <class R>
std::pair<R, R> f_A2(const R& m, const R& n) {
  return {R(k<R>(4) * m * n * n - k<R>(4) * (m + k<R>(2)) * n + k<R>(8)), R(m * n * n - n + k<R>(1))};
}

template <class R>
std::pair<R, R> f_A3(const R& m, const R& n) {
  return {R(k<R>(2) * m * n * n - k<R>(4) * (m + k<R>(1)) * n + k<R>(8)), R(half(R(m * n * (n - k<R>(1)))) + k<R>(1))};
}

template <class R>
std::pair<R, R> f_B(const R& n) {
  const R d = n - k<R>(3);
  return {R(k<R>(2) * d * d), R(half(R((n - k<R>(1)) * (n - k<R>(2)))) + k<R>(1))};
}

template <class R>
std::pair<R, R> f_T(const R& t) {
  return {R(k<R>(2) * t * (t - k<R>(1)) * (t - k<R>(4)) + k<R>(8)),
          R(half(R(t * (t - k<R>(1)) * (t - k<R>(3)))) + k<R>(1))};
}

InvariantPair as_pair(const std::pair<Integer, Integer>& p) { return {p.first, p.second}; }

using Key = std::pair<Integer, Integer>;  // (K2, chi)

Key key_of(const GeoPair& p) { return {p.K2, p.chi}; }
Key key_of(const InvariantPair& p) { return {p.K2, p.chi}; }

std::string pair_string(const Integer& K2, const Integer& chi) {
  return "(" + to_string(K2) + "," + to_string(chi) + ")";
}

bool geo_less(const GeoPair& a, const GeoPair& b) {
  if (a.chi != b.chi) return a.chi < b.chi;
  if (a.K2 != b.K2) return a.K2 < b.K2;
  if (a.set != b.set) return a.set < b.set;
  return a.params < b.params;
}

void push(std::vector<GeoPair>& out, SetId set, const InvariantPair& p, std::vector<int> params) {
  out.push_back({p.K2, p.chi, set, std::move(params)});
}

// A2 values with m >= 3 and any n >= 2.
std::vector<GeoPair> enumerate_a2_parity_relaxed(const Integer& chi_max) {
  std::vector<GeoPair> out;
  for (int n = 2; pair_A2(3, n).chi <= chi_max; ++n) {
    for (int m = 3;; ++m) {
      const InvariantPair p = pair_A2(m, n);
      if (p.chi > chi_max) break;
      push(out, SetId::A2, p, {m, n});
    }
  }
  std::sort(out.begin(), out.end(), geo_less);
  return out;
}

std::map<Key, std::vector<std::string>> index_by_key(const std::vector<GeoPair>& pairs) {
  std::map<Key, std::vector<std::string>> out;
  for (const auto& p : pairs) out[key_of(p)].push_back(p.provenance());
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

constexpr std::size_t kMaxWitnesses = 5;

// Doubling windows [c, 2c] from the smallest chi up to the bound.
std::vector<WindowCount> window_counts(const std::vector<Integer>& chis, const Integer& chi_max) {
  std::vector<WindowCount> out;
  if (chis.empty()) return out;
  const Integer c0 = *std::min_element(chis.begin(), chis.end());
  for (Integer c = c0; 2 * c <= chi_max; c *= 2) {
    WindowCount w{c, Integer(2 * c), 0};
    for (const auto& chi : chis) {
      if (chi >= w.low && chi <= w.high) ++w.count;
    }
    out.push_back(w);
  }
  return out;
}

bool all_windows_nonempty(const std::vector<WindowCount>& ws) {
  return std::all_of(ws.begin(), ws.end(), [](const WindowCount& w) { return w.count > 0; });
}

std::vector<std::string> window_notes(const std::vector<WindowCount>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) {
    out.push_back("chi in [" + to_string(w.low) + "," + to_string(w.high) + "]: " + std::to_string(w.count));
  }
  return out;
}

// Keys in `a` that are not in `b`, with the provenance from `a`.
std::vector<GeoPair> difference(const std::vector<GeoPair>& a, const std::vector<GeoPair>& b) {
  std::set<Key> bk;
  for (const auto& p : b) bk.insert(key_of(p));
  std::vector<GeoPair> out;
  for (const auto& p : a) {
    if (!bk.count(key_of(p))) out.push_back(p);
  }
  return out;
}

std::vector<Integer> chis_of(const std::vector<GeoPair>& ps) {
  std::vector<Integer> out;
  for (const auto& p : ps) out.push_back(p.chi);
  return out;
}

}  // namespace

std::string set_name(SetId id) {
  switch (id) {
    case SetId::A1: return "A1";
    case SetId::A2: return "A2";
    case SetId::A3: return "A3";
    case SetId::B: return "B";
    case SetId::T: return "T";
  }
  return "?";
}

SetId parse_set(const std::string& name) {
  for (SetId id : kAllSets) {
    if (set_name(id) == name) return id;
  }
  throw ParameterError("unknown set '" + name + "' (expected A1, A2, A3, B or T)");
}

std::string GeoPair::provenance() const {
  std::string out = set_name(set) + "(";
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
  return out + ")";
}

InvariantPair pair_A1(const Integer& n) { return as_pair(f_A1(n)); }
InvariantPair pair_A2(const Integer& m, const Integer& n) { return as_pair(f_A2(m, n)); }
InvariantPair pair_A3(const Integer& m, const Integer& n) { return as_pair(f_A3(m, n)); }
InvariantPair pair_B(const Integer& n) { return as_pair(f_B(n)); }
InvariantPair pair_T(const Integer& t) { return as_pair(f_T(t)); }

std::vector<GeoPair> enumerate_set(SetId which, const Integer& chi_max) {
  if (chi_max < 3) throw ParameterError("chi_max must be at least 3, got " + to_string(chi_max));
  std::vector<GeoPair> out;
  switch (which) {
    case SetId::A1:
      for (int n = 2; pair_A1(n).chi <= chi_max; ++n) push(out, which, pair_A1(n), {n});
      break;
    case SetId::A2:
      for (int n = 2; pair_A2(3, n).chi <= chi_max; n += 2) {
        for (int m = 3; pair_A2(m, n).chi <= chi_max; ++m) push(out, which, pair_A2(m, n), {m, n});
      }
      break;
    case SetId::A3:
      for (int n = 4; pair_A3(2, n).chi <= chi_max; n += 2) {
        for (int m = 2; pair_A3(m, n).chi <= chi_max; ++m) push(out, which, pair_A3(m, n), {m, n});
      }
      break;
    case SetId::B:
      for (int n = 4; pair_B(n).chi <= chi_max; ++n) push(out, which, pair_B(n), {n});
      break;
    case SetId::T:
      for (int t = 6; pair_T(t).chi <= chi_max; t += 2) push(out, which, pair_T(t), {t});
      break;
  }
  std::sort(out.begin(), out.end(), geo_less);
  return out;
}

std::vector<GeoPair> enumerate_sets(const std::vector<SetId>& which, const Integer& chi_max) {
  std::vector<GeoPair> out;
  for (SetId id : which) {
    auto part = enumerate_set(id, chi_max);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end(), geo_less);
  return out;
}

bool admissible(const Integer& K2, const Integer& chi) {
  return K2 >= 1 && chi >= 1 && K2 >= 2 * chi - 6 && K2 <= 9 * chi;
}

Rational slope(const Integer& K2, const Integer& chi) {
  if (chi < 1) throw ParameterError("slope needs chi >= 1");
  return ratio(K2, chi);
}

Rational slope(const GeoPair& p) { return slope(p.K2, p.chi); }

Rational eq1_slope(const Integer& m, const Integer& n) {
  return Rational(4 + ratio(Integer(4 * (1 - n - m * n)), Integer(1 - n + m * n * n)));
}

std::vector<std::pair<int, int>> eq1_identity_failures(int m_max, int n_max) {
  std::vector<std::pair<int, int>> out;
  for (int m = 1; m <= m_max; ++m) {
    for (int n = 2; n <= n_max; n += 2) {
      const InvariantPair p = pair_A2(m, n);
      if (slope(p.K2, p.chi) != eq1_slope(m, n)) out.emplace_back(m, n);
    }
  }
  return out;
}

namespace {

SlopeLimitReport finish_slope_report(SlopeLimitReport r) {
  r.identities_hold = std::all_of(r.rows.begin(), r.rows.end(), [](const SlopeRow& row) { return row.identity; });
  r.monotone = true;
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    if (!(r.rows[i].distance < r.rows[i - 1].distance)) r.monotone = false;
  }
  r.final_distance = r.rows.empty() ? Rational(0) : r.rows.back().distance;
  r.below_threshold = !r.rows.empty() && r.final_distance < r.threshold;
  return r;
}

SlopeRow slope_row(int m, int n, const Rational& limit) {
  SlopeRow row;
  row.m = m;
  row.n = n;
  const InvariantPair p = pair_A2(m, n);
  row.K2 = p.K2;
  row.chi = p.chi;
  row.mu = slope(p.K2, p.chi);
  row.eq1 = eq1_slope(m, n);
  row.identity = row.mu == row.eq1;
  row.distance = abs_value(Rational(row.mu - limit));
  return row;
}

}  // namespace

SlopeLimitReport slope_limit_fixed_n(int n, int m_max, const Rational& threshold) {
  if (n < 2 || n % 2 != 0) throw ParameterError("fixed n must be even and >= 2: n must be even");
  if (m_max < 3) throw ParameterError("m sweep bound must be >= 3");
  SlopeLimitReport r;
  r.which = SlopeLimitReport::Case::FixedN;
  r.fixed = n;
  r.sweep_bound = m_max;
  r.threshold = threshold;
  r.limit = Rational(4 - ratio(4, n));
  for (int m = 3; m <= m_max; ++m) r.rows.push_back(slope_row(m, n, r.limit));
  return finish_slope_report(std::move(r));
}

SlopeLimitReport slope_limit_fixed_m(int m, int n_max, const Rational& threshold) {
  if (m < 3) throw ParameterError("fixed m must be >= 3");
  if (n_max < 2) throw ParameterError("n sweep bound must be >= 2");
  SlopeLimitReport r;
  r.which = SlopeLimitReport::Case::FixedM;
  r.fixed = m;
  r.sweep_bound = n_max;
  r.threshold = threshold;
  r.limit = Rational(4);
  for (int n = 2; n <= n_max; n += 2) r.rows.push_back(slope_row(m, n, r.limit));
  return finish_slope_report(std::move(r));
}

std::string status_name(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Verified: return "verified";
    case ClaimStatus::RefutedWithinBound: return "refuted_within_bound";
    case ClaimStatus::VerifiedUnderRelaxedAssumption: return "verified_under_relaxed_assumption";
  }
  return "?";
}

bool SetRelationsReport::claims_ok() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimResult& c) { return c.status != ClaimStatus::RefutedWithinBound; });
}

bool SetRelationsReport::ingredient_holds(const std::string& id) const {
  for (const auto& i : ingredients) {
    if (i.claim_id == id) return i.status == ClaimStatus::Verified;
  }
  throw std::out_of_range("no ingredient " + id);
}

SetRelationsReport set_relations_report(const Integer& chi_max) {
  SetRelationsReport r;
  r.chi_max = chi_max;
  std::map<SetId, std::vector<GeoPair>> sets;
  for (SetId id : kAllSets) sets[id] = enumerate_set(id, chi_max);

  // Claim i: five empty intersections.
  const std::pair<SetId, SetId> disjoint[] = {{SetId::A1, SetId::B},  {SetId::A2, SetId::B},  {SetId::A3, SetId::B},
                                              {SetId::A1, SetId::A2}, {SetId::A1, SetId::A3}};
  for (const auto& [x, y] : disjoint) {
    ClaimResult c;
    c.claim_id = "i." + set_name(x) + "_" + set_name(y);
    c.statement = set_name(x) + " ∩ " + set_name(y) + " is empty";
    c.bound = chi_max;
    const auto iy = index_by_key(sets[y]);
    for (const auto& p : sets[x]) {
      auto it = iy.find(key_of(p));
      if (it != iy.end()) c.witnesses.push_back(pair_string(p.K2, p.chi) + " = " + p.provenance() + " = " + join(it->second, " = "));
    }
    c.status = c.witnesses.empty() ? ClaimStatus::Verified : ClaimStatus::RefutedWithinBound;
    r.claims.push_back(std::move(c));
  }

  // Claim ii: both differences infinite, certified by doubling chi-windows.
  const std::pair<SetId, SetId> diffs[] = {{SetId::A2, SetId::A3}, {SetId::A3, SetId::A2}};
  for (const auto& [x, y] : diffs) {
    const auto d = difference(sets[x], sets[y]);
    const auto ws = window_counts(chis_of(d), chi_max);
    ClaimResult c;
    c.claim_id = "ii." + set_name(x) + "_minus_" + set_name(y);
    c.statement = set_name(x) + " \\ " + set_name(y) + " is infinite";
    c.bound = chi_max;
    for (std::size_t i = 0; i < d.size() && i < kMaxWitnesses; ++i) {
      c.witnesses.push_back(pair_string(d[i].K2, d[i].chi) + " = " + d[i].provenance());
    }
    c.notes.push_back("count " + std::to_string(d.size()));
    for (auto& note : window_notes(ws)) c.notes.push_back(std::move(note));
    c.status = !d.empty() && all_windows_nonempty(ws) ? ClaimStatus::Verified : ClaimStatus::RefutedWithinBound;
    r.claims.push_back(std::move(c));
  }

  // T audit and the symbolic identities in t.
  const TPoly t = TPoly::variable(0);
  const auto t_pair = f_T(t);
  const auto t_a3 = f_A3<TPoly>(t - k<TPoly>(3), t);
  const auto t_a2 = f_A2<TPoly>(Rational(1, 2) * t - k<TPoly>(1), t - k<TPoly>(1));
  r.t_in_A3_symbolic = t_pair == t_a3;
  r.t_in_A2_symbolic = t_pair == t_a2;
  std::set<Key> a2_keys, a3_keys;
  for (const auto& p : sets[SetId::A2]) a2_keys.insert(key_of(p));
  for (const auto& p : sets[SetId::A3]) a3_keys.insert(key_of(p));
  for (const auto& p : sets[SetId::T]) {
    TAuditRow row;
    row.t = p.params[0];
    row.pair = {p.K2, p.chi};
    const int m3 = row.t - 3, n3 = row.t;
    row.in_A3 = m3 >= 2 && n3 >= 4 && n3 % 2 == 0 && pair_A3(m3, n3) == row.pair && a3_keys.count(key_of(row.pair));
    const int m2 = row.t / 2 - 1, n2 = row.t - 1;
    row.a2_formula_match = pair_A2(m2, n2) == row.pair;
    row.in_A2_strict = a2_keys.count(key_of(row.pair)) > 0;
    if (m2 < 3) row.a2_violations.push_back("m = " + std::to_string(m2) + " < 3");
    if (n2 % 2 != 0) row.a2_violations.push_back("n = " + std::to_string(n2) + " is odd");
    r.t_audit.push_back(std::move(row));
  }

  // Claim iii.
  {
    std::vector<GeoPair> strict, relaxed;
    for (const auto& p : sets[SetId::A2]) {
      if (a3_keys.count(key_of(p))) strict.push_back(p);
    }
    for (const auto& p : enumerate_a2_parity_relaxed(chi_max)) {
      if (a3_keys.count(key_of(p))) relaxed.push_back(p);
    }
    r.strict_a2_a3 = strict.size();
    r.relaxed_a2_a3 = relaxed.size();
    const auto strict_ws = window_counts(chis_of(strict), chi_max);
    const auto relaxed_ws = window_counts(chis_of(relaxed), chi_max);
    ClaimResult c;
    c.claim_id = "iii.A2_A3";
    c.statement = "A2 ∩ A3 is infinite";
    c.bound = chi_max;
    c.notes.push_back("strict parity: " + std::to_string(strict.size()) + " common pairs");
    c.notes.push_back("n of either parity in A2: " + std::to_string(relaxed.size()) + " common pairs");
    const bool t_ok = r.t_in_A3_symbolic && r.t_in_A2_symbolic &&
                      std::all_of(r.t_audit.begin(), r.t_audit.end(),
                                  [](const TAuditRow& row) { return row.in_A3 && row.a2_formula_match; });
    c.notes.push_back(std::string("T identities in t: A3(t-3,t) ") + (r.t_in_A3_symbolic ? "holds" : "fails") +
                      ", A2(t/2-1,t-1) " + (r.t_in_A2_symbolic ? "holds" : "fails"));
    if (!strict.empty() && all_windows_nonempty(strict_ws)) {
      c.status = ClaimStatus::Verified;
      for (std::size_t i = 0; i < strict.size() && i < kMaxWitnesses; ++i) {
        c.witnesses.push_back(pair_string(strict[i].K2, strict[i].chi) + " = " + strict[i].provenance());
      }
      for (auto& note : window_notes(strict_ws)) c.notes.push_back(std::move(note));
    } else if (!relaxed.empty() && all_windows_nonempty(relaxed_ws) && t_ok) {
      c.status = ClaimStatus::VerifiedUnderRelaxedAssumption;
      c.notes.push_back("assumption: the A2 formula taken at odd n (and at m = 2 for t = 6)");
      for (std::size_t i = 0; i < relaxed.size() && i < kMaxWitnesses; ++i) {
        c.witnesses.push_back(pair_string(relaxed[i].K2, relaxed[i].chi) + " = " + relaxed[i].provenance());
      }
      for (auto& note : window_notes(relaxed_ws)) c.notes.push_back(std::move(note));
    } else {
      c.status = ClaimStatus::RefutedWithinBound;
    }
    r.claims.push_back(std::move(c));
  }

  // Ingredients of the structural arguments.
  const auto ingredient = [&](const std::string& id, const std::string& statement, std::initializer_list<SetId> over,
                              auto&& holds) {
    ClaimResult c;
    c.claim_id = id;
    c.statement = statement;
    c.bound = chi_max;
    std::size_t failures = 0;
    for (SetId s : over) {
      for (const auto& p : sets[s]) {
        if (holds(p)) continue;
        if (failures++ < kMaxWitnesses) c.witnesses.push_back(pair_string(p.K2, p.chi) + " = " + p.provenance());
      }
    }
    if (failures) c.notes.push_back("counterexamples: " + std::to_string(failures));
    c.status = failures == 0 ? ClaimStatus::Verified : ClaimStatus::RefutedWithinBound;
    r.ingredients.push_back(std::move(c));
  };
  const auto half_square = [](const GeoPair& p) {
    return mpz_even_p(p.K2.get_mpz_t()) != 0 && is_perfect_square(Integer(p.K2 / 2));
  };
  const auto odd = [](const Integer& v) { return mpz_odd_p(v.get_mpz_t()) != 0; };
  ingredient("B.half_K2_square", "K2/2 is a perfect square on B", {SetId::B}, half_square);
  ingredient("A1.K2_odd", "K2 is odd on A1", {SetId::A1}, [&](const GeoPair& p) { return odd(p.K2); });
  ingredient("A2A3.K2_even", "K2 is even on A2 ∪ A3", {SetId::A2, SetId::A3},
             [&](const GeoPair& p) { return !odd(p.K2); });
  ingredient("A2.chi_odd", "chi is odd on A2", {SetId::A2}, [&](const GeoPair& p) { return odd(p.chi); });
  ingredient("A123.half_K2_not_square", "K2/2 is not a perfect square on A1 ∪ A2 ∪ A3",
             {SetId::A1, SetId::A2, SetId::A3}, [&](const GeoPair& p) { return !half_square(p); });

  // Noether-line slices.
  for (const auto& p : sets[SetId::A2]) {
    if (p.K2 == 2 * p.chi - 6) r.a2_noether.push_back({p.K2, p.chi});
  }
  for (int m = 3; 4 * m - 1 <= chi_max; ++m) r.a2_noether_expected.push_back({Integer(8 * m - 8), Integer(4 * m - 1)});
  for (const auto& p : sets[SetId::A3]) {
    if (p.K2 == 2 * p.chi - 6) r.a3_noether.push_back({p.K2, p.chi});
  }
  return r;
}

bool LinesReport::all_hold() const {
  return std::all_of(rows.begin(), rows.end(), [](const LineRow& row) { return row.holds; });
}

LinesReport lines_report(int theorem, int n, int m_min, int m_max) {
  if (theorem != 2 && theorem != 3) throw ParameterError("lines exist for Theorems 2 and 3 only");
  if (n % 2 != 0) throw ParameterError("n must be even");
  if (theorem == 2 && n < 2) throw ParameterError("Theorem 2 line requires n >= 2");
  if (theorem == 3 && n < 4) throw ParameterError("Theorem 3 line requires n >= 4");
  LinesReport r;
  r.theorem = theorem;
  r.n = n;
  const Integer N = n;
  for (int m = m_min; m <= m_max; ++m) {
    LineRow row;
    row.m = m;
    row.pair = closed_form_invariants({theorem, m, n});
    if (theorem == 2) {
      row.lhs = N * row.pair.K2;
      row.rhs = 4 * (N - 1) * row.pair.chi - 4 * (N + 1) * (N - 1);
    } else {
      row.lhs = (N - 1) * row.pair.K2;
      row.rhs = 4 * (N - 2) * row.pair.chi - 4 * N * (N - 2);
    }
    row.holds = row.lhs == row.rhs;
    r.rows.push_back(std::move(row));
  }
  r.line_slope = theorem == 2 ? ratio(Integer(4 * (N - 1)), N) : ratio(Integer(4 * (N - 2)), Integer(N - 1));
  r.below_severi = r.line_slope < 4;
  return r;
}

namespace {

nlohmann::ordered_json claim_json(const ClaimResult& c) {
  return {{"claim_id", c.claim_id}, {"statement", c.statement}, {"status", status_name(c.status)},
          {"witnesses", c.witnesses}, {"bound", to_string(c.bound)}, {"notes", c.notes}};
}

nlohmann::ordered_json pair_json(const InvariantPair& p) { return {{"K2", to_string(p.K2)}, {"chi", to_string(p.chi)}}; }

nlohmann::ordered_json pairs_json(const std::vector<InvariantPair>& ps) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& p : ps) out.push_back(pair_json(p));
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const SetRelationsReport& r) {
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  for (const auto& c : r.claims) claims.push_back(claim_json(c));
  nlohmann::ordered_json ingredients = nlohmann::ordered_json::array();
  for (const auto& c : r.ingredients) ingredients.push_back(claim_json(c));
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : r.t_audit) {
    rows.push_back({{"t", row.t},
                    {"pair", pair_json(row.pair)},
                    {"in_A3", row.in_A3},
                    {"a2_formula_match", row.a2_formula_match},
                    {"in_A2_strict", row.in_A2_strict},
                    {"a2_violations", row.a2_violations}});
  }
  return {{"chi_max", to_string(r.chi_max)},
          {"claims", claims},
          {"ingredients", ingredients},
          {"t_audit", {{"symbolic_in_A3", r.t_in_A3_symbolic}, {"symbolic_in_A2", r.t_in_A2_symbolic}, {"rows", rows}}},
          {"noether",
           {{"A2", pairs_json(r.a2_noether)}, {"A2_expected", pairs_json(r.a2_noether_expected)}, {"A3", pairs_json(r.a3_noether)}}},
          {"A2_A3_common", {{"strict", r.strict_a2_a3}, {"parity_relaxed", r.relaxed_a2_a3}}}};
}

nlohmann::ordered_json to_json(const SlopeLimitReport& r) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"m", row.m}, {"n", row.n}, {"K2", to_string(row.K2)}, {"chi", to_string(row.chi)},
                    {"mu", to_string(row.mu)}, {"eq1", to_string(row.eq1)}, {"identity", row.identity},
                    {"distance", to_string(row.distance)}});
  }
  return {{"case", r.which == SlopeLimitReport::Case::FixedN ? "fixed_n" : "fixed_m"},
          {"fixed", r.fixed},
          {"sweep_bound", r.sweep_bound},
          {"limit", to_string(r.limit)},
          {"threshold", to_string(r.threshold)},
          {"final_distance", to_string(r.final_distance)},
          {"below_threshold", r.below_threshold},
          {"monotone", r.monotone},
          {"identities_hold", r.identities_hold},
          {"rows", rows}};
}

std::string format_report(const SetRelationsReport& r) {
  std::ostringstream out;
  const auto print_claim = [&out](const ClaimResult& c) {
    out << "  [" << status_name(c.status) << "] " << c.claim_id << ": " << c.statement << "\n";
    for (const auto& w : c.witnesses) out << "      witness " << w << "\n";
    for (const auto& n : c.notes) out << "      " << n << "\n";
  };
  out << "Set relations, chi <= " << r.chi_max << "\n";
  out << "Claims:\n";
  for (const auto& c : r.claims) print_claim(c);
  out << "Ingredients:\n";
  for (const auto& c : r.ingredients) print_claim(c);
  out << "T audit (A3 via (t-3,t), A2 via (t/2-1,t-1)):\n";
  out << "  symbolic identity in t: A3 " << (r.t_in_A3_symbolic ? "holds" : "fails") << ", A2 "
      << (r.t_in_A2_symbolic ? "holds" : "fails") << "\n";
  for (const auto& row : r.t_audit) {
    out << "  t=" << row.t << " " << pair_string(row.pair.K2, row.pair.chi) << " in A3: " << (row.in_A3 ? "yes" : "no")
        << "; A2 formula: " << (row.a2_formula_match ? "matches" : "differs")
        << "; in strict A2: " << (row.in_A2_strict ? "yes" : "no");
    if (!row.a2_violations.empty()) out << " (" << join(row.a2_violations, ", ") << ")";
    out << "\n";
  }
  if (!r.t_audit.empty() && std::none_of(r.t_audit.begin(), r.t_audit.end(),
                                         [](const TAuditRow& row) { return row.in_A2_strict; })) {
    out << "  NOTE: no T pair lies in A2 with n even; membership holds only with odd n allowed\n";
  }
  out << "Noether line: A2 slice " << r.a2_noether.size() << " pairs ("
      << (r.a2_noether == r.a2_noether_expected ? "= {(8m-8,4m-1)}" : "differs from {(8m-8,4m-1)}") << "), A3 slice "
      << r.a3_noether.size() << " pairs\n";
  return out.str();
}

std::string format_report(const SlopeLimitReport& r) {
  std::ostringstream out;
  const bool fixed_n = r.which == SlopeLimitReport::Case::FixedN;
  out << (fixed_n ? "n = " : "m = ") << r.fixed << ", limit " << to_string(r.limit) << "\n";
  out << "     m      n          K2         chi  mu                     |mu - limit|\n";
  for (const auto& row : r.rows) {
    out.width(6);
    out << row.m << " ";
    out.width(6);
    out << row.n << " ";
    out.width(11);
    out << row.K2 << " ";
    out.width(11);
    out << row.chi << "  ";
    std::string mu = to_string(row.mu);
    mu.resize(std::max<std::size_t>(mu.size(), 22), ' ');
    out << mu << " " << to_decimal(row.distance, 6) << (row.identity ? "" : "  eq1 MISMATCH") << "\n";
  }
  out << "final distance " << to_string(r.final_distance) << " ≈ " << to_decimal(r.final_distance, 6) << " vs threshold "
      << to_string(r.threshold) << ": " << (r.below_threshold ? "below" : "NOT below") << "\n";
  out << "identity on every row: " << (r.identities_hold ? "yes" : "no") << ", monotone: " << (r.monotone ? "yes" : "no")
      << "\n";
  return out.str();
}

}  // namespace picardlab
