#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "picardlab/arith.hpp"

namespace picardlab {

enum class SingFamily { A, D, E };

// An ADE surface/curve singularity type: A_k (k >= 1), D_k (k >= 4), E_6/7/8.
class SingType {
 public:
  SingType(SingFamily family, int index);

  static SingType A(int k) { return SingType(SingFamily::A, k); }
  static SingType D(int k) { return SingType(SingFamily::D, k); }
  static SingType E(int k) { return SingType(SingFamily::E, k); }

  SingFamily family() const { return family_; }
  int index() const { return index_; }

  // Number of exceptional (-2)-curves in the minimal resolution.
  int resolution_curve_count() const { return index_; }

  std::string name() const;  // "A3", "D10"
  static SingType parse(const std::string& name);

  friend auto operator<=>(const SingType&, const SingType&) = default;

 private:
  SingFamily family_;
  int index_;
};

char family_letter(SingFamily family);

// Multiset of singularity types.
class SingInventory {
 public:
  SingInventory() = default;
  SingInventory(std::initializer_list<std::pair<SingType, Integer>> entries);

  void add(const SingType& type, const Integer& count = 1);
  void merge(const SingInventory& other);

  Integer count(const SingType& type) const;
  Integer total() const;
  bool empty() const { return counts_.empty(); }
  const std::map<SingType, Integer>& entries() const { return counts_; }

  // "{4×D4, 4×A3}" with D before A, larger indices first.
  std::string to_string() const;

  friend bool operator==(const SingInventory&, const SingInventory&) = default;

 private:
  std::map<SingType, Integer> counts_;
};

// Local germ of a branch divisor at a point; nullopt means smooth there.
using BranchGerm = std::optional<SingType>;

std::string germ_name(const BranchGerm& germ);

// Site annotations for branch singularities.
struct OffSpecialLoci {
  friend bool operator==(const OffSpecialLoci&, const OffSpecialLoci&) = default;
};

// On a branch fiber of a cyclic cover, transversal to it; the germ must be A_{n-1}.
struct OnBranchFiberTransversal {
  int parity_n = 2;
  friend bool operator==(const OnBranchFiberTransversal&, const OnBranchFiberTransversal&) = default;
};

// Bidouble configuration: the germ belongs to B_carrier; `others` are the
// remaining B_j passing through the point (smooth there), meeting the carrier
// with the given contact order.
struct BidoubleSite {
  int carrier = 1;
  std::vector<int> others;
  int contact = 1;
  friend bool operator==(const BidoubleSite&, const BidoubleSite&) = default;
};

using Site = std::variant<OffSpecialLoci, OnBranchFiberTransversal, BidoubleSite>;

struct ScenarioEntry {
  BranchGerm germ;
  Site site;
  Integer count = 1;
  std::string note;

  friend bool operator==(const ScenarioEntry&, const ScenarioEntry&) = default;
};

using BranchSingScenario = std::vector<ScenarioEntry>;

std::string describe(const ScenarioEntry& entry);

Integer resolution_curve_count(const SingInventory& inventory);

// Σ i·α_i + Σ j·β_j + Σ k·γ_k + n_indep; n_indep is 1 (plane) or 2 (Hirzebruch).
Integer picard_lower_bound(const SingInventory& inventory, int n_indep);

Integer h11(const Integer& chi, const Integer& K2, const Integer& q);

// Singularity of the union of a branch germ with a smooth curve through it.
// Smooth + smooth with contact c gives A_{2c-1}; A_k + transversal smooth gives D_{k+3}.
SingType union_type(const BranchGerm& branch, int contact);

// Bidouble transport (sites must be BidoubleSite):
//   R0 transverse smooth crossing -> nothing;
//   R1 smooth branches with union A_{2n+1} -> A_n;
//   R2 A_n on B_i, B_j smooth transversal (union D_{n+3}) -> A_{2n+1};
//   R3 ADE germ on B_i away from the others -> two copies.
SingInventory transport_bidouble(const BranchSingScenario& scenario);

// Double covers: one cover singularity of the same type per branch singularity.
SingInventory transport_double(const SingInventory& branch_inventory);

// Pullback under the Z_d cover of Hirzebruch surfaces branched on two fibers:
// transversal on-fiber A_{n-1} (n even) -> A_{dn-1}; off-fiber T -> d copies of T.
SingInventory transport_cyclic(const BranchSingScenario& scenario, int degree);

// Singularities of the branch locus itself: the union type at points where
// several branch divisors meet, the germ elsewhere.
SingInventory branch_locus_inventory(const BranchSingScenario& scenario);

}  // namespace picardlab
